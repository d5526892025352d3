#pragma once

// The generalized Hecke algebra over Z[mu1,mu2][x_1..x_n]: generators u_i
// with the classical braid relations, u_i^2 = -mu1 u_i, central scalars, and
// mu2 x_i x_{i+1} u_i = 0.
//
// Elements are sums f_w u_w. The last relation makes the coefficient of u_w
// well defined only modulo J_w = <mu2 x_i x_{i+1} : i in supp(w)>; since the
// generators are monomials the normal form is plain term deletion.

#include <map>
#include <vector>

#include "schubcalc/combi.hpp"
#include "schubcalc/ddo.hpp"
#include "schubcalc/report.hpp"

namespace schubcalc {

class HeckeElem {
public:
    using CoeffMap = std::map<Permutation, Poly>;

    explicit HeckeElem(int n) : n_(n) {}

    static HeckeElem scalar(const Poly& c);
    static HeckeElem basis(const Permutation& w, const Poly& c);
    /// c u_i in S_n (coefficients in n variables).
    static HeckeElem generator(int n, int i, const Poly& c);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] const CoeffMap& coeffs() const { return coeffs_; }
    [[nodiscard]] Poly coefficient(const Permutation& w) const;
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    void add(const Permutation& w, const Poly& c);
    HeckeElem& operator+=(const HeckeElem& o);
    HeckeElem& operator-=(const HeckeElem& o);

    friend bool operator==(const HeckeElem&, const HeckeElem&) = default;

private:
    int n_;
    CoeffMap coeffs_;
};

HeckeElem operator+(const HeckeElem& a, const HeckeElem& b);
HeckeElem operator-(const HeckeElem& a, const HeckeElem& b);

/// mu2 x_i x_{i+1} for i in supp(w).
std::vector<Monomial> j_generators(const Permutation& w);
/// Same for an explicit index set.
std::vector<Monomial> j_generators(const std::set<int>& support);

/// Delete from each coefficient the terms lying in J_w.
HeckeElem hecke_reduce(const HeckeElem& e);

/// Arithmetic context: the rank n and the value of mu1 in u_i^2 = -mu1 u_i.
class HeckeAlgebra {
public:
    HeckeAlgebra(FglSpec spec, int n);

    [[nodiscard]] int n() const { return ops_.nvars(); }
    [[nodiscard]] const FglSpec& spec() const { return ops_.spec(); }
    [[nodiscard]] const OperatorContext& ops() const { return ops_; }

    /// u_w u_v = (-mu1)^k u_{w * v}, where * is the Demazure product and k
    /// counts the letters of v absorbed by a descent.
    [[nodiscard]] std::pair<Permutation, int> basis_product(const Permutation& w, const Permutation& v) const;

    /// Product without the mu2 relation (coefficients left unreduced).
    [[nodiscard]] HeckeElem mul_raw(const HeckeElem& a, const HeckeElem& b) const;
    /// Product followed by hecke_reduce.
    [[nodiscard]] HeckeElem mul(const HeckeElem& a, const HeckeElem& b) const;

    /// Delta_i applied to every coefficient.
    [[nodiscard]] HeckeElem delta_coeffwise(int i, const HeckeElem& e) const;

private:
    OperatorContext ops_;
    Poly minus_mu1_;
};

HeckeElem hecke_mul(const HeckeAlgebra& alg, const HeckeElem& a, const HeckeElem& b);

/// (1 + x u_{n-1}) (1 + x u_{n-2}) ... (1 + x u_i).
HeckeElem alpha_factor(const HeckeAlgebra& alg, int i, const Poly& x, bool reduce = true);

/// prod_{j=1}^{n-1} prod_{i=n-1}^{j} (1 + x_j u_i). Needs 2 <= n <= 5.
HeckeElem big_product_S(const HeckeAlgebra& alg, bool reduce = true);

/// Truncate every coefficient at total x-degree cap.
HeckeElem truncate(const HeckeElem& e, SeriesCap cap);

struct VerifyOptions {
    int threads = 1;
};

/// (i) -Delta_i S == S u_i for every i; (ii) for every w and reduced word,
/// the u_{w_0 w} coefficient of S against LG_word, modulo J(supp w) (must
/// hold) and modulo J(supp w_0 w) (mismatches recorded as findings).
Report verify_fk_identity(const FglSpec& spec, int n, VerifyOptions opt = {});

/// LG_word - KLG_w modulo J(supp w) (must vanish) and modulo J(supp w_0 w)
/// (mismatches recorded as findings), for every w in S_n and reduced word.
Report verify_coeff_corollary(const FglSpec& spec, int n, VerifyOptions opt = {});

/// Local identities with chi and F(x_{i+1}, chi(x_i)) expanded to `cap`:
/// (0) (1 + x_{i+1}u_i)(1 + chi(x_{i+1})u_i) = 1
/// (1) alpha_{i+1}(x_{i+1}) = alpha_i(x_{i+1})(1 + chi(x_{i+1})u_i)
/// (2) 1 + chi(x_i)u_i = (1 + F(x_{i+1},chi(x_i))u_i)(1 + chi(x_{i+1})u_i)
/// (3) -Delta_i(1 + chi(x_{i+1})u_i) = (1 + chi(x_{i+1})u_i)u_i
/// plus the unsigned variant of (3), which is a finding when it fails.
Report verify_local_identities(const FglSpec& spec, int n, SeriesCap cap);

/// alpha_i(x_i) alpha_i(x_{i+1}) == alpha_i(x_{i+1}) alpha_i(x_i) for all i.
Report verify_ybe(const FglSpec& spec, int n);

}  // namespace schubcalc
