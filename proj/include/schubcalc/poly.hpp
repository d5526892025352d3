#pragma once

// Exact sparse polynomials in x_1..x_n over Z[mu1, mu2].
//
// A term is (x-exponents, mu-exponents) -> nonzero big integer. Terms are kept
// in one canonical order (graded-lex on the x-part with x_1 < ... < x_n, then
// (mu1, mu2) lex), so iteration and rendering are deterministic.
//
// Grading: deg x_i = 1, deg mu1 = -1, deg mu2 = -2.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "schubcalc/errors.hpp"

namespace schubcalc {

inline constexpr int kMaxVars = 8;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> x{};
    std::uint16_t mu1 = 0;
    std::uint16_t mu2 = 0;

    [[nodiscard]] int x_degree() const;
    [[nodiscard]] int graded_degree() const { return x_degree() - mu1 - 2 * mu2; }
    [[nodiscard]] bool is_one() const { return x_degree() == 0 && mu1 == 0 && mu2 == 0; }

    /// True when every exponent of `m` is bounded by the matching exponent here.
    [[nodiscard]] bool divisible_by(const Monomial& m) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Maximum retained total x-degree of a truncated series.
struct SeriesCap {
    int cap = 0;
};

class Poly {
public:
    using TermMap = std::map<Monomial, mpz_class, CanonicalOrder>;

    explicit Poly(int nvars);
    Poly(int nvars, TermMap terms);

    static Poly constant(int nvars, const mpz_class& c);
    static Poly one(int nvars) { return constant(nvars, 1); }
    /// x_i, 1-based.
    static Poly var(int nvars, int i);
    static Poly mu1(int nvars);
    static Poly mu2(int nvars);
    static Poly monomial(int nvars, const Monomial& m, const mpz_class& c = 1);
    /// x^exps with the given mu exponents; exps.size() must not exceed nvars.
    static Poly monomial(int nvars, std::span<const int> exps, int a = 0, int b = 0,
                         const mpz_class& c = 1);

    [[nodiscard]] int nvars() const { return nvars_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] mpz_class coefficient(const Monomial& m) const;
    /// Largest total x-degree present, -1 for the zero polynomial.
    [[nodiscard]] int max_x_degree() const;

    /// Accumulates c * m, dropping the term if it cancels.
    void add_term(const Monomial& m, const mpz_class& c);

    Poly& operator+=(const Poly& g);
    Poly& operator-=(const Poly& g);
    Poly& operator*=(const mpz_class& c);

    friend bool operator==(const Poly& f, const Poly& g);

private:
    int nvars_;
    TermMap terms_;
};

void require_same_nvars(const Poly& f, const Poly& g);

Poly add(const Poly& f, const Poly& g);
Poly operator+(const Poly& f, const Poly& g);
Poly operator-(const Poly& f, const Poly& g);
Poly operator-(const Poly& f);
Poly operator*(const mpz_class& c, const Poly& f);

// Multiplication kernels. `mul_serial` is the reference; `mul_parallel`
// splits the left operand across OpenMP threads and merges partial sums.
// `mul` picks one by operand size and available threads. All three agree
// exactly.
Poly mul_serial(const Poly& f, const Poly& g);
Poly mul_parallel(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly pow(const Poly& f, int e);

/// Swap the exponents of x_i and x_{i+1} (1 <= i <= nvars-1).
Poly sigma_apply(int i, const Poly& f);

/// q with q * (x_i - x_{i+1}) == f. Throws DivisionFailure on remainder.
Poly exact_div_diff(const Poly& f, int i);

/// Drop every term of total x-degree above cap.
Poly truncate(const Poly& f, SeriesCap cap);

/// Homogeneous component of total x-degree d.
Poly x_degree_part(const Poly& f, int d);

/// g with f*g == 1 modulo x-degree > cap. The x-degree-0 part of f must be
/// exactly 1 or -1.
Poly series_invert_unit(const Poly& f, SeriesCap cap);

struct DegreeReport {
    bool homogeneous = true;
    /// Unset for the zero polynomial (homogeneous of every degree) and for
    /// inhomogeneous input.
    std::optional<int> degree;
};

DegreeReport graded_degree(const Poly& f);

/// Re-home f into `nvars` variables, sending variable j (1-based) of f to
/// x_{targets[j-1]}.
Poly embed(const Poly& f, int nvars, std::span<const int> targets);

/// Substitute integers for mu1 and/or mu2.
Poly specialize(const Poly& f, std::optional<int> mu1, std::optional<int> mu2);

/// Delete every term divisible by one of the given monomials. This is the
/// normal form modulo a monomial ideal.
Poly delete_multiples(const Poly& f, std::span<const Monomial> generators);

// Serialization. Text form is one term per summand, e.g.
// "-1*m1^2*m2^1*x[2,2,0,0] + 3*x[0,1,0,0]"; the zero polynomial is "0".
std::string render_text(const Poly& f);
Poly parse_text(const std::string& s, int nvars);

}  // namespace schubcalc
