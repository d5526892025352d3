#pragma once

// Grassmannian Gr(k,n): the smooth-class product rule, the Gr(2,4) pullback
// dictionary, and cross-checks of the rule against polynomial arithmetic in
// the coinvariant ring of the full flag variety.

#include <optional>
#include <vector>

#include "schubcalc/combi.hpp"
#include "schubcalc/fgl.hpp"
#include "schubcalc/poly.hpp"
#include "schubcalc/report.hpp"

namespace schubcalc {

struct GrassContext {
    int k;
    int n;
    FglSpec spec;

    GrassContext(int k, int n, FglSpec spec);
};

/// The smooth Schubert class of the rectangle b^a, isomorphic to Gr(a, a+b).
struct RectangleClass {
    int a;
    int b;
};

void validate_rectangle(const RectangleClass& r, int k, int n);

/// The rectangle b^a as a partition of P(k,n).
BoxPartition rect_partition(const RectangleClass& r, int k, int n);

/// (b^a)^vee: k-a parts equal to n-k, then a parts equal to n-k-b.
BoxPartition rect_dual(const RectangleClass& r, int k, int n);

/// Every rectangle for (k,n), a-major.
std::vector<RectangleClass> rectangles(int k, int n);

/// [X_lambda] . [X_{b^a}]: the class of (lambda^vee)^{vee_Z} when
/// lambda >= (b^a)^vee, std::nullopt (the zero class) otherwise.
std::optional<BoxPartition> smooth_product(const GrassContext& ctx, const RectangleClass& r,
                                           const BoxPartition& lambda);

/// Word whose C-chain pulls X_lambda in Gr(2,4) back to the flag variety.
ReducedWord gr24_word(const BoxPartition& lambda);

/// Polynomial of the smooth class [X_{b^a}] on Gr(2,4).
Poly gr24_smooth_poly(const RectangleClass& r);

/// The six tabulated Gr(2,4) classes over Z[mu1,mu2], in the order of
/// partitions_in_box(2,2).
std::vector<Poly> gr24_table();

/// LG along gr24_word(lambda) for the six partitions, in n = 4 variables.
std::vector<Poly> gr24_basis(const FglSpec& spec);

/// Each rectangle times each lambda: rule versus expansion of the polynomial
/// product in the Gr(2,4) basis. 24 cases.
Report cross_check_gr24(const FglSpec& spec, int threads = 1);

inline constexpr int kMaxChowBoxArea = 9;

/// Rule versus polynomial product for every rectangle and partition of
/// Gr(k,n). Needs mu2 = 0 and k(n-k) <= 9. Classes are LG along the
/// canonical word of w_lambda w_{0,P}, with w_{0,P} longest in S_k x S_{n-k}.
Report chow_k_cross_check(int k, int n, const FglSpec& spec, int threads = 1);

/// w_lambda w_{0,P}: the minimal-length coset representative of lambda times
/// the longest element of the parabolic subgroup S_k x S_{n-k}.
Permutation grassmannian_fiber_perm(const BoxPartition& lambda, int k, int n);

}  // namespace schubcalc
