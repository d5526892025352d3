#pragma once

// Generalized Schubert polynomials. Indexing follows the convention where
// the empty word carries the point class:
//
//   LG_() = x_1^{n-1} x_2^{n-2} ... x_{n-1},   LG_{(w, i)} = C_i LG_w.
//
// Under the opposite indexing this LG_w is LG_{w_0 w}.

#include "schubcalc/combi.hpp"
#include "schubcalc/ddo.hpp"

namespace schubcalc {

class SchubertContext {
public:
    SchubertContext(FglSpec spec, int n) : ops_(spec, n) {}

    [[nodiscard]] const OperatorContext& ops() const { return ops_; }
    [[nodiscard]] const FglSpec& spec() const { return ops_.spec(); }
    [[nodiscard]] int n() const { return ops_.nvars(); }

private:
    OperatorContext ops_;
};

/// The staircase monomial x_1^{n-1} ... x_{n-1}.
Poly initial_class(int n);

/// C-operators along `word` applied to the staircase. Rejects non-reduced words.
Poly schubert_polynomial(const SchubertContext& ctx, const ReducedWord& word);

/// The mu2 = 0 specialization of the context's law (hyperbolic becomes
/// multiplicative, lorentz becomes additive) applied along the canonical word.
Poly grothendieck_polynomial(const SchubertContext& ctx, const Permutation& w);

enum class SmoothFamily { rows, cols };

/// Monomial representative of a smooth Grassmannian Schubert class:
/// rows a -> (x_{k+1} ... x_n)^{k-a}, cols b -> (x_1 ... x_k)^{n-k-b}.
/// Independent of the formal group law.
Poly smooth_monomial(int k, int n, SmoothFamily family, int param);

}  // namespace schubcalc
