#include "schubcalc/schubert.hpp"

namespace schubcalc {

Poly initial_class(int n) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = n - 1 - i;
    return Poly::monomial(n, exps);
}

Poly schubert_polynomial(const SchubertContext& ctx, const ReducedWord& word) {
    if (!is_reduced(ctx.n(), word)) {
        throw DomainError("word (" + render_word(word) + ") is not reduced in S_" + std::to_string(ctx.n()));
    }
    return apply_word(ctx.ops(), word, initial_class(ctx.n()));
}

Poly grothendieck_polynomial(const SchubertContext& ctx, const Permutation& w) {
    if (w.size() != ctx.n()) throw DomainError("permutation size does not match the context");
    const SchubertContext k_ctx(ctx.spec().without_mu2(), ctx.n());
    return schubert_polynomial(k_ctx, canonical_word(w));
}

Poly smooth_monomial(int k, int n, SmoothFamily family, int param) {
    if (k < 1 || k >= n) throw DomainError("need 1 <= k <= n-1");
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    if (family == SmoothFamily::rows) {
        if (param < 1 || param > k) throw DomainError("rows a must lie in [1,k]");
        for (int v = k; v < n; ++v) exps[static_cast<std::size_t>(v)] = k - param;
    } else {
        if (param < 1 || param > n - k) throw DomainError("cols b must lie in [1,n-k]");
        for (int v = 0; v < k; ++v) exps[static_cast<std::size_t>(v)] = n - k - param;
    }
    return Poly::monomial(n, exps);
}

}  // namespace schubcalc
