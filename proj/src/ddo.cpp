#include "schubcalc/ddo.hpp"

#include <array>

#include "schubcalc/parallel.hpp"

namespace schubcalc {

OperatorContext::OperatorContext(FglSpec spec, int nvars)
    : spec_(spec), nvars_(nvars), kappa_(nvars < 2 ? 1 : nvars), mu2_(nvars < 2 ? 1 : nvars) {
    if (nvars < 2 || nvars > kMaxVars) {
        throw DomainError("operator context needs 2 <= nvars <= " + std::to_string(kMaxVars));
    }
    const Poly p = diff_kernel(spec_);
    for (int i = 1; i < nvars; ++i) {
        const std::array<int, 2> fwd{i, i + 1};
        const std::array<int, 2> rev{i + 1, i};
        kernel_.push_back(embed(p, nvars, fwd));
        kernel_swapped_.push_back(embed(p, nvars, rev));
    }
    kappa_ = lift_constant(kappa_of(spec_), nvars);
    mu2_ = spec_.apply(Poly::mu2(nvars));
}

void OperatorContext::check_index(int i) const {
    if (i < 1 || i >= nvars_) {
        throw DomainError("operator index " + std::to_string(i) + " outside [1," + std::to_string(nvars_ - 1) + "]");
    }
}

const Poly& OperatorContext::kernel(int i) const {
    check_index(i);
    return kernel_[static_cast<std::size_t>(i - 1)];
}

const Poly& OperatorContext::kernel_swapped(int i) const {
    check_index(i);
    return kernel_swapped_[static_cast<std::size_t>(i - 1)];
}

Poly apply_C(const OperatorContext& ctx, int i, const Poly& f) {
    require_same_nvars(f, ctx.kappa());
    const Poly g = f * ctx.kernel(i);
    return exact_div_diff(g - sigma_apply(i, g), i);
}

Poly apply_Delta(const OperatorContext& ctx, int i, const Poly& f) {
    require_same_nvars(f, ctx.kappa());
    const Poly q = exact_div_diff(f - sigma_apply(i, f), i);
    return -(q * ctx.kernel_swapped(i));
}

Poly apply_word(const OperatorContext& ctx, const ReducedWord& word, const Poly& f) {
    Poly out = f;
    for (int i : word.letters) out = apply_C(ctx, i, out);
    return out;
}

Poly random_poly(int nvars, std::mt19937_64& rng) {
    auto draw = [&rng](std::uint64_t bound) { return rng() % bound; };
    Poly f(nvars);
    const auto nterms = 1 + draw(6);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        Monomial m;
        const auto degree = static_cast<int>(draw(5));
        for (int d = 0; d < degree; ++d) ++m.x[draw(static_cast<std::uint64_t>(nvars))];
        m.mu1 = static_cast<std::uint16_t>(draw(2));
        m.mu2 = static_cast<std::uint16_t>(draw(2));
        auto c = static_cast<long>(draw(6)) - 3;  // [-3, 2]
        if (c >= 0) ++c;                          // [-3,-1] u [1,3]
        f.add_term(m, c);
    }
    return f;
}

std::vector<Poly> sample_polys(const OperatorContext& ctx, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) out.push_back(ctx.spec().apply(random_poly(ctx.nvars(), rng)));
    return out;
}

namespace {

Report sampled_check(std::string name, const OperatorContext& ctx, std::size_t samples, std::uint64_t seed,
                     int threads, auto&& sides) {
    const auto polys = sample_polys(ctx, samples, seed);
    std::vector<CheckCase> cases(polys.size());
    parallel_for(polys.size(), threads, [&](std::size_t k) {
        const auto [lhs, rhs] = sides(polys[k]);
        CheckCase c{"sample " + std::to_string(k), lhs == rhs ? Status::pass : Status::fail, {}};
        if (c.status == Status::fail) {
            c.detail = {{"f", render_text(polys[k])}, {"lhs", render_text(lhs)}, {"rhs", render_text(rhs)}};
        }
        cases[k] = std::move(c);
    });
    Report r{std::move(name), std::move(cases)};
    return r;
}

void check_braid_index(const OperatorContext& ctx, int i) {
    if (i < 1 || i + 1 > ctx.nvars() - 1) {
        throw DomainError("braid checks need 1 <= i and i+1 <= nvars-1");
    }
}

}  // namespace

Report twisted_braid_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed, int threads) {
    check_braid_index(ctx, i);
    return sampled_check("twisted braid i=" + std::to_string(i) + " (" + ctx.spec().describe() + ")", ctx, samples,
                         seed, threads, [&](const Poly& f) {
                             const Poly ci = apply_C(ctx, i, f);
                             const Poly cj = apply_C(ctx, i + 1, f);
                             Poly lhs = apply_C(ctx, i, apply_C(ctx, i + 1, ci)) + ctx.mu2() * ci;
                             Poly rhs = apply_C(ctx, i + 1, apply_C(ctx, i, cj)) + ctx.mu2() * cj;
                             return std::pair{std::move(lhs), std::move(rhs)};
                         });
}

Report naive_braid_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed, int threads) {
    check_braid_index(ctx, i);
    return sampled_check("naive braid i=" + std::to_string(i) + " (" + ctx.spec().describe() + ")", ctx, samples,
                         seed, threads, [&](const Poly& f) {
                             Poly lhs = apply_C(ctx, i, apply_C(ctx, i + 1, apply_C(ctx, i, f)));
                             Poly rhs = apply_C(ctx, i + 1, apply_C(ctx, i, apply_C(ctx, i + 1, f)));
                             return std::pair{std::move(lhs), std::move(rhs)};
                         });
}

Report delta_identity_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed, int threads) {
    if (i < 1 || i >= ctx.nvars()) throw DomainError("operator index out of range");
    return sampled_check("Delta = kappa - C, i=" + std::to_string(i) + " (" + ctx.spec().describe() + ")", ctx,
                         samples, seed, threads, [&](const Poly& f) {
                             Poly lhs = apply_Delta(ctx, i, f);
                             Poly rhs = ctx.kappa() * f - apply_C(ctx, i, f);
                             return std::pair{std::move(lhs), std::move(rhs)};
                         });
}

}  // namespace schubcalc
