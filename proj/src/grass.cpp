#include "schubcalc/grass.hpp"

#include <array>
#include <map>

#include "schubcalc/coinv.hpp"
#include "schubcalc/parallel.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

GrassContext::GrassContext(int k_, int n_, FglSpec spec_) : k(k_), n(n_), spec(spec_) {
    if (k < 1 || k >= n) throw DomainError("Gr(k,n) needs 1 <= k <= n-1");
}

void validate_rectangle(const RectangleClass& r, int k, int n) {
    if (r.a < 1 || r.a > k || r.b < 1 || r.b > n - k) {
        throw DomainError("rectangle " + std::to_string(r.b) + "^" + std::to_string(r.a) + " does not fit the " +
                          std::to_string(k) + "x" + std::to_string(n - k) + " box");
    }
}

BoxPartition rect_partition(const RectangleClass& r, int k, int n) {
    validate_rectangle(r, k, n);
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < r.a; ++i) parts[static_cast<std::size_t>(i)] = r.b;
    return BoxPartition(k, n - k, std::move(parts));
}

BoxPartition rect_dual(const RectangleClass& r, int k, int n) {
    validate_rectangle(r, k, n);
    std::vector<int> parts(static_cast<std::size_t>(k), n - k);
    for (int i = k - r.a; i < k; ++i) parts[static_cast<std::size_t>(i)] = n - k - r.b;
    return BoxPartition(k, n - k, std::move(parts));
}

std::vector<RectangleClass> rectangles(int k, int n) {
    std::vector<RectangleClass> out;
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= n - k; ++b) out.push_back({a, b});
    }
    return out;
}

std::optional<BoxPartition> smooth_product(const GrassContext& ctx, const RectangleClass& r,
                                           const BoxPartition& lambda) {
    const int k = ctx.k;
    const int n = ctx.n;
    if (!lambda.fits(k, n - k)) {
        throw DomainError("partition " + render_partition(lambda) + " is not in P(" + std::to_string(k) + "," +
                          std::to_string(n) + ")");
    }
    const BoxPartition lam = rebox(lambda, k, n - k);
    if (!partition_leq(rect_dual(r, k, n), lam)) return std::nullopt;
    const BoxPartition in_z = partition_dualZ(partition_dual(lam), r.a, r.b);
    return rebox(in_z, k, n - k);
}

namespace {

void require_gr24_partition(const BoxPartition& lambda) {
    if (!lambda.fits(2, 2)) throw DomainError("partition " + render_partition(lambda) + " is not in P(2,4)");
}

}  // namespace

ReducedWord gr24_word(const BoxPartition& lambda) {
    require_gr24_partition(lambda);
    static const std::map<std::array<int, 2>, std::vector<int>> words = {
        {{0, 0}, {3, 1}},          {{1, 0}, {2, 3, 1}},          {{2, 0}, {3, 2, 3, 1}},
        {{1, 1}, {1, 2, 3, 1}},    {{2, 1}, {3, 1, 2, 3, 1}},    {{2, 2}, {2, 3, 1, 2, 3, 1}},
    };
    return ReducedWord{words.at({lambda.part(1), lambda.part(2)})};
}

Poly gr24_smooth_poly(const RectangleClass& r) {
    validate_rectangle(r, 2, 4);
    const Poly x1 = Poly::var(4, 1);
    const Poly x2 = Poly::var(4, 2);
    if (r.a == 1 && r.b == 1) return x1 * x2 * (x1 + x2) - Poly::mu1(4) * pow(x1 * x2, 2);
    if (r.a == 1) return smooth_monomial(2, 4, SmoothFamily::rows, 1);
    if (r.b == 1) return smooth_monomial(2, 4, SmoothFamily::cols, 1);
    return Poly::one(4);
}

std::vector<Poly> gr24_table() {
    const Poly x1 = Poly::var(4, 1);
    const Poly x2 = Poly::var(4, 2);
    const Poly m1 = Poly::mu1(4);
    const Poly m2 = Poly::mu2(4);
    const Poly e1 = x1 + x2;
    const Poly e2 = x1 * x2;
    const Poly top = e2 * e2;
    return {
        top,
        e2 * e1 - m1 * top,
        x1 * x1 + e2 + x2 * x2 - m1 * e2 * e1 - m2 * top,
        e2 - m2 * top,
        e1 - m1 * e2 - m2 * e2 * e1 - m1 * m2 * top,
        Poly::one(4) - m2 * e1 * e1 + m1 * m1 * m2 * top,
    };
}

std::vector<Poly> gr24_basis(const FglSpec& spec) {
    const SchubertContext ctx(spec, 4);
    std::vector<Poly> out;
    for (const BoxPartition& lambda : partitions_in_box(2, 2)) out.push_back(schubert_polynomial(ctx, gr24_word(lambda)));
    return out;
}

namespace {

struct ProductCase {
    RectangleClass r;
    BoxPartition lambda;
};

std::vector<ProductCase> product_cases(int k, int n) {
    std::vector<ProductCase> out;
    for (const RectangleClass& r : rectangles(k, n)) {
        for (const BoxPartition& lambda : partitions_in_box(k, n - k)) out.push_back({r, lambda});
    }
    return out;
}

std::string case_label(const ProductCase& c) {
    return "rect a=" + std::to_string(c.r.a) + ",b=" + std::to_string(c.r.b) + " lambda=(" +
           render_partition(c.lambda) + ")";
}

// Compare an expansion (coefficients already pushed into the spec's ring)
// with the rule's answer.
CheckCase judge(const std::string& label, const std::vector<BoxPartition>& parts,
                const std::optional<BoxPartition>& rule, const std::vector<Poly>& coeffs) {
    bool ok = true;
    nlohmann::json expansion = nlohmann::json::object();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        const bool expected_one = rule && *rule == parts[j];
        const Poly& c = coeffs[j];
        if (!c.is_zero()) expansion[render_partition(parts[j])] = render_text(c);
        const Poly want = expected_one ? Poly::one(c.nvars()) : Poly(c.nvars());
        if (!(c == want)) ok = false;
    }
    CheckCase out{label, ok ? Status::pass : Status::fail, {}};
    out.detail = {{"rule", rule ? render_partition(*rule) : std::string("0")}, {"expansion", expansion}};
    return out;
}

std::vector<Poly> expand_pushed(const FglSpec& spec, const Poly& product, const std::vector<Poly>& basis) {
    std::vector<Poly> coeffs = expand_in_basis(normal_form(product), basis);
    for (Poly& c : coeffs) c = spec.apply(c);
    return coeffs;
}

Report run_product_sweep(const std::string& name, const FglSpec& spec, const GrassContext& ctx,
                         const std::vector<Poly>& basis, const std::vector<Poly>& rect_polys, int threads) {
    const std::vector<BoxPartition> parts = partitions_in_box(ctx.k, ctx.n - ctx.k);
    const auto cases = product_cases(ctx.k, ctx.n);
    std::vector<CheckCase> results(cases.size());
    parallel_for(cases.size(), threads, [&](std::size_t idx) {
        const ProductCase& c = cases[idx];
        const std::size_t r_idx = idx / parts.size();
        const std::size_t l_idx = idx % parts.size();
        const auto rule = smooth_product(ctx, c.r, c.lambda);
        try {
            const Poly product = rect_polys[r_idx] * basis[l_idx];
            results[idx] = judge(case_label(c), parts, rule, expand_pushed(spec, product, basis));
        } catch (const NotInSpan& e) {
            results[idx] = CheckCase{case_label(c), Status::fail, {{"error", e.what()}}};
        }
    });
    Report r{name, {}};
    for (auto& c : results) r.add(std::move(c));
    return r;
}

}  // namespace

Report cross_check_gr24(const FglSpec& spec, int threads) {
    const FglSpec sym = spec.symbolic();
    const GrassContext ctx(2, 4, spec);
    const std::vector<Poly> basis = gr24_basis(sym);
    std::vector<Poly> rect_polys;
    for (const RectangleClass& r : rectangles(2, 4)) rect_polys.push_back(sym.apply(gr24_smooth_poly(r)));
    return run_product_sweep("Gr(2,4) product rule (" + spec.describe() + ")", spec, ctx, basis, rect_polys, threads);
}

Permutation grassmannian_fiber_perm(const BoxPartition& lambda, int k, int n) {
    std::vector<int> w0p;
    for (int v = k; v >= 1; --v) w0p.push_back(v);
    for (int v = n; v > k; --v) w0p.push_back(v);
    return perm_compose(partition_to_perm(lambda, k, n), Permutation(std::move(w0p)));
}

Report chow_k_cross_check(int k, int n, const FglSpec& spec, int threads) {
    if (!spec.mu2_vanishes()) throw DomainError("chow_k_cross_check needs mu2 = 0");
    if (k < 1 || k >= n) throw DomainError("Gr(k,n) needs 1 <= k <= n-1");
    if (k * (n - k) > kMaxChowBoxArea) {
        throw CapacityError("chow_k_cross_check supports k(n-k) <= " + std::to_string(kMaxChowBoxArea));
    }
    if (n > kMaxVars) throw CapacityError("too many variables");
    const FglSpec sym = spec.without_mu2().symbolic();
    const GrassContext ctx(k, n, spec);
    const SchubertContext sctx(sym, n);
    std::vector<Poly> basis;
    for (const BoxPartition& lambda : partitions_in_box(k, n - k)) {
        basis.push_back(schubert_polynomial(sctx, canonical_word(grassmannian_fiber_perm(lambda, k, n))));
    }
    std::vector<Poly> rect_polys;
    for (const RectangleClass& r : rectangles(k, n)) {
        rect_polys.push_back(
            schubert_polynomial(sctx, canonical_word(grassmannian_fiber_perm(rect_partition(r, k, n), k, n))));
    }
    return run_product_sweep(
        "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") product rule (" + spec.describe() + ")", spec, ctx,
        basis, rect_polys, threads);
}

}  // namespace schubcalc
