#include <doctest.h>

#include <array>

#include "schubcalc/fgl.hpp"

using namespace schubcalc;

namespace {

const std::array<FglKind, 4> kAllKinds{FglKind::additive, FglKind::multiplicative, FglKind::hyperbolic,
                                       FglKind::lorentz};

// Substitute a(.) and b(.) (polynomials in `nvars` variables) for the two
// arguments of a bivariate series, truncating at cap.
Poly compose2(const Poly& series, const Poly& a, const Poly& b, SeriesCap cap) {
    Poly out(a.nvars());
    for (const auto& [m, c] : series.terms()) {
        Poly t = Poly::monomial(a.nvars(), std::array<int, 0>{}, m.mu1, m.mu2, c);
        t = truncate(t * pow(a, m.x[0]), cap);
        t = truncate(t * pow(b, m.x[1]), cap);
        out += t;
    }
    return out;
}

Poly var(int n, int i) { return Poly::var(n, i); }

}  // namespace

TEST_CASE("spec forces the zeros of its kind") {
    CHECK(FglSpec(FglKind::additive).mu1() == 0);
    CHECK(FglSpec(FglKind::multiplicative).mu2() == 0);
    CHECK_FALSE(FglSpec(FglKind::multiplicative).mu1().has_value());
    CHECK(FglSpec(FglKind::lorentz).mu1() == 0);
    CHECK_THROWS_AS(FglSpec(FglKind::multiplicative, 1, 2), DomainError);
    CHECK_THROWS_AS(FglSpec(FglKind::additive, 1), DomainError);
    CHECK_NOTHROW(FglSpec(FglKind::hyperbolic, 1, 2));
    CHECK(FglSpec(FglKind::hyperbolic, 3, 5).without_mu2() == FglSpec(FglKind::multiplicative, 3));
    CHECK(FglSpec(FglKind::lorentz).without_mu2() == FglSpec(FglKind::additive));
    CHECK(parse_fgl_kind("lorentz") == FglKind::lorentz);
    CHECK_THROWS_AS(parse_fgl_kind("elliptic-ish"), DomainError);
}

TEST_CASE("closed-form kernels") {
    const Poly x = var(2, 1);
    const Poly y = var(2, 2);
    const Poly one = Poly::one(2);
    CHECK(diff_kernel(FglSpec(FglKind::additive)) == one);
    CHECK(diff_kernel(FglSpec(FglKind::multiplicative)) == one - Poly::mu1(2) * y);
    CHECK(diff_kernel(FglSpec(FglKind::hyperbolic)) == one - Poly::mu1(2) * y - Poly::mu2(2) * x * y);
    CHECK(diff_kernel(FglSpec(FglKind::lorentz)) == one - Poly::mu2(2) * x * y);
}

TEST_CASE("kappa table") {
    CHECK(kappa_of(FglSpec(FglKind::additive)).is_zero());
    CHECK(kappa_of(FglSpec(FglKind::multiplicative)) == Poly::mu1(2));
    CHECK(kappa_of(FglSpec(FglKind::hyperbolic)) == Poly::mu1(2));
    CHECK(kappa_of(FglSpec(FglKind::lorentz)).is_zero());
    CHECK(kappa_of(FglSpec(FglKind::hyperbolic, 4, 7)) == Poly::constant(2, 4));
}

TEST_CASE("sum series low-order terms") {
    const Poly x = var(2, 1);
    const Poly y = var(2, 2);
    CHECK(fgl_sum_series(FglSpec(FglKind::additive), SeriesCap{5}) == x + y);
    const Poly f4 = fgl_sum_series(FglSpec(FglKind::hyperbolic), SeriesCap{4});
    // Expanding (x + y - mu1 xy)(1 - mu2 xy + ...) gives -mu2 on x^2y and xy^2.
    CHECK(f4 == x + y - Poly::mu1(2) * x * y - Poly::mu2(2) * (x * x * y + x * y * y) +
                    Poly::mu1(2) * Poly::mu2(2) * x * x * y * y);
}

TEST_CASE("formal inverse") {
    const Poly x = var(1, 1);
    CHECK(formal_inverse(FglSpec(FglKind::additive), SeriesCap{6}) == -x);
    CHECK(formal_inverse(FglSpec(FglKind::lorentz), SeriesCap{4}) == -x);
    const Poly m = Poly::mu1(1);
    CHECK(formal_inverse(FglSpec(FglKind::hyperbolic), SeriesCap{3}) == -x - m * x * x - m * m * x * x * x);
}

TEST_CASE("group-law axioms up to cap 8") {
    const SeriesCap cap{8};
    for (FglKind kind : kAllKinds) {
        CAPTURE(to_string(kind));
        const FglSpec spec(kind);
        const Poly f = fgl_sum_series(spec, cap);
        const std::array<int, 2> swap{2, 1};
        CHECK(embed(f, 2, swap) == f);
        // F(x, 0) = x
        CHECK(compose2(f, var(1, 1), Poly(1), cap) == var(1, 1));
        // F(x, chi(x)) = 0
        const Poly chi = formal_inverse(spec, cap);
        CHECK(compose2(f, var(1, 1), chi, cap).is_zero());
        // associativity
        const Poly x = var(3, 1);
        const Poly y = var(3, 2);
        const Poly z = var(3, 3);
        const std::array<int, 2> xy{1, 2};
        const std::array<int, 2> yz{2, 3};
        const Poly fxy = embed(f, 3, xy);
        const Poly fyz = embed(f, 3, yz);
        CHECK(compose2(f, fxy, z, cap) == compose2(f, x, fyz, cap));
    }
}

TEST_CASE("kernel self-check to cap 10") {
    for (FglKind kind : kAllKinds) {
        CAPTURE(to_string(kind));
        CHECK(diff_kernel_self_check(FglSpec(kind), SeriesCap{10}));
    }
}

TEST_CASE("mu2 = 0 reproduces the multiplicative law") {
    const FglSpec hyp(FglKind::hyperbolic, std::nullopt, 0);
    const FglSpec mult(FglKind::multiplicative);
    const SeriesCap cap{7};
    CHECK(hyp.apply(fgl_sum_series(FglSpec(FglKind::hyperbolic), cap)) == fgl_sum_series(mult, cap));
    CHECK(hyp.apply(diff_kernel(FglSpec(FglKind::hyperbolic))) == diff_kernel(mult));
    const FglSpec flat(FglKind::hyperbolic, 0, 0);
    CHECK(flat.apply(fgl_sum_series(FglSpec(FglKind::hyperbolic), cap)) ==
          fgl_sum_series(FglSpec(FglKind::additive), cap));
}
