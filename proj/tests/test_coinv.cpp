#include <doctest.h>

#include "schubcalc/coinv.hpp"
#include "schubcalc/schubert.hpp"
#include "support.hpp"

using namespace schubcalc;

namespace {

Poly x(int n, int i) { return Poly::var(n, i); }

}  // namespace

TEST_CASE("symmetric building blocks") {
    CHECK(elementary_symmetric(2, 3) == x(3, 1) * x(3, 2) + x(3, 1) * x(3, 3) + x(3, 2) * x(3, 3));
    CHECK(complete_homogeneous(2, 2, 3) == x(3, 1) * x(3, 1) + x(3, 1) * x(3, 2) + x(3, 2) * x(3, 2));
    CHECK(complete_homogeneous(0, 2, 3) == Poly::one(3));
    CHECK(staircase_monomials(3).size() == 6);
    CHECK(staircase_monomials(4).size() == 24);
    CHECK_THROWS_AS(elementary_symmetric(4, 3), DomainError);
}

TEST_CASE("small normal forms") {
    // x2 == -x1 and x1^2 == -x1 x2 in the coinvariant ring of S_2.
    CHECK(normal_form(x(2, 2)) == -x(2, 1));
    CHECK(normal_form(x(2, 1) * x(2, 2)).is_zero());
    CHECK(normal_form(x(2, 1) * x(2, 1)).is_zero());
    CHECK(normal_form(initial_class(3)) == initial_class(3));
}

TEST_CASE("normal form properties") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 25; ++trial) {
            const Poly f = testing::random_dense(n, 6, 5, rng);
            const Poly g = testing::random_dense(n, 6, 5, rng);
            const Poly nf = normal_form(f);
            CHECK(is_staircase(nf));
            CHECK(normal_form(nf) == nf);
            CHECK(normal_form(f + g) == nf + normal_form(g));
            // Symmetric multiples vanish.
            for (int d = 1; d <= n; ++d) CHECK(normal_form(elementary_symmetric(d, n) * g).is_zero());
            // Reduction is compatible with products.
            CHECK(normal_form(f * g) == normal_form(nf * normal_form(g)));
        }
    }
}

TEST_CASE("staircase basis expansion is the identity") {
    const auto basis = staircase_monomials(3);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto c = expand_in_basis(basis[j], basis);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            CHECK(c[k] == (k == j ? Poly::one(3) : Poly(3)));
        }
    }
}

TEST_CASE("expansion in the Schubert basis reconstructs the input") {
    std::mt19937_64 rng(29);
    const SchubertContext ctx(FglSpec(FglKind::hyperbolic), 3);
    std::vector<Poly> basis;
    for (const auto& w : all_permutations(3)) basis.push_back(schubert_polynomial(ctx, canonical_word(w)));
    for (int trial = 0; trial < 15; ++trial) {
        const Poly f = specialize(x_degree_part(testing::random_dense(3, 6, 2, rng), 2), 0, 0);
        if (f.is_zero()) continue;
        const auto c = expand_in_basis(f, basis);
        Poly sum(3);
        for (std::size_t j = 0; j < basis.size(); ++j) sum += c[j] * basis[j];
        CHECK(equals_mod_S(sum, f));
    }
}

TEST_CASE("expansion errors") {
    const auto basis = staircase_monomials(2);
    CHECK_THROWS_AS(expand_in_basis(x(2, 1) + Poly::one(2), basis), DomainError);
    // 2 x1 is not reachable from {1, 2 x1}.
    CHECK_THROWS_AS(expand_in_basis(x(2, 1), {Poly::one(2), 2 * x(2, 1)}), NotInSpan);
    CHECK_THROWS_AS(expand_in_basis(x(2, 1), {x(2, 1), x(2, 2)}), BasisDependent);
    const auto zero = expand_in_basis(Poly(2), basis);
    CHECK(zero[0].is_zero());
}

TEST_CASE("vandermonde identities") {
    for (int n : {2, 3, 4}) {
        for (const FglSpec& spec : {FglSpec(FglKind::additive), FglSpec(FglKind::hyperbolic)}) {
            CHECK(vandermonde_check(spec, n, SeriesCap{n * (n - 1) / 2 + 2}).passed());
        }
    }
    CHECK_THROWS_AS(vandermonde_check(FglSpec(FglKind::additive), 3, SeriesCap{3}), DomainError);
    CHECK_THROWS_AS(vandermonde_check(FglSpec(FglKind::additive), 6, SeriesCap{20}), CapacityError);
}
