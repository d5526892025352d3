#pragma once

// Shared oracles for the unit tests.

#include <random>
#include <vector>

#include <gmpxx.h>

#include "schubcalc/poly.hpp"

namespace schubcalc::testing {

struct Point {
    std::vector<mpz_class> x;
    mpz_class mu1;
    mpz_class mu2;
};

/// Evaluation homomorphism Z[mu1,mu2][x] -> Z; independent of the term map.
inline mpz_class evaluate(const Poly& f, const Point& p) {
    mpz_class total = 0;
    for (const auto& [m, c] : f.terms()) {
        mpz_class t = c;
        for (int i = 0; i < f.nvars(); ++i) {
            for (int e = 0; e < m.x[static_cast<std::size_t>(i)]; ++e) t *= p.x[static_cast<std::size_t>(i)];
        }
        for (int e = 0; e < m.mu1; ++e) t *= p.mu1;
        for (int e = 0; e < m.mu2; ++e) t *= p.mu2;
        total += t;
    }
    return total;
}

inline Point random_point(int nvars, std::mt19937_64& rng) {
    auto draw = [&] { return mpz_class(static_cast<long>(rng() % 11) - 5); };
    Point p;
    for (int i = 0; i < nvars; ++i) p.x.push_back(draw());
    p.mu1 = draw();
    p.mu2 = draw();
    return p;
}

/// Dense-ish random polynomial: up to `terms` terms, x-degree <= deg.
inline Poly random_dense(int nvars, int terms, int deg, std::mt19937_64& rng) {
    Poly f(nvars);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int left = deg;
        for (int i = 0; i < nvars && left > 0; ++i) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(left + 1));
            m.x[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
            left -= e;
        }
        m.mu1 = static_cast<std::uint16_t>(rng() % 2);
        m.mu2 = static_cast<std::uint16_t>(rng() % 2);
        f.add_term(m, mpz_class(static_cast<long>(rng() % 19) - 9));
    }
    return f;
}

}  // namespace schubcalc::testing
