#pragma once

// Divided-difference operators for a formal group law F with kernel p:
//
//   C_i f     = (f p(x_i,x_{i+1}) - sigma_i(f p(x_i,x_{i+1}))) / (x_i - x_{i+1})
//   Delta_i f = (f - sigma_i f) p(x_{i+1},x_i) / (x_{i+1} - x_i)
//
// Both are exact on polynomials for every supported law.

#include <cstdint>
#include <random>
#include <vector>

#include "schubcalc/combi.hpp"
#include "schubcalc/fgl.hpp"
#include "schubcalc/poly.hpp"
#include "schubcalc/report.hpp"

namespace schubcalc {

class OperatorContext {
public:
    OperatorContext(FglSpec spec, int nvars);

    [[nodiscard]] const FglSpec& spec() const { return spec_; }
    [[nodiscard]] int nvars() const { return nvars_; }
    /// p(x_i, x_{i+1})
    [[nodiscard]] const Poly& kernel(int i) const;
    /// p(x_{i+1}, x_i)
    [[nodiscard]] const Poly& kernel_swapped(int i) const;
    /// kappa as a constant in nvars variables.
    [[nodiscard]] const Poly& kappa() const { return kappa_; }
    /// mu2 pushed into the spec's coefficient ring, in nvars variables.
    [[nodiscard]] const Poly& mu2() const { return mu2_; }

private:
    void check_index(int i) const;

    FglSpec spec_;
    int nvars_;
    std::vector<Poly> kernel_;
    std::vector<Poly> kernel_swapped_;
    Poly kappa_;
    Poly mu2_;
};

Poly apply_C(const OperatorContext& ctx, int i, const Poly& f);
Poly apply_Delta(const OperatorContext& ctx, int i, const Poly& f);

/// C_{i_r}( ... C_{i_1}(f) ... ): the newest letter acts outermost.
Poly apply_word(const OperatorContext& ctx, const ReducedWord& word, const Poly& f);

/// Pseudo-random polynomial used by the sampled checks: 1..6 terms of total
/// x-degree <= 4, coefficients in [-3,3] \ {0}, mu exponents in {0,1}. Draws
/// use raw mt19937_64 output so samples are identical on every platform.
Poly random_poly(int nvars, std::mt19937_64& rng);

/// The `count` samples for `seed`, already pushed into the spec's ring.
std::vector<Poly> sample_polys(const OperatorContext& ctx, std::size_t count, std::uint64_t seed);

/// C_i C_{i+1} C_i + mu2 C_i == C_{i+1} C_i C_{i+1} + mu2 C_{i+1} on each sample.
Report twisted_braid_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed,
                           int threads = 1);

/// C_i C_{i+1} C_i == C_{i+1} C_i C_{i+1} on each sample. Failures carry the
/// witness polynomial and the two sides.
Report naive_braid_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed,
                         int threads = 1);

/// Delta_i f == kappa f - C_i f on each sample.
Report delta_identity_check(const OperatorContext& ctx, int i, std::size_t samples, std::uint64_t seed,
                            int threads = 1);

}  // namespace schubcalc
