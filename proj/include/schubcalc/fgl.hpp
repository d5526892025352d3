#pragma once

// The hyperbolic formal group law F(x,y) = (x + y - mu1 xy) / (1 + mu2 xy),
// its inverse chi(x) = -x / (1 - mu1 x), and the degenerations obtained by
// killing mu1 and/or mu2.

#include <optional>
#include <string>

#include "schubcalc/poly.hpp"

namespace schubcalc {

enum class FglKind { additive, multiplicative, hyperbolic, lorentz };

std::string to_string(FglKind kind);
FglKind parse_fgl_kind(const std::string& name);

class FglSpec {
public:
    /// Throws DomainError when a specialization contradicts the kind, e.g. a
    /// nonzero mu2 for the multiplicative law.
    explicit FglSpec(FglKind kind, std::optional<int> mu1 = std::nullopt,
                     std::optional<int> mu2 = std::nullopt);

    [[nodiscard]] FglKind kind() const { return kind_; }
    /// Integer value substituted for mu1, if any (0 when the kind forces it).
    [[nodiscard]] std::optional<int> mu1() const { return mu1_; }
    [[nodiscard]] std::optional<int> mu2() const { return mu2_; }
    [[nodiscard]] bool mu2_vanishes() const { return mu2_ && *mu2_ == 0; }

    /// Same kind with only the forced zeros; user integers dropped.
    [[nodiscard]] FglSpec symbolic() const { return FglSpec(kind_); }
    /// The mu2 = 0 degeneration (hyperbolic -> multiplicative, lorentz -> additive).
    [[nodiscard]] FglSpec without_mu2() const;

    /// Push a polynomial over Z[mu1,mu2] into this spec's coefficient ring.
    [[nodiscard]] Poly apply(const Poly& f) const { return specialize(f, mu1_, mu2_); }

    [[nodiscard]] std::string describe() const;

    friend bool operator==(const FglSpec&, const FglSpec&) = default;

private:
    FglKind kind_;
    std::optional<int> mu1_;
    std::optional<int> mu2_;
};

/// F(x,y) truncated at total degree cap, two variables (x, y).
Poly fgl_sum_series(const FglSpec& spec, SeriesCap cap);

/// chi(x) truncated at cap, one variable.
Poly formal_inverse(const FglSpec& spec, SeriesCap cap);

/// F(x, chi(y)) truncated at cap, computed by substituting the chi series
/// into the F series.
Poly fgl_difference_series(const FglSpec& spec, SeriesCap cap);

/// The polynomial p(x,y) with 1/F(x,chi(y)) = p(x,y)/(x-y). Two variables:
/// the first binds x_i and the second x_{i+1} when used by the operators.
Poly diff_kernel(const FglSpec& spec);

/// kappa = (p(x,y) - p(y,x)) / (x - y), a constant for every supported law.
/// Returned as a constant polynomial in two variables.
Poly kappa_of(const FglSpec& spec);

/// True when p(x,y) * F(x,chi(y)) == x - y up to total degree cap.
bool diff_kernel_self_check(const FglSpec& spec, SeriesCap cap);

/// Lift a constant polynomial into n variables.
Poly lift_constant(const Poly& c, int nvars);

}  // namespace schubcalc
