#include "schubcalc/fgl.hpp"

#include <array>

namespace schubcalc {

std::string to_string(FglKind kind) {
    switch (kind) {
        case FglKind::additive: return "additive";
        case FglKind::multiplicative: return "multiplicative";
        case FglKind::hyperbolic: return "hyperbolic";
        case FglKind::lorentz: return "lorentz";
    }
    return "?";
}

FglKind parse_fgl_kind(const std::string& name) {
    if (name == "additive") return FglKind::additive;
    if (name == "multiplicative") return FglKind::multiplicative;
    if (name == "hyperbolic") return FglKind::hyperbolic;
    if (name == "lorentz") return FglKind::lorentz;
    throw DomainError("unknown formal group law '" + name +
                      "' (expected additive|multiplicative|hyperbolic|lorentz)");
}

namespace {

std::optional<int> force_zero(std::optional<int> given, const char* which, FglKind kind) {
    if (given && *given != 0) {
        throw DomainError(std::string("the ") + to_string(kind) + " law forces " + which + " = 0");
    }
    return 0;
}

}  // namespace

FglSpec::FglSpec(FglKind kind, std::optional<int> mu1, std::optional<int> mu2)
    : kind_(kind), mu1_(mu1), mu2_(mu2) {
    switch (kind) {
        case FglKind::additive:
            mu1_ = force_zero(mu1, "mu1", kind);
            mu2_ = force_zero(mu2, "mu2", kind);
            break;
        case FglKind::multiplicative:
            mu2_ = force_zero(mu2, "mu2", kind);
            break;
        case FglKind::lorentz:
            mu1_ = force_zero(mu1, "mu1", kind);
            break;
        case FglKind::hyperbolic:
            break;
    }
}

FglSpec FglSpec::without_mu2() const {
    switch (kind_) {
        case FglKind::hyperbolic: return FglSpec(FglKind::multiplicative, mu1_);
        case FglKind::lorentz: return FglSpec(FglKind::additive);
        default: return *this;
    }
}

std::string FglSpec::describe() const {
    std::string s = to_string(kind_);
    if (mu1_ && kind_ != FglKind::additive && kind_ != FglKind::lorentz) s += " mu1=" + std::to_string(*mu1_);
    if (mu2_ && kind_ != FglKind::additive && kind_ != FglKind::multiplicative) s += " mu2=" + std::to_string(*mu2_);
    return s;
}

namespace {

const Poly& X2() {
    static const Poly x = Poly::var(2, 1);
    return x;
}
const Poly& Y2() {
    static const Poly y = Poly::var(2, 2);
    return y;
}

// f(x, g(y)) for f in two variables and g a series in the second variable.
Poly substitute_second(const Poly& f, const Poly& g, SeriesCap cap) {
    std::vector<Poly> powers{Poly::one(2)};
    Poly out(2);
    for (const auto& [m, c] : f.terms()) {
        while (static_cast<int>(powers.size()) <= m.x[1]) powers.push_back(truncate(powers.back() * g, cap));
        Monomial rest = m;
        rest.x[1] = 0;
        out += truncate(Poly::monomial(2, rest, c) * powers[m.x[1]], cap);
    }
    return truncate(out, cap);
}

}  // namespace

Poly fgl_sum_series(const FglSpec& spec, SeriesCap cap) {
    const Poly xy = X2() * Y2();
    const Poly numer = X2() + Y2() - Poly::mu1(2) * xy;
    const Poly denom_inv = series_invert_unit(Poly::one(2) + Poly::mu2(2) * xy, cap);
    return spec.apply(truncate(numer * denom_inv, cap));
}

Poly formal_inverse(const FglSpec& spec, SeriesCap cap) {
    const Poly x = Poly::var(1, 1);
    const Poly inv = series_invert_unit(Poly::one(1) - Poly::mu1(1) * x, cap);
    return spec.apply(truncate(-(x * inv), cap));
}

Poly fgl_difference_series(const FglSpec& spec, SeriesCap cap) {
    const std::array<int, 1> to_y{2};
    const Poly chi_y = embed(formal_inverse(spec, cap), 2, to_y);
    return substitute_second(fgl_sum_series(spec, cap), chi_y, cap);
}

Poly diff_kernel(const FglSpec& spec) {
    const Poly one = Poly::one(2);
    const Poly mu1y = Poly::mu1(2) * Y2();
    const Poly mu2xy = Poly::mu2(2) * X2() * Y2();
    switch (spec.kind()) {
        case FglKind::additive: return one;
        case FglKind::multiplicative: return spec.apply(one - mu1y);
        case FglKind::hyperbolic: return spec.apply(one - mu1y - mu2xy);
        case FglKind::lorentz: return spec.apply(one - mu2xy);
    }
    throw DomainError("unsupported formal group law");
}

Poly kappa_of(const FglSpec& spec) {
    const Poly p = diff_kernel(spec);
    const Poly k = exact_div_diff(p - sigma_apply(1, p), 1);
    if (k.max_x_degree() > 0) throw Error("kappa is not constant: " + render_text(k));
    return k;
}

bool diff_kernel_self_check(const FglSpec& spec, SeriesCap cap) {
    const Poly lhs = truncate(diff_kernel(spec) * fgl_difference_series(spec, cap), cap);
    return lhs == X2() - Y2();
}

Poly lift_constant(const Poly& c, int nvars) {
    if (c.max_x_degree() > 0) throw DomainError("lift_constant needs a constant polynomial");
    Poly out(nvars);
    for (const auto& [m, coeff] : c.terms()) out.add_term(m, coeff);
    return out;
}

}  // namespace schubcalc
