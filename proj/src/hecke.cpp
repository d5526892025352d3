#include "schubcalc/hecke.hpp"

#include <array>

#include "schubcalc/parallel.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

HeckeElem HeckeElem::scalar(const Poly& c) { return basis(Permutation::identity(c.nvars()), c); }

HeckeElem HeckeElem::basis(const Permutation& w, const Poly& c) {
    if (w.size() != c.nvars()) throw DomainError("Hecke coefficients must live in n variables");
    HeckeElem e(w.size());
    e.add(w, c);
    return e;
}

HeckeElem HeckeElem::generator(int n, int i, const Poly& c) { return basis(Permutation::simple(n, i), c); }

Poly HeckeElem::coefficient(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Poly(n_) : it->second;
}

void HeckeElem::add(const Permutation& w, const Poly& c) {
    if (w.size() != n_ || c.nvars() != n_) throw DomainError("Hecke element size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
    if (o.n_ != n_) throw DomainError("Hecke element size mismatch");
    for (const auto& [w, c] : o.coeffs_) add(w, c);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) {
    if (o.n_ != n_) throw DomainError("Hecke element size mismatch");
    for (const auto& [w, c] : o.coeffs_) add(w, -c);
    return *this;
}

HeckeElem operator+(const HeckeElem& a, const HeckeElem& b) {
    HeckeElem r = a;
    r += b;
    return r;
}

HeckeElem operator-(const HeckeElem& a, const HeckeElem& b) {
    HeckeElem r = a;
    r -= b;
    return r;
}

std::vector<Monomial> j_generators(const std::set<int>& support) {
    std::vector<Monomial> gens;
    for (int i : support) {
        Monomial m;
        m.x[static_cast<std::size_t>(i - 1)] = 1;
        m.x[static_cast<std::size_t>(i)] = 1;
        m.mu2 = 1;
        gens.push_back(m);
    }
    return gens;
}

std::vector<Monomial> j_generators(const Permutation& w) { return j_generators(support_of(w)); }

HeckeElem hecke_reduce(const HeckeElem& e) {
    HeckeElem out(e.n());
    for (const auto& [w, c] : e.coeffs()) out.add(w, delete_multiples(c, j_generators(w)));
    return out;
}

// ---------------------------------------------------------------------------

HeckeAlgebra::HeckeAlgebra(FglSpec spec, int n) : ops_(spec, n), minus_mu1_(spec.apply(-Poly::mu1(n))) {}

std::pair<Permutation, int> HeckeAlgebra::basis_product(const Permutation& w, const Permutation& v) const {
    Permutation state = w;
    int absorbed = 0;
    for (int i : canonical_word(v).letters) {
        if (state.has_right_descent(i)) {
            ++absorbed;
        } else {
            state = state.times_simple(i);
        }
    }
    return {state, absorbed};
}

HeckeElem HeckeAlgebra::mul_raw(const HeckeElem& a, const HeckeElem& b) const {
    if (a.n() != n() || b.n() != n()) throw DomainError("Hecke element size mismatch");
    HeckeElem out(n());
    for (const auto& [w, fw] : a.coeffs()) {
        for (const auto& [v, gv] : b.coeffs()) {
            const auto [target, absorbed] = basis_product(w, v);
            Poly c = fw * gv;
            for (int k = 0; k < absorbed; ++k) c = c * minus_mu1_;
            out.add(target, c);
        }
    }
    return out;
}

HeckeElem HeckeAlgebra::mul(const HeckeElem& a, const HeckeElem& b) const { return hecke_reduce(mul_raw(a, b)); }

HeckeElem HeckeAlgebra::delta_coeffwise(int i, const HeckeElem& e) const {
    HeckeElem out(n());
    for (const auto& [w, c] : e.coeffs()) out.add(w, apply_Delta(ops_, i, c));
    return out;
}

HeckeElem hecke_mul(const HeckeAlgebra& alg, const HeckeElem& a, const HeckeElem& b) { return alg.mul(a, b); }

namespace {

HeckeElem one_plus(const HeckeAlgebra& alg, const Poly& x, int i) {
    HeckeElem e = HeckeElem::scalar(Poly::one(alg.n()));
    e += HeckeElem::generator(alg.n(), i, x);
    return e;
}

// alpha_i for 1 <= i <= n; alpha_n is the empty product.
HeckeElem alpha_any(const HeckeAlgebra& alg, int i, const Poly& x, bool reduce) {
    HeckeElem out = HeckeElem::scalar(Poly::one(alg.n()));
    for (int idx = alg.n() - 1; idx >= i; --idx) {
        out = reduce ? alg.mul(out, one_plus(alg, x, idx)) : alg.mul_raw(out, one_plus(alg, x, idx));
    }
    return out;
}

}  // namespace

HeckeElem alpha_factor(const HeckeAlgebra& alg, int i, const Poly& x, bool reduce) {
    if (i < 1 || i > alg.n() - 1) throw DomainError("alpha_factor index out of range");
    require_same_nvars(x, Poly(alg.n()));
    return alpha_any(alg, i, x, reduce);
}

HeckeElem big_product_S(const HeckeAlgebra& alg, bool reduce) {
    const int n = alg.n();
    if (n < 2 || n > 5) throw CapacityError("big_product_S supports 2 <= n <= 5");
    HeckeElem out = HeckeElem::scalar(Poly::one(n));
    for (int j = 1; j <= n - 1; ++j) {
        const HeckeElem a = alpha_any(alg, j, Poly::var(n, j), reduce);
        out = reduce ? alg.mul(out, a) : alg.mul_raw(out, a);
    }
    return out;
}

HeckeElem truncate(const HeckeElem& e, SeriesCap cap) {
    HeckeElem out(e.n());
    for (const auto& [w, c] : e.coeffs()) out.add(w, truncate(c, cap));
    return out;
}

// ---------------------------------------------------------------------------
// Verifiers. Arithmetic runs over the symbolic ring of the spec's kind (the
// monomial-deletion normal form needs mu2 as a symbol); integer
// specializations are applied to the reduced difference at comparison time.

namespace {

void require_rank(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi) {
        throw CapacityError(std::string(what) + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
    }
}

nlohmann::json elem_json(const HeckeElem& e) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, c] : e.coeffs()) j[render_perm(w)] = render_text(c);
    return j;
}

bool vanishes(const FglSpec& spec, const HeckeElem& reduced_diff) {
    for (const auto& [w, c] : reduced_diff.coeffs()) {
        if (!spec.apply(c).is_zero()) return false;
    }
    return true;
}

bool vanishes_mod(const FglSpec& spec, const Poly& diff, const std::set<int>& support) {
    return spec.apply(delete_multiples(diff, j_generators(support))).is_zero();
}

std::string set_text(const std::set<int>& s) {
    std::string out = "{";
    for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
    return out + "}";
}

struct WordCase {
    Permutation w;
    ReducedWord word;
};

std::vector<WordCase> all_word_cases(int n) {
    std::vector<WordCase> cases;
    for (const Permutation& w : all_permutations(n)) {
        for (const ReducedWord& word : reduced_words(w)) cases.push_back({w, word});
    }
    return cases;
}

}  // namespace

Report verify_fk_identity(const FglSpec& spec, int n, VerifyOptions opt) {
    require_rank(n, 2, 4, "verify_fk_identity");
    const HeckeAlgebra alg(spec.symbolic(), n);
    Report r{"fk identity n=" + std::to_string(n) + " (" + spec.describe() + ")", {}};

    const HeckeElem s = big_product_S(alg, true);
    for (int i = 1; i < n; ++i) {
        const HeckeElem lhs = hecke_reduce(HeckeElem(n) - alg.delta_coeffwise(i, s));
        const HeckeElem rhs = alg.mul(s, HeckeElem::generator(n, i, Poly::one(n)));
        const bool ok = vanishes(spec, hecke_reduce(lhs - rhs));
        nlohmann::json detail = nlohmann::json::object();
        if (!ok) detail = {{"lhs", elem_json(lhs)}, {"rhs", elem_json(rhs)}};
        r.add("(i) -Delta_" + std::to_string(i) + " S == S u_" + std::to_string(i), ok, detail);
    }

    const HeckeElem s_raw = big_product_S(alg, false);
    const SchubertContext sctx(spec.symbolic(), n);
    const Permutation w0 = Permutation::longest(n);
    const auto cases = all_word_cases(n);
    std::vector<std::array<CheckCase, 2>> results(cases.size());
    parallel_for(cases.size(), opt.threads, [&](std::size_t k) {
        const auto& [w, word] = cases[k];
        const Permutation w0w = perm_compose(w0, w);
        const Poly lg = schubert_polynomial(sctx, word);
        const Poly coeff = s_raw.coefficient(w0w);
        const Poly diff = coeff - lg;
        const std::string base = "(ii) w=" + render_perm(w) + " word=(" + render_word(word) + ")";
        auto make = [&](const std::set<int>& support, const char* reading, Status on_fail) {
            const bool ok = vanishes_mod(spec, diff, support);
            CheckCase c{base + " mod J(" + reading + "=" + set_text(support) + ")", ok ? Status::pass : on_fail, {}};
            if (!ok) {
                c.detail = {{"coefficient", render_text(spec.apply(coeff))},
                            {"LG", render_text(spec.apply(lg))},
                            {"residue", render_text(spec.apply(delete_multiples(diff, j_generators(support))))}};
            }
            return c;
        };
        results[k] = {make(support_of(w), "supp w", Status::fail),
                      make(support_of(w0w), "supp w0w", Status::finding)};
    });
    for (auto& pair : results) {
        for (auto& c : pair) r.add(std::move(c));
    }
    return r;
}

Report verify_coeff_corollary(const FglSpec& spec, int n, VerifyOptions opt) {
    require_rank(n, 2, 4, "verify_coeff_corollary");
    Report r{"LG vs KLG n=" + std::to_string(n) + " (" + spec.describe() + ")", {}};
    const SchubertContext sctx(spec.symbolic(), n);
    const Permutation w0 = Permutation::longest(n);
    const auto cases = all_word_cases(n);
    std::vector<std::array<CheckCase, 2>> results(cases.size());
    parallel_for(cases.size(), opt.threads, [&](std::size_t k) {
        const auto& [w, word] = cases[k];
        const Poly diff = schubert_polynomial(sctx, word) - grothendieck_polynomial(sctx, w);
        const std::string base = "w=" + render_perm(w) + " word=(" + render_word(word) + ")";
        auto make = [&](const std::set<int>& support, const char* reading, Status on_fail) {
            const bool ok = vanishes_mod(spec, diff, support);
            CheckCase c{base + " mod J(" + reading + "=" + set_text(support) + ")", ok ? Status::pass : on_fail, {}};
            if (!ok) c.detail = {{"residue", render_text(spec.apply(delete_multiples(diff, j_generators(support))))}};
            return c;
        };
        results[k] = {make(support_of(w), "supp w", Status::fail),
                      make(support_of(perm_compose(w0, w)), "supp w0w", Status::finding)};
    });
    for (auto& pair : results) {
        for (auto& c : pair) r.add(std::move(c));
    }
    return r;
}

Report verify_local_identities(const FglSpec& spec, int n, SeriesCap cap) {
    require_rank(n, 2, 5, "verify_local_identities");
    if (cap.cap < 4) throw DomainError("verify_local_identities needs cap >= 4");
    const FglSpec sym = spec.symbolic();
    const HeckeAlgebra alg(sym, n);
    Report r{"local identities n=" + std::to_string(n) + " cap=" + std::to_string(cap.cap) + " (" + spec.describe() +
                 ")",
             {}};
    // One extra degree so Delta_i (which lowers degree by one) stays exact up to cap.
    const SeriesCap wide{cap.cap + 1};
    const Poly chi1 = formal_inverse(sym, wide);
    const Poly fdiff = fgl_difference_series(sym, wide);
    const HeckeElem one = HeckeElem::scalar(Poly::one(n));

    auto compare = [&](const std::string& label, const HeckeElem& lhs, const HeckeElem& rhs, Status on_fail) {
        const HeckeElem l = hecke_reduce(truncate(lhs, cap));
        const HeckeElem rr = hecke_reduce(truncate(rhs, cap));
        const bool ok = vanishes(spec, hecke_reduce(l - rr));
        CheckCase c{label, ok ? Status::pass : on_fail, {}};
        if (!ok) c.detail = {{"lhs", elem_json(l)}, {"rhs", elem_json(rr)}};
        r.add(std::move(c));
    };

    for (int i = 1; i < n; ++i) {
        const std::string tag = " i=" + std::to_string(i);
        const std::array<int, 1> at_i{i};
        const std::array<int, 1> at_next{i + 1};
        const std::array<int, 2> next_then_i{i + 1, i};
        const Poly x_next = Poly::var(n, i + 1);
        const Poly chi_i = embed(chi1, n, at_i);
        const Poly chi_next = embed(chi1, n, at_next);
        const Poly f_next_chi_i = embed(fdiff, n, next_then_i);
        const HeckeElem ui = HeckeElem::generator(n, i, Poly::one(n));
        const HeckeElem one_chi_next = one + HeckeElem::generator(n, i, chi_next);

        compare("(0) (1 + x_{i+1}u_i)(1 + chi(x_{i+1})u_i) = 1" + tag,
                alg.mul(one + HeckeElem::generator(n, i, x_next), one_chi_next), one, Status::fail);
        compare("(1) alpha_{i+1}(x_{i+1}) = alpha_i(x_{i+1})(1 + chi(x_{i+1})u_i)" + tag,
                alpha_any(alg, i + 1, x_next, true), alg.mul(alpha_any(alg, i, x_next, true), one_chi_next),
                Status::fail);
        compare("(2) 1 + chi(x_i)u_i = (1 + F(x_{i+1},chi(x_i))u_i)(1 + chi(x_{i+1})u_i)" + tag,
                one + HeckeElem::generator(n, i, chi_i),
                alg.mul(one + HeckeElem::generator(n, i, f_next_chi_i), one_chi_next), Status::fail);
        const HeckeElem delta = alg.delta_coeffwise(i, one_chi_next);
        const HeckeElem rhs3 = alg.mul(one_chi_next, ui);
        compare("(3) -Delta_i(1 + chi(x_{i+1})u_i) = (1 + chi(x_{i+1})u_i)u_i" + tag, HeckeElem(n) - delta, rhs3,
                Status::fail);
        compare("(3, unsigned) Delta_i(1 + chi(x_{i+1})u_i) = (1 + chi(x_{i+1})u_i)u_i" + tag, delta, rhs3,
                Status::finding);
    }
    return r;
}

Report verify_ybe(const FglSpec& spec, int n) {
    require_rank(n, 2, 5, "verify_ybe");
    const HeckeAlgebra alg(spec.symbolic(), n);
    Report r{"Yang-Baxter n=" + std::to_string(n) + " (" + spec.describe() + ")", {}};
    for (int i = 1; i < n; ++i) {
        const Poly xi = Poly::var(n, i);
        const Poly xn = Poly::var(n, i + 1);
        const HeckeElem lhs = alg.mul(alpha_any(alg, i, xi, true), alpha_any(alg, i, xn, true));
        const HeckeElem rhs = alg.mul(alpha_any(alg, i, xn, true), alpha_any(alg, i, xi, true));
        const bool ok = vanishes(spec, hecke_reduce(lhs - rhs));
        nlohmann::json detail = nlohmann::json::object();
        if (!ok) detail = {{"lhs", elem_json(lhs)}, {"rhs", elem_json(rhs)}};
        r.add("alpha_" + std::to_string(i) + "(x_" + std::to_string(i) + ") alpha_" + std::to_string(i) + "(x_" +
                  std::to_string(i + 1) + ") commute",
              ok, detail);
    }
    return r;
}

}  // namespace schubcalc
