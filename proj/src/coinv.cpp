#include "schubcalc/coinv.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "schubcalc/linsolve.hpp"
#include "schubcalc/schubert.hpp"

namespace schubcalc {

namespace {

void monomials_of_degree(int d, int k, std::vector<Monomial>& out) {
    Monomial cur;
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == k - 1) {
            cur.x[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(left);
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur.x[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
            self(self, var + 1, left - e);
        }
        cur.x[static_cast<std::size_t>(var)] = 0;
    };
    if (k >= 1) rec(rec, 0, d);
}

using XTerms = std::map<Monomial, mpz_class, CanonicalOrder>;

// Memoized normal forms of pure x-monomials for one n.
class MonomialReducer {
public:
    explicit MonomialReducer(int n) : n_(n) {
        // tails_[k-1] = h_{n-k+1}(x_1..x_k) minus its leading x_k^{n-k+1}
        for (int k = 1; k <= n; ++k) {
            std::vector<Monomial> all;
            monomials_of_degree(n - k + 1, k, all);
            std::erase_if(all, [&](const Monomial& m) { return m.x[static_cast<std::size_t>(k - 1)] == n - k + 1; });
            tails_.push_back(std::move(all));
        }
    }

    const XTerms& reduce(const Monomial& m) {
        if (auto it = memo_.find(m); it != memo_.end()) return it->second;
        XTerms out;
        int k = n_;
        while (k >= 1 && m.x[static_cast<std::size_t>(k - 1)] <= n_ - k) --k;
        if (k == 0) {
            out.emplace(m, 1);
        } else {
            Monomial base = m;
            base.x[static_cast<std::size_t>(k - 1)] =
                static_cast<std::uint16_t>(base.x[static_cast<std::size_t>(k - 1)] - (n_ - k + 1));
            for (const Monomial& t : tails_[static_cast<std::size_t>(k - 1)]) {
                for (const auto& [r, c] : reduce(base * t)) {
                    auto [slot, inserted] = out.try_emplace(r, -c);
                    if (!inserted) {
                        slot->second -= c;
                        if (slot->second == 0) out.erase(slot);
                    }
                }
            }
        }
        return memo_.emplace(m, std::move(out)).first->second;
    }

private:
    int n_;
    std::vector<std::vector<Monomial>> tails_;
    std::map<Monomial, XTerms, CanonicalOrder> memo_;
};

}  // namespace

Poly complete_homogeneous(int d, int k, int nvars) {
    if (k < 0 || k > nvars || d < 0) throw DomainError("complete_homogeneous: bad arguments");
    if (d == 0) return Poly::one(nvars);
    std::vector<Monomial> ms;
    monomials_of_degree(d, k, ms);
    Poly out(nvars);
    for (const auto& m : ms) out.add_term(m, 1);
    return out;
}

Poly elementary_symmetric(int d, int nvars) {
    if (d < 0 || d > nvars) throw DomainError("elementary_symmetric: bad degree");
    Poly out(nvars);
    // Subsets of size d via bitmask; nvars <= kMaxVars keeps this tiny.
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        if (std::popcount(mask) != d) continue;
        Monomial m;
        for (int v = 0; v < nvars; ++v) {
            if (mask & (1u << v)) m.x[static_cast<std::size_t>(v)] = 1;
        }
        out.add_term(m, 1);
    }
    return out;
}

std::vector<Poly> staircase_monomials(int n) {
    std::vector<Poly> out;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(Poly::monomial(n, exps));
            return;
        }
        for (int e = 0; e <= n - 1 - v; ++e) {
            exps[static_cast<std::size_t>(v)] = e;
            self(self, v + 1);
        }
        exps[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        return CanonicalOrder{}(a.terms().begin()->first, b.terms().begin()->first);
    });
    return out;
}

bool is_staircase(const Poly& f) {
    const int n = f.nvars();
    for (const auto& [m, c] : f.terms()) {
        for (int k = 1; k <= n; ++k) {
            if (m.x[static_cast<std::size_t>(k - 1)] > n - k) return false;
        }
    }
    return true;
}

Poly normal_form(const Poly& f) {
    MonomialReducer reducer(f.nvars());
    Poly out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        Monomial xpart = m;
        xpart.mu1 = 0;
        xpart.mu2 = 0;
        for (const auto& [r, rc] : reducer.reduce(xpart)) {
            Monomial t = r;
            t.mu1 = m.mu1;
            t.mu2 = m.mu2;
            out.add_term(t, c * rc);
        }
    }
    return out;
}

bool equals_mod_S(const Poly& f, const Poly& g) { return normal_form(f - g).is_zero(); }

std::vector<Poly> expand_in_basis(const Poly& f, const std::vector<Poly>& basis) {
    const int n = f.nvars();
    const DegreeReport fd = graded_degree(f);
    if (!fd.homogeneous) throw DomainError("expand_in_basis: target is not homogeneous");
    struct Unknown {
        std::size_t j;
        int a;
        int b;
    };
    std::vector<Unknown> unknowns;
    std::vector<Poly> basis_nf;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        require_same_nvars(f, basis[j]);
        const DegreeReport bd = graded_degree(basis[j]);
        if (!bd.homogeneous || !bd.degree) {
            throw DomainError("expand_in_basis: basis element " + std::to_string(j) + " is zero or inhomogeneous");
        }
        basis_nf.push_back(normal_form(basis[j]));
        if (!fd.degree) continue;  // zero target: every coefficient is zero
        const int gap = *bd.degree - *fd.degree;
        for (int b = 0; 2 * b <= gap; ++b) unknowns.push_back({j, gap - 2 * b, b});
    }
    std::vector<Poly> coeffs(basis.size(), Poly(n));
    if (f.is_zero()) return coeffs;

    const Poly target = normal_form(f);
    std::map<Monomial, std::size_t, CanonicalOrder> row_of;
    std::vector<Poly> columns;
    for (const Unknown& u : unknowns) {
        Poly col = Poly::monomial(n, std::vector<int>{}, u.a, u.b) * basis_nf[u.j];
        for (const auto& [m, c] : col.terms()) row_of.try_emplace(m, row_of.size());
        columns.push_back(std::move(col));
    }
    for (const auto& [m, c] : target.terms()) row_of.try_emplace(m, row_of.size());

    IntMatrix a(row_of.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& [m, v] : columns[c].terms()) a(row_of.at(m), c) = v;
    }
    std::vector<mpz_class> rhs(row_of.size(), 0);
    for (const auto& [m, v] : target.terms()) rhs[row_of.at(m)] = v;

    const SolveResult sol = solve_exact(std::move(a), rhs);
    switch (sol.status) {
        case SolveStatus::inconsistent:
        case SolveStatus::non_integral:
            throw NotInSpan("target is not in the Z[mu1,mu2]-span of the basis modulo S");
        case SolveStatus::underdetermined:
            throw BasisDependent("basis is not independent modulo S in the required degrees");
        case SolveStatus::unique:
            break;
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if (sol.x[u] == 0) continue;
        coeffs[unknowns[u].j] += Poly::monomial(n, std::vector<int>{}, unknowns[u].a, unknowns[u].b, sol.x[u]);
    }
    return coeffs;
}

Report vandermonde_check(const FglSpec& spec, int n, SeriesCap cap) {
    if (n < 2 || n > 5) throw CapacityError("vandermonde_check supports 2 <= n <= 5");
    const int top = n * (n - 1) / 2;
    if (cap.cap <= top) {
        throw DomainError("series cap " + std::to_string(cap.cap) + " must exceed the top staircase degree " +
                          std::to_string(top));
    }
    Report r{"vandermonde n=" + std::to_string(n) + " (" + spec.describe() + ")", {}};

    Poly vdm = Poly::one(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) vdm = vdm * (Poly::var(n, i) - Poly::var(n, j));
    }
    mpz_class fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    const Poly diff_a = normal_form(vdm - fact * initial_class(n));
    r.add("(a) Vandermonde == n! LG_1 mod S", diff_a.is_zero(), {{"residue", render_text(diff_a)}});

    const Poly p = diff_kernel(spec);
    Poly vdm_f = Poly::one(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::array<int, 2> at{i, j};
            const Poly factor = (Poly::var(n, i) - Poly::var(n, j)) * series_invert_unit(embed(p, n, at), cap);
            vdm_f = truncate(vdm_f * truncate(factor, cap), cap);
        }
    }
    const Poly diff_b = normal_form(vdm_f - vdm);
    r.add("(b) FGL Vandermonde == Vandermonde mod S", diff_b.is_zero(), {{"residue", render_text(diff_b)}});
    return r;
}

}  // namespace schubcalc
