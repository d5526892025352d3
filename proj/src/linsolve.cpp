#include "schubcalc/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace schubcalc {

SolveResult solve_exact(IntMatrix a, const std::vector<mpz_class>& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m) throw std::invalid_argument("right-hand side length mismatch");

    // Augmented matrix, right-hand side in column n.
    IntMatrix aug(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = std::move(a(r, c));
        aug(r, n) = b[r];
    }

    mpz_class prev = 1;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    bool free_column = false;
    mpz_class t;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug(p, c) == 0) ++p;
        if (p == m) {
            free_column = true;
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(r, j));
        }
        const mpz_class piv = aug(r, c);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const mpz_class lead = aug(i, c);
            for (std::size_t j = 0; j <= n; ++j) {
                if (j == c) continue;
                t = piv * aug(i, j) - lead * aug(r, j);
                mpz_divexact(aug(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            aug(i, c) = 0;
        }
        // Earlier pivot rows are rescaled by piv/prev along with everything
        // else, so the diagonal stays equal to the running determinant.
        prev = piv;
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() < n) free_column = true;

    SolveResult res{SolveStatus::unique, {}, pivot_col.size()};
    for (std::size_t i = r; i < m; ++i) {
        if (aug(i, n) != 0) {
            res.status = SolveStatus::inconsistent;
            return res;
        }
    }
    if (free_column) {
        res.status = SolveStatus::underdetermined;
        return res;
    }
    res.x.assign(n, 0);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        const mpz_class& d = aug(k, pivot_col[k]);
        if (!mpz_divisible_p(aug(k, n).get_mpz_t(), d.get_mpz_t())) {
            res.status = SolveStatus::non_integral;
            res.x.clear();
            return res;
        }
        mpz_divexact(res.x[pivot_col[k]].get_mpz_t(), aug(k, n).get_mpz_t(), d.get_mpz_t());
    }
    return res;
}

}  // namespace schubcalc
