#pragma once

// Exact solution of integer linear systems by fraction-free Gauss-Jordan
// elimination (Bareiss). Every intermediate entry is a minor of the augmented
// matrix, so all divisions are exact and no rationals appear.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace schubcalc {

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpz_class> data_;
};

enum class SolveStatus {
    unique,           // single integer solution in `x`
    inconsistent,     // no solution, even over Q
    underdetermined,  // some column has no pivot
    non_integral,     // unique rational solution that is not integral
};

struct SolveResult {
    SolveStatus status;
    std::vector<mpz_class> x;
    std::size_t rank = 0;
};

SolveResult solve_exact(IntMatrix a, const std::vector<mpz_class>& b);

}  // namespace schubcalc
