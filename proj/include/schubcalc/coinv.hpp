#pragma once

// Normal forms modulo the ideal S of positive-degree symmetric polynomials.
//
// The rewriting basis is h_{n-k+1}(x_1, ..., x_k), k = 1..n, whose leading
// monomials under lex with x_1 < ... < x_n are x_k^{n-k+1}. Normal forms are
// supported on the staircase: exponent of x_k at most n-k.

#include <vector>

#include "schubcalc/fgl.hpp"
#include "schubcalc/poly.hpp"
#include "schubcalc/report.hpp"

namespace schubcalc {

class NotInSpan : public Error {
public:
    using Error::Error;
};

class BasisDependent : public Error {
public:
    using Error::Error;
};

/// h_d(x_1, ..., x_k) in nvars variables.
Poly complete_homogeneous(int d, int k, int nvars);
/// e_d(x_1, ..., x_n).
Poly elementary_symmetric(int d, int nvars);

/// The n! monomials with exponent of x_k at most n-k, in canonical order.
std::vector<Poly> staircase_monomials(int n);
bool is_staircase(const Poly& f);

Poly normal_form(const Poly& f);
bool equals_mod_S(const Poly& f, const Poly& g);

/// Coefficients c_j over Z[mu1,mu2] with normal_form(f - sum c_j basis_j) == 0.
/// Inputs must be homogeneous; c_j is then homogeneous of degree
/// deg f - deg basis_j. Throws NotInSpan or BasisDependent.
std::vector<Poly> expand_in_basis(const Poly& f, const std::vector<Poly>& basis);

/// (a) prod_{i<j}(x_i - x_j) == n! LG_1 mod S and
/// (b) prod_{i<j} F(x_i, chi(x_j)) == prod_{i<j}(x_i - x_j) mod S, with each
/// factor expanded as (x_i - x_j)/p(x_i,x_j) to the given cap.
/// Needs 2 <= n <= 5 and cap > n(n-1)/2.
Report vandermonde_check(const FglSpec& spec, int n, SeriesCap cap);

}  // namespace schubcalc
