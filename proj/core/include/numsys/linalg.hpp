#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "numsys/bigint.hpp"

namespace numsys {

// Dense matrices in row-major order; all arithmetic exact.
struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Integer(0)) {}

  Integer& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Monic characteristic polynomial of a square integer matrix, returned as
// coefficients c so that det(xI - M) = x^n + c[0] x^(n-1) + ... + c[n-1].
// Faddeev-LeVerrier; every division is exact.
std::vector<Integer> characteristic_polynomial(const IntMatrix& m);

// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

// Solves A x = b over the rationals. Returns a particular solution with free
// variables set to zero, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& a,
                                                    const std::vector<Rational>& b);

// Shortest linear recurrence s(n+r) = d_1 s(n+r-1) + ... + d_r s(n) valid for
// every n with n + r < seq.size(). Returns the d coefficients (possibly with
// trailing zeros when the sequence has a transient prefix).
std::vector<Rational> minimal_recurrence(const std::vector<Integer>& seq,
                                         std::size_t max_order);

// Exact irreducibility over Q of a monic integer polynomial
// x^n + c[0] x^(n-1) + ... + c[n-1] (Kronecker factor search).
bool is_irreducible_monic(const std::vector<Integer>& coeffs);

// All complex roots of the monic polynomial above (Durand-Kerner iteration).
// `residual_bound` receives a per-root error estimate.
std::vector<std::complex<double>> polynomial_roots(const std::vector<Integer>& coeffs,
                                                   double* residual_bound = nullptr);

}  // namespace numsys
