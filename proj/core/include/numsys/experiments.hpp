#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "numsys/growth.hpp"
#include "numsys/numeration.hpp"

namespace numsys {

// Exact polynomial description of the counting function rho(n) = #(L ∩ Σ^n)
// for n > 0, together with the summation polynomial P with P(0) = 0 and
// P(n+1) = P(n) + rho(n) for n >= 1. P takes integer values on the integers.
struct CountPolynomial {
  std::vector<Rational> a;  // rho coefficients, a[i] multiplies n^i
  std::vector<Rational> b;  // P coefficients, b[i] multiplies n^i (b[0] = 0)

  int degree() const { return static_cast<int>(a.size()) - 1; }
  Rational rho_at(const Integer& n) const;
  Integer p_at(const Integer& n) const;
};

// Recovers the coefficients by exact interpolation on degree+1 points and
// verifies them across the horizon. Throws not_exactly_polynomial when the
// finite differences do not vanish (growth that is polynomial only in order
// of magnitude), unsupported_growth_class for exponential languages.
CountPolynomial fit_count_polynomial(const NumerationSystem& ns, std::size_t horizon = 64);

// Deterministic experiment output: tabular rows plus named verdicts and a
// note of the oracles used. Serialized as JSON by the CLI.
struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::string> oracle_notes;

  bool anomalous = false;  // drives the CLI exit code

  const std::string* verdict(const std::string& key) const;
};

// Reproduces the doubled-cumulative-count table for the numeration system on
// the complement of a*b* over {a,b}: rows (n, 2 v_n, leading-b run, tail
// length) for n = 1..21, compared against the embedded golden copy.
// Throws golden_mismatch on the first differing row.
ExperimentReport table1_experiment();

// Multiplication-by-lambda evidence. Polynomial systems: X = P(N), samples
// f(n) = |representation(lambda P(n))| and runs the progression detector;
// when lambda is an (l+1)-th power the affine law f(n) = beta n + C is
// reported with its constant. Complement-of-polynomial systems: X = {v_n},
// reports leading-run and tail growth of representation(lambda v_n).
// Other systems degrade to a raw listing.
ExperimentReport multiplication_experiment(const NumerationSystem& ns, const Integer& lambda,
                                           std::size_t n_max = 400);

// Emits v_n / n^(l+1) (exact and decimal) and rho(n) / n^l for a polynomial
// system; verdict "converging" when the last-quarter oscillation is below
// 1e-3 and the limit estimate is positive.
ExperimentReport convergence_experiment(const NumerationSystem& ns, std::size_t n_max = 400);

}  // namespace numsys
