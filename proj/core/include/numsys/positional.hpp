#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <vector>

#include "numsys/bigint.hpp"

namespace numsys {

// A word over an integer digit alphabet, most significant digit first.
// pi(digits) = sum digits[i] * U_(n-1-i). Digits may be negative or exceed
// the canonical bound; the declared alphabet records where they come from.
struct DigitWord {
  std::vector<std::int64_t> digits;
  std::set<std::int64_t> alphabet;

  static DigitWord over(std::vector<std::int64_t> digits, std::set<std::int64_t> alphabet);
  // Alphabet derived from the digits themselves.
  static DigitWord of(std::vector<std::int64_t> digits);

  bool operator==(const DigitWord&) const = default;
};

// A positional numeration system: a strictly increasing integer sequence
// U_0 = 1 < U_1 < ... defined by a linear recurrence with d_m != 0, with the
// canonical digit alphabet {0..Q}, Q < max U_(n+1)/U_n.
class PositionalSystem {
 public:
  static constexpr std::size_t kDefaultHorizon = 512;

  const std::vector<Integer>& recurrence() const { return recurrence_; }
  const std::vector<Integer>& terms() const { return terms_; }
  const Integer& term(std::size_t n) const;
  std::size_t horizon() const { return terms_.size(); }
  std::int64_t canonical_digit_bound() const { return q_bound_; }

 private:
  friend PositionalSystem make_positional(const std::vector<Integer>& recurrence,
                                          const std::vector<Integer>& initial,
                                          std::size_t horizon);
  std::vector<Integer> recurrence_;
  std::vector<Integer> terms_;
  std::int64_t q_bound_ = 0;
};

// Materializes U on the horizon, validating d_m != 0 (zero_trailing_coefficient),
// U_0 = 1 and |initial| = order (invalid_argument), strict increase
// (not_increasing). The digit bound Q is ceil(max ratio) - 1.
PositionalSystem make_positional(const std::vector<Integer>& recurrence,
                                 const std::vector<Integer>& initial,
                                 std::size_t horizon = PositionalSystem::kDefaultHorizon);

// Numerical value of a digit word. Throws horizon_exceeded when the word is
// longer than the materialized sequence.
Integer pi_value(const PositionalSystem& ps, const DigitWord& x);

// Greedy canonical expansion of x >= 0 over {0..Q}; rho(0) is the empty word.
DigitWord rho_greedy(const PositionalSystem& ps, const Integer& x);

// rho(pi(x)); throws negative_value when pi(x) < 0.
DigitWord normalize(const PositionalSystem& ps, const DigitWord& x);

// Dominant-root analysis of the recurrence's characteristic polynomial.
struct PisotReport {
  enum class Verdict { pisot, not_pisot, inconclusive };

  Verdict verdict = Verdict::inconclusive;
  bool irreducible = false;
  double dominant_root = 0.0;
  std::vector<std::complex<double>> roots;

  bool is_pisot() const { return verdict == Verdict::pisot; }
};

// True iff the characteristic polynomial x^m - d_1 x^(m-1) - ... - d_m is
// irreducible over Q (exact check) and has exactly one root of modulus > 1
// with all others of modulus < 1 - 1e-9. Root moduli within tolerance of 1
// yield an inconclusive verdict instead of a silent call.
PisotReport pisot_check(const std::vector<Integer>& recurrence);

}  // namespace numsys
