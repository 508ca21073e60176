#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "numsys/count_table.hpp"
#include "numsys/dfa.hpp"

namespace numsys {

// A numeration system: an infinite regular language over an ordered alphabet,
// enumerated genealogically. The n-th word (0-based) represents n.
class NumerationSystem {
 public:
  const OrderedDfa& dfa() const { return *dfa_; }
  std::shared_ptr<const OrderedDfa> dfa_ptr() const { return dfa_; }
  const OrderedAlphabet& alphabet() const { return dfa_->alphabet; }
  CountTable& counts() const { return *counts_; }

 private:
  friend NumerationSystem make_system(const OrderedDfa& dfa);
  std::shared_ptr<const OrderedDfa> dfa_;
  std::shared_ptr<CountTable> counts_;
};

// Minimizes and trims the automaton, verifies the language is infinite.
// Throws empty_language / finite_language.
NumerationSystem make_system(const OrderedDfa& dfa);

// 0-based genealogical rank of w within the language accepted from `from`
// (defaults to the initial state). Throws not_in_language.
Integer value(const NumerationSystem& ns, const Word& w);
Integer value_from_state(const NumerationSystem& ns, State from, const Word& w);

// Inverse of value: the unique word of rank x. x >= 0.
Word representation(const NumerationSystem& ns, const Integer& x);

// Length of representation(x) without materializing the word: the n with
// v(n-1) <= x < v(n).
std::size_t representation_length(const NumerationSystem& ns, const Integer& x);

// Automaton accepting { w in L : value(w) ≡ p (mod q) and value(w) >= p }.
// q >= 1; throws invalid_modulus when q == 0.
OrderedDfa progression_automaton(const NumerationSystem& ns, const Integer& p, const Integer& q);

// Detection of eventual arithmetic progressions in the image of a strictly
// increasing integer function given by its samples f(0), f(1), ...
struct APDetection {
  enum class Verdict { eventually_ap, not_ap_on_window, inconclusive };

  Verdict verdict = Verdict::inconclusive;
  std::int64_t y0 = 0;     // image threshold
  std::int64_t gamma = 0;  // image period
  std::int64_t k = 0;      // domain step: f(x + n k) = f(x) + n gamma for sampled x >= x0
  std::int64_t x0 = 0;     // first domain point of the verified progression
};

struct APDetectParams {
  std::int64_t gamma_max = 64;
  // A period candidate only counts as refuted when the clean evidence window
  // above the last violation would have spanned at least this many periods.
  std::int64_t margin_periods = 2;
};

// Throws not_strictly_increasing when the samples are not strictly increasing.
APDetection eventual_ap_detect(const std::vector<std::int64_t>& samples,
                               const APDetectParams& params = {});

}  // namespace numsys
