#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <vector>

#include "numsys/bigint.hpp"
#include "numsys/dfa.hpp"

namespace numsys {

// Memoized exact word counts per state of a complete automaton:
//   u(q, n) = number of words of length exactly n accepted from q,
//   v(q, n) = number of words of length at most n accepted from q.
// Levels are computed on demand: u(q, 0) = [q final],
// u(q, n+1) = sum over letters of u(step(q, a), n).
//
// Safe for concurrent readers: level growth is mutex guarded and the owning
// automaton is immutable.
class CountTable {
 public:
  explicit CountTable(std::shared_ptr<const OrderedDfa> owner);

  const OrderedDfa& owner() const { return *dfa_; }

  // u(state, n); n >= 0.
  const Integer& count(State state, std::size_t n) const;
  // v(state, n); n >= -1 with v(state, -1) = 0.
  const Integer& cumulative(State state, std::ptrdiff_t n) const;

  std::size_t levels_computed() const;

 private:
  void ensure_level(std::size_t n) const;

  std::shared_ptr<const OrderedDfa> dfa_;
  mutable std::mutex mutex_;
  // Per level, per state. Deques keep references into finished levels valid
  // while later levels are appended.
  mutable std::deque<std::vector<Integer>> u_;
  mutable std::deque<std::vector<Integer>> v_;
  static const Integer zero_;
};

}  // namespace numsys
