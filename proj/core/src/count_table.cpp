#include "numsys/count_table.hpp"

namespace numsys {

const Integer CountTable::zero_ = 0;

CountTable::CountTable(std::shared_ptr<const OrderedDfa> owner) : dfa_(std::move(owner)) {
  require(dfa_ != nullptr, errc::invalid_argument, "count table needs an automaton");
  std::vector<Integer> level0(dfa_->num_states);
  for (State q = 0; q < dfa_->num_states; ++q) {
    level0[q] = dfa_->final_states[q] ? 1 : 0;
  }
  u_.push_back(level0);
  v_.push_back(std::move(level0));
}

void CountTable::ensure_level(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (u_.size() <= n) {
    const std::vector<Integer>& prev = u_.back();
    std::vector<Integer> next(dfa_->num_states);
    for (State q = 0; q < dfa_->num_states; ++q) {
      Integer sum = 0;
      for (Letter a = 0; a < dfa_->alphabet.size(); ++a) sum += prev[dfa_->step(q, a)];
      next[q] = std::move(sum);
    }
    std::vector<Integer> cumulative(dfa_->num_states);
    for (State q = 0; q < dfa_->num_states; ++q) cumulative[q] = v_.back()[q] + next[q];
    u_.push_back(std::move(next));
    v_.push_back(std::move(cumulative));
  }
}

const Integer& CountTable::count(State state, std::size_t n) const {
  ensure_level(n);
  return u_[n][state];
}

const Integer& CountTable::cumulative(State state, std::ptrdiff_t n) const {
  if (n < 0) return zero_;
  ensure_level(static_cast<std::size_t>(n));
  return v_[static_cast<std::size_t>(n)][state];
}

std::size_t CountTable::levels_computed() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return u_.size();
}

}  // namespace numsys
