#include "numsys/growth.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include "numsys/count_table.hpp"
#include "numsys/linalg.hpp"

namespace numsys {

namespace {

struct SccResult {
  std::vector<int> component;  // -1 for excluded states
  int count = 0;
};

// Iterative Tarjan over the subgraph induced by `allowed`.
SccResult strongly_connected_components(const OrderedDfa& dfa, const std::vector<bool>& allowed) {
  const int n = static_cast<int>(dfa.num_states);
  SccResult result;
  result.component.assign(n, -1);
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int state;
    Letter letter;
  };

  for (int root = 0; root < n; ++root) {
    if (!allowed[root] || index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& frame = frames.back();
      if (frame.letter < dfa.alphabet.size()) {
        State t = dfa.step(frame.state, frame.letter);
        ++frame.letter;
        if (!allowed[t]) continue;
        if (index[t] == -1) {
          index[t] = lowlink[t] = next_index++;
          stack.push_back(static_cast<int>(t));
          on_stack[t] = true;
          frames.push_back({static_cast<int>(t), 0});
        } else if (on_stack[t]) {
          lowlink[frame.state] = std::min(lowlink[frame.state], index[t]);
        }
      } else {
        int v = frame.state;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().state;
          lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          for (;;) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            result.component[w] = result.count;
            if (w == v) break;
          }
          ++result.count;
        }
      }
    }
  }
  return result;
}

}  // namespace

GrowthClass classify_growth(const OrderedDfa& dfa) {
  OrderedDfa t = trim(dfa);
  std::vector<bool> live = t.live_states();
  SccResult scc = strongly_connected_components(t, live);

  // Edge statistics per component, letters counted with multiplicity.
  std::vector<int> internal_out(t.num_states, 0);
  std::vector<bool> cyclic(scc.count, false), simple(scc.count, true);
  std::vector<int> comp_size(scc.count, 0);
  for (State q = 0; q < t.num_states; ++q) {
    if (!live[q]) continue;
    ++comp_size[scc.component[q]];
    for (Letter a = 0; a < t.alphabet.size(); ++a) {
      State to = t.step(q, a);
      if (live[to] && scc.component[to] == scc.component[q]) {
        ++internal_out[q];
        cyclic[scc.component[q]] = true;  // size 1 with self-loop, or part of a bigger SCC
      }
    }
  }
  for (State q = 0; q < t.num_states; ++q) {
    if (!live[q]) continue;
    int c = scc.component[q];
    if (comp_size[c] > 1) cyclic[c] = true;
    if (internal_out[q] > 1) simple[c] = false;
    if (comp_size[c] > 1 && internal_out[q] == 0) simple[c] = false;  // unreachable in theory
  }

  for (int c = 0; c < scc.count; ++c) {
    if (cyclic[c] && !simple[c]) return {GrowthClass::Kind::exponential, 0, false};
  }

  // Maximum number of cyclic components along a condensation path starting at
  // the initial component. In a trim automaton every path extends to a final
  // state, so the plain longest path is the right quantity.
  std::vector<int> memo(scc.count, -1);
  std::function<int(int)> best = [&](int c) -> int {
    if (memo[c] != -1) return memo[c];
    int self = cyclic[c] ? 1 : 0;
    int best_succ = 0;
    for (State q = 0; q < t.num_states; ++q) {
      if (!live[q] || scc.component[q] != c) continue;
      for (Letter a = 0; a < t.alphabet.size(); ++a) {
        State to = t.step(q, a);
        if (!live[to] || scc.component[to] == c) continue;
        best_succ = std::max(best_succ, best(scc.component[to]));
      }
    }
    return memo[c] = self + best_succ;
  };
  int tiers = best(scc.component[t.initial]);

  GrowthClass g;
  g.kind = GrowthClass::Kind::polynomial;
  g.finite = (tiers == 0);
  g.degree = g.finite ? 0 : tiers - 1;
  return g;
}

std::vector<Integer> common_recurrence(const OrderedDfa& dfa) {
  OrderedDfa t = trim(dfa);
  std::vector<bool> live = t.live_states();
  std::vector<State> live_index(t.num_states, kNoState);
  std::vector<State> live_list;
  for (State q = 0; q < t.num_states; ++q) {
    if (live[q]) {
      live_index[q] = static_cast<State>(live_list.size());
      live_list.push_back(q);
    }
  }

  IntMatrix m(live_list.size(), live_list.size());
  for (State i = 0; i < live_list.size(); ++i) {
    for (Letter a = 0; a < t.alphabet.size(); ++a) {
      State to = t.step(live_list[i], a);
      if (live[to]) m.at(i, live_index[to]) += 1;
    }
  }

  std::vector<Integer> c = characteristic_polynomial(m);
  std::vector<Integer> d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = -c[i];

  // Cross-check the recurrence against the actual counts.
  auto owner = std::make_shared<OrderedDfa>(t);
  CountTable table(owner);
  const std::size_t order = d.size();
  for (State q = 0; q < t.num_states; ++q) {
    for (std::size_t n = 0; n + order <= 2 * order + t.num_states; ++n) {
      Integer expect = 0;
      for (std::size_t i = 0; i < order; ++i) expect += d[i] * table.count(q, n + order - 1 - i);
      if (table.count(q, n + order) != expect) {
        throw std::logic_error("count recurrence verification failed");
      }
    }
  }
  return d;
}

}  // namespace numsys
