#include "numsys/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>

namespace numsys {

namespace {

std::vector<State> bfs_order(const OrderedDfa& dfa, const std::vector<bool>& allowed) {
  std::vector<State> order;
  std::vector<bool> seen(dfa.num_states, false);
  if (!allowed[dfa.initial]) return order;
  std::queue<State> queue;
  queue.push(dfa.initial);
  seen[dfa.initial] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop();
    order.push_back(q);
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      State t = dfa.step(q, a);
      if (allowed[t] && !seen[t]) {
        seen[t] = true;
        queue.push(t);
      }
    }
  }
  return order;
}

}  // namespace

void validate(const OrderedDfa& dfa) {
  require(dfa.alphabet.size() > 0, errc::invalid_argument, "automaton needs an alphabet");
  require(dfa.num_states > 0, errc::invalid_argument, "automaton needs at least one state");
  require(dfa.initial < dfa.num_states, errc::invalid_argument, "initial state out of range");
  require(dfa.final_states.size() == dfa.num_states, errc::invalid_argument,
          "final-state mask size mismatch");
  require(dfa.transitions.size() == std::size_t{dfa.num_states} * dfa.alphabet.size(),
          errc::invalid_argument, "transition table must be total");
  for (State t : dfa.transitions) {
    require(t < dfa.num_states, errc::invalid_argument, "transition target out of range");
  }
}

std::vector<bool> OrderedDfa::reachable() const {
  std::vector<bool> seen(num_states, false);
  std::queue<State> queue;
  queue.push(initial);
  seen[initial] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop();
    for (Letter a = 0; a < alphabet.size(); ++a) {
      State t = step(q, a);
      if (!seen[t]) {
        seen[t] = true;
        queue.push(t);
      }
    }
  }
  return seen;
}

std::vector<bool> OrderedDfa::coreachable() const {
  std::vector<std::vector<State>> reverse(num_states);
  for (State q = 0; q < num_states; ++q) {
    for (Letter a = 0; a < alphabet.size(); ++a) reverse[step(q, a)].push_back(q);
  }
  std::vector<bool> seen(num_states, false);
  std::queue<State> queue;
  for (State q = 0; q < num_states; ++q) {
    if (final_states[q]) {
      seen[q] = true;
      queue.push(q);
    }
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop();
    for (State p : reverse[q]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push(p);
      }
    }
  }
  return seen;
}

std::vector<bool> OrderedDfa::live_states() const {
  std::vector<bool> r = reachable(), c = coreachable(), live(num_states, false);
  for (State q = 0; q < num_states; ++q) live[q] = r[q] && c[q];
  return live;
}

OrderedDfa trim(const OrderedDfa& dfa) {
  validate(dfa);
  std::vector<bool> live = dfa.live_states();
  require(live[dfa.initial], errc::empty_language, "no final state is reachable");

  std::vector<State> order = bfs_order(dfa, live);
  bool needs_sink = false;
  for (State q : order) {
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      if (!live[dfa.step(q, a)]) needs_sink = true;
    }
  }

  OrderedDfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = static_cast<State>(order.size() + (needs_sink ? 1 : 0));
  out.initial = 0;
  out.final_states.assign(out.num_states, false);
  out.transitions.assign(std::size_t{out.num_states} * dfa.alphabet.size(), 0);

  std::vector<State> renumber(dfa.num_states, kNoState);
  for (State i = 0; i < order.size(); ++i) renumber[order[i]] = i;
  const State sink = static_cast<State>(order.size());

  for (State i = 0; i < order.size(); ++i) {
    State q = order[i];
    out.final_states[i] = dfa.final_states[q];
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      State t = dfa.step(q, a);
      out.transitions[i * dfa.alphabet.size() + a] = live[t] ? renumber[t] : sink;
    }
  }
  if (needs_sink) {
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      out.transitions[sink * dfa.alphabet.size() + a] = sink;
    }
  }
  return out;
}

OrderedDfa minimize(const OrderedDfa& dfa) {
  validate(dfa);
  const std::size_t sigma = dfa.alphabet.size();

  // Restrict to reachable states first.
  std::vector<bool> reach = dfa.reachable();
  std::vector<State> keep = bfs_order(dfa, reach);
  std::vector<State> renumber(dfa.num_states, kNoState);
  for (State i = 0; i < keep.size(); ++i) renumber[keep[i]] = i;

  const State n = static_cast<State>(keep.size());
  std::vector<State> delta(std::size_t{n} * sigma);
  std::vector<bool> final_mask(n);
  for (State i = 0; i < n; ++i) {
    final_mask[i] = dfa.final_states[keep[i]];
    for (Letter a = 0; a < sigma; ++a) {
      delta[i * sigma + a] = renumber[dfa.step(keep[i], a)];
    }
  }

  // Moore partition refinement.
  std::vector<std::uint32_t> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = final_mask[q] ? 1 : 0;
  std::uint32_t num_classes = 2;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    std::vector<std::uint32_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig;
      sig.reserve(sigma + 1);
      sig.push_back(cls[q]);
      for (Letter a = 0; a < sigma; ++a) sig.push_back(cls[delta[q * sigma + a]]);
      auto [it, inserted] = index.emplace(std::move(sig), static_cast<std::uint32_t>(index.size()));
      next[q] = it->second;
    }
    if (index.size() == num_classes) break;
    num_classes = static_cast<std::uint32_t>(index.size());
    cls = std::move(next);
  }

  // Quotient automaton on class representatives.
  OrderedDfa quotient;
  quotient.alphabet = dfa.alphabet;
  quotient.num_states = num_classes;
  quotient.initial = cls[0];  // state 0 is the (reachable-BFS) initial
  quotient.final_states.assign(num_classes, false);
  quotient.transitions.assign(std::size_t{num_classes} * sigma, 0);
  for (State q = 0; q < n; ++q) {
    quotient.final_states[cls[q]] = final_mask[q];
    for (Letter a = 0; a < sigma; ++a) {
      quotient.transitions[cls[q] * sigma + a] = cls[delta[q * sigma + a]];
    }
  }

  // Canonical order: BFS from the initial state, sink class last.
  std::vector<bool> coreach = quotient.coreachable();
  std::vector<bool> all(quotient.num_states, true);
  std::vector<State> order = bfs_order(quotient, all);
  std::stable_partition(order.begin(), order.end(), [&](State q) { return coreach[q]; });

  std::vector<State> canon(quotient.num_states, kNoState);
  for (State i = 0; i < order.size(); ++i) canon[order[i]] = i;

  OrderedDfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = quotient.num_states;
  out.initial = canon[quotient.initial];
  out.final_states.assign(out.num_states, false);
  out.transitions.assign(std::size_t{out.num_states} * sigma, 0);
  for (State q = 0; q < quotient.num_states; ++q) {
    out.final_states[canon[q]] = quotient.final_states[q];
    for (Letter a = 0; a < sigma; ++a) {
      out.transitions[canon[q] * sigma + a] = canon[quotient.transitions[q * sigma + a]];
    }
  }
  return out;
}

OrderedDfa complement(const OrderedDfa& dfa) {
  validate(dfa);
  OrderedDfa out = dfa;
  for (State q = 0; q < out.num_states; ++q) out.final_states[q] = !out.final_states[q];
  return out;
}

namespace {

OrderedDfa product(const OrderedDfa& a, const OrderedDfa& b, bool intersect) {
  validate(a);
  validate(b);
  require(a.alphabet == b.alphabet, errc::invalid_argument,
          "product requires identical alphabets");
  const std::size_t sigma = a.alphabet.size();

  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> states;
  auto intern = [&](State qa, State qb) {
    auto [it, inserted] = index.emplace(std::make_pair(qa, qb), static_cast<State>(states.size()));
    if (inserted) states.emplace_back(qa, qb);
    return it->second;
  };

  OrderedDfa out;
  out.alphabet = a.alphabet;
  out.initial = intern(a.initial, b.initial);
  for (State i = 0; i < states.size(); ++i) {
    auto [qa, qb] = states[i];
    for (Letter l = 0; l < sigma; ++l) {
      State t = intern(a.step(qa, l), b.step(qb, l));
      (void)t;
    }
  }
  out.num_states = static_cast<State>(states.size());
  out.final_states.assign(out.num_states, false);
  out.transitions.assign(std::size_t{out.num_states} * sigma, 0);
  for (State i = 0; i < states.size(); ++i) {
    auto [qa, qb] = states[i];
    out.final_states[i] = intersect ? (a.final_states[qa] && b.final_states[qb])
                                    : (a.final_states[qa] && !b.final_states[qb]);
    for (Letter l = 0; l < sigma; ++l) {
      out.transitions[i * sigma + l] = index.at({a.step(qa, l), b.step(qb, l)});
    }
  }
  return out;
}

}  // namespace

OrderedDfa product_intersection(const OrderedDfa& a, const OrderedDfa& b) {
  return product(a, b, true);
}

OrderedDfa product_difference(const OrderedDfa& a, const OrderedDfa& b) {
  return product(a, b, false);
}

bool is_language_empty(const OrderedDfa& dfa) {
  std::vector<bool> reach = dfa.reachable();
  for (State q = 0; q < dfa.num_states; ++q) {
    if (reach[q] && dfa.final_states[q]) return false;
  }
  return true;
}

bool accepts_infinite_language(const OrderedDfa& dfa) {
  std::vector<bool> live = dfa.live_states();
  // A cycle within the live part reaches a final state by definition.
  for (State q = 0; q < dfa.num_states; ++q) {
    if (!live[q]) continue;
    // DFS from q looking for a path back to q through live states.
    std::vector<bool> seen(dfa.num_states, false);
    std::vector<State> stack;
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
      State t = dfa.step(q, a);
      if (live[t] && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      if (s == q) return true;
      for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
        State t = dfa.step(s, a);
        if (live[t] && !seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  return false;
}

bool is_sublanguage(const OrderedDfa& sub, const OrderedDfa& super) {
  return is_language_empty(product_difference(sub, super));
}

bool same_language(const OrderedDfa& a, const OrderedDfa& b) {
  return is_sublanguage(a, b) && is_sublanguage(b, a);
}

StateMorphism automaton_morphism(const OrderedDfa& dfaK, const OrderedDfa& dfaL) {
  validate(dfaK);
  validate(dfaL);
  require(dfaK.alphabet == dfaL.alphabet, errc::invalid_argument,
          "morphism requires identical alphabets");
  require(is_sublanguage(dfaK, dfaL), errc::not_a_sublanguage,
          "the first language is not contained in the second");

  StateMorphism h;
  h.map.assign(dfaK.num_states, kNoState);

  std::vector<bool> live = dfaK.live_states();
  if (live[dfaK.initial]) {
    h.map[dfaK.initial] = dfaL.initial;
    std::queue<State> queue;
    queue.push(dfaK.initial);
    while (!queue.empty()) {
      State q = queue.front();
      queue.pop();
      for (Letter a = 0; a < dfaK.alphabet.size(); ++a) {
        State qn = dfaK.step(q, a);
        if (!live[qn]) continue;
        State pn = dfaL.step(h.map[q], a);
        if (h.map[qn] == kNoState) {
          h.map[qn] = pn;
          queue.push(qn);
        } else {
          require(h.map[qn] == pn, errc::morphism_conflict,
                  "two images for one state: the sublanguage's states do not "
                  "determine superlanguage states");
        }
      }
    }
    for (State q = 0; q < dfaK.num_states; ++q) {
      if (h.map[q] != kNoState && dfaK.final_states[q]) {
        require(dfaL.final_states[h.map[q]], errc::morphism_conflict,
                "image of a final state is not final");
      }
    }
  }

  // The sink of K gets an image only when one is forced consistently: all
  // transitions from live states into the sink must point at the same
  // absorbing state of L. Otherwise no total extension exists and the sink
  // stays unmapped.
  State sink_image = kNoState;
  bool ambiguous = false;
  for (State q = 0; q < dfaK.num_states && !ambiguous; ++q) {
    if (h.map[q] == kNoState || !live[q]) continue;
    for (Letter a = 0; a < dfaK.alphabet.size(); ++a) {
      if (live[dfaK.step(q, a)]) continue;
      State candidate = dfaL.step(h.map[q], a);
      if (sink_image == kNoState) {
        sink_image = candidate;
      } else if (sink_image != candidate) {
        ambiguous = true;
        break;
      }
    }
  }
  if (sink_image != kNoState && !ambiguous) {
    bool absorbing = true;
    for (Letter a = 0; a < dfaL.alphabet.size(); ++a) {
      absorbing = absorbing && dfaL.step(sink_image, a) == sink_image;
    }
    if (absorbing && !dfaL.final_states[sink_image]) {
      for (State q = 0; q < dfaK.num_states; ++q) {
        if (h.map[q] == kNoState) h.map[q] = sink_image;
      }
    }
  }
  return h;
}

}  // namespace numsys
