#include "numsys/lang.hpp"

#include <map>
#include <queue>
#include <set>

namespace numsys::lang {

namespace {

// Small epsilon-NFA, only used to realize the combinators below.
struct Nfa {
  OrderedAlphabet alphabet;
  std::size_t num_states = 0;
  std::size_t initial = 0;
  std::set<std::size_t> finals;
  std::map<std::pair<std::size_t, Letter>, std::set<std::size_t>> edges;
  std::map<std::size_t, std::set<std::size_t>> epsilon;

  std::size_t add_state() { return num_states++; }
  void add_edge(std::size_t from, Letter a, std::size_t to) { edges[{from, a}].insert(to); }
  void add_epsilon(std::size_t from, std::size_t to) { epsilon[from].insert(to); }
};

Nfa from_dfa(const OrderedDfa& dfa) {
  Nfa nfa;
  nfa.alphabet = dfa.alphabet;
  nfa.num_states = dfa.num_states;
  nfa.initial = dfa.initial;
  for (State q = 0; q < dfa.num_states; ++q) {
    if (dfa.final_states[q]) nfa.finals.insert(q);
    for (Letter a = 0; a < dfa.alphabet.size(); ++a) nfa.add_edge(q, a, dfa.step(q, a));
  }
  return nfa;
}

// Renumbers `other` into `nfa` with an offset; returns the offset.
std::size_t absorb(Nfa& nfa, const Nfa& other) {
  std::size_t offset = nfa.num_states;
  nfa.num_states += other.num_states;
  for (const auto& [key, targets] : other.edges) {
    for (std::size_t t : targets) nfa.add_edge(key.first + offset, key.second, t + offset);
  }
  for (const auto& [from, targets] : other.epsilon) {
    for (std::size_t t : targets) nfa.add_epsilon(from + offset, t + offset);
  }
  return offset;
}

std::set<std::size_t> closure(const Nfa& nfa, std::set<std::size_t> states) {
  std::queue<std::size_t> queue;
  for (std::size_t q : states) queue.push(q);
  while (!queue.empty()) {
    std::size_t q = queue.front();
    queue.pop();
    auto it = nfa.epsilon.find(q);
    if (it == nfa.epsilon.end()) continue;
    for (std::size_t t : it->second) {
      if (states.insert(t).second) queue.push(t);
    }
  }
  return states;
}

OrderedDfa determinize(const Nfa& nfa) {
  const std::size_t sigma = nfa.alphabet.size();
  std::map<std::set<std::size_t>, State> index;
  std::vector<std::set<std::size_t>> subsets;
  auto intern = [&](std::set<std::size_t> subset) {
    auto [it, inserted] = index.emplace(subset, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };

  intern(closure(nfa, {nfa.initial}));
  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < sigma; ++a) {
      std::set<std::size_t> next;
      for (std::size_t q : subsets[i]) {
        auto it = nfa.edges.find({q, a});
        if (it == nfa.edges.end()) continue;
        next.insert(it->second.begin(), it->second.end());
      }
      delta.push_back(intern(closure(nfa, std::move(next))));
    }
  }

  OrderedDfa dfa;
  dfa.alphabet = nfa.alphabet;
  dfa.num_states = static_cast<State>(subsets.size());
  dfa.initial = 0;
  dfa.transitions = std::move(delta);
  dfa.final_states.assign(dfa.num_states, false);
  for (State i = 0; i < dfa.num_states; ++i) {
    for (std::size_t q : subsets[i]) {
      if (nfa.finals.count(q)) dfa.final_states[i] = true;
    }
  }
  return minimize(dfa);
}

}  // namespace

OrderedDfa word(const OrderedAlphabet& alphabet, std::string_view text) {
  Word w = alphabet.parse(text);
  Nfa nfa;
  nfa.alphabet = alphabet;
  std::size_t cur = nfa.add_state();
  nfa.initial = cur;
  for (Letter a : w) {
    std::size_t next = nfa.add_state();
    nfa.add_edge(cur, a, next);
    cur = next;
  }
  nfa.finals.insert(cur);
  return determinize(nfa);
}

OrderedDfa epsilon(const OrderedAlphabet& alphabet) { return word(alphabet, ""); }

OrderedDfa all(const OrderedAlphabet& alphabet) {
  OrderedDfa dfa;
  dfa.alphabet = alphabet;
  dfa.num_states = 1;
  dfa.initial = 0;
  dfa.final_states = {true};
  dfa.transitions.assign(alphabet.size(), 0);
  return dfa;
}

OrderedDfa any_of(const OrderedAlphabet& alphabet, std::string_view letters_joined) {
  Word letters = alphabet.parse(letters_joined);
  Nfa nfa;
  nfa.alphabet = alphabet;
  std::size_t start = nfa.add_state();
  std::size_t end = nfa.add_state();
  nfa.initial = start;
  nfa.finals.insert(end);
  for (Letter a : letters) nfa.add_edge(start, a, end);
  return determinize(nfa);
}

OrderedDfa union_(const OrderedDfa& a, const OrderedDfa& b) {
  require(a.alphabet == b.alphabet, errc::invalid_argument, "union requires identical alphabets");
  Nfa nfa = from_dfa(a);
  std::size_t offset = absorb(nfa, from_dfa(b));
  std::size_t start = nfa.add_state();
  nfa.add_epsilon(start, nfa.initial);
  nfa.add_epsilon(start, b.initial + offset);
  for (State q = 0; q < b.num_states; ++q) {
    if (b.final_states[q]) nfa.finals.insert(q + offset);
  }
  nfa.initial = start;
  return determinize(nfa);
}

OrderedDfa concat(const OrderedDfa& a, const OrderedDfa& b) {
  require(a.alphabet == b.alphabet, errc::invalid_argument, "concat requires identical alphabets");
  Nfa nfa = from_dfa(a);
  std::size_t offset = absorb(nfa, from_dfa(b));
  for (std::size_t f : nfa.finals) nfa.add_epsilon(f, b.initial + offset);
  nfa.finals.clear();
  for (State q = 0; q < b.num_states; ++q) {
    if (b.final_states[q]) nfa.finals.insert(q + offset);
  }
  return determinize(nfa);
}

OrderedDfa star(const OrderedDfa& a) {
  Nfa nfa = from_dfa(a);
  std::size_t start = nfa.add_state();
  nfa.add_epsilon(start, nfa.initial);
  for (std::size_t f : nfa.finals) nfa.add_epsilon(f, start);
  nfa.finals.insert(start);
  nfa.initial = start;
  return determinize(nfa);
}

OrderedDfa plus(const OrderedDfa& a) { return concat(a, star(a)); }

OrderedDfa intersect(const OrderedDfa& a, const OrderedDfa& b) {
  return minimize(product_intersection(a, b));
}

}  // namespace numsys::lang
