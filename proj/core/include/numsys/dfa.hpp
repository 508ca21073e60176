#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numsys/alphabet.hpp"

namespace numsys {

using State = std::uint32_t;
inline constexpr State kNoState = static_cast<State>(-1);

// A complete deterministic automaton over an ordered alphabet. The transition
// function is total; when a language needs a sink, one non-final absorbing
// state plays that role. Canonical form (produced by trim/minimize): states
// numbered by breadth-first discovery from the initial state, letters taken in
// alphabet order, with the sink state last.
struct OrderedDfa {
  OrderedAlphabet alphabet;
  State num_states = 0;
  State initial = 0;
  std::vector<bool> final_states;         // size num_states
  std::vector<State> transitions;         // num_states * |alphabet|, row major

  State step(State q, Letter a) const { return transitions[q * alphabet.size() + a]; }

  State run(State q, const Word& w) const {
    for (Letter a : w) q = step(q, a);
    return q;
  }

  bool is_final(State q) const { return final_states[q]; }
  bool accepts(const Word& w) const { return is_final(run(initial, w)); }
  bool accepts(std::string_view text) const { return accepts(alphabet.parse(text)); }

  // States from which some final state is reachable.
  std::vector<bool> coreachable() const;
  // States reachable from the initial state.
  std::vector<bool> reachable() const;
  // Reachable and co-reachable.
  std::vector<bool> live_states() const;

  bool operator==(const OrderedDfa&) const = default;
};

// Structural validation: sizes, ranges, totality. Throws invalid_argument.
void validate(const OrderedDfa& dfa);

// Drops states that are unreachable or cannot reach a final state, re-adding a
// single sink so the transition function stays total. Canonical numbering.
// Throws empty_language when no final state is reachable.
OrderedDfa trim(const OrderedDfa& dfa);

// Unique minimal complete automaton of the same language, canonically
// numbered. Accepts the empty language (yields the one-state sink automaton).
OrderedDfa minimize(const OrderedDfa& dfa);

// Complete automaton for the complement language over the same alphabet.
OrderedDfa complement(const OrderedDfa& dfa);

// Product automaton; acceptance is the conjunction (intersect=true) or
// the left-and-not-right difference (intersect=false).
OrderedDfa product_intersection(const OrderedDfa& a, const OrderedDfa& b);
OrderedDfa product_difference(const OrderedDfa& a, const OrderedDfa& b);

bool is_language_empty(const OrderedDfa& dfa);
bool accepts_infinite_language(const OrderedDfa& dfa);
// Language inclusion: every word of `sub` is a word of `super`.
bool is_sublanguage(const OrderedDfa& sub, const OrderedDfa& super);
// Language equality via product emptiness both ways.
bool same_language(const OrderedDfa& a, const OrderedDfa& b);

// State map h from an automaton of a sublanguage K into the automaton of L
// with h(initial)=initial, h respecting transitions and finality on the live
// part of K. The sink of K (if any) carries no image: kNoState.
struct StateMorphism {
  std::vector<State> map;  // kNoState where undefined (the sink of K)

  State operator()(State q) const { return map[q]; }
};

// Computes the morphism by parallel breadth-first traversal over the live
// states of dfaK. Throws not_a_sublanguage when language(dfaK) is not
// contained in language(dfaL), morphism_conflict when the traversal would
// assign two images to one state (non-minimal input).
StateMorphism automaton_morphism(const OrderedDfa& dfaK, const OrderedDfa& dfaL);

}  // namespace numsys
