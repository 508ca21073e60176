#pragma once

#include <initializer_list>
#include <string_view>

#include "numsys/dfa.hpp"

namespace numsys {

// Small language combinators for building test and experiment automata.
// Each returns the minimal complete automaton over the given alphabet.
namespace lang {

// The language containing exactly one word.
OrderedDfa word(const OrderedAlphabet& alphabet, std::string_view text);
// The empty-word language {epsilon}.
OrderedDfa epsilon(const OrderedAlphabet& alphabet);
// All words over the alphabet.
OrderedDfa all(const OrderedAlphabet& alphabet);
// Single-letter languages {a} for each letter in `letters`, unioned.
OrderedDfa any_of(const OrderedAlphabet& alphabet, std::string_view letters_joined);

OrderedDfa union_(const OrderedDfa& a, const OrderedDfa& b);
OrderedDfa concat(const OrderedDfa& a, const OrderedDfa& b);
OrderedDfa star(const OrderedDfa& a);
OrderedDfa plus(const OrderedDfa& a);
OrderedDfa intersect(const OrderedDfa& a, const OrderedDfa& b);

}  // namespace lang

}  // namespace numsys
