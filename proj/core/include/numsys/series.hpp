#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "numsys/numeration.hpp"

namespace numsys {

// Names the coordinates of the generator basis used by the series
// construction. Order: all T[k] (k over X-states), then U[l][m], U'[l][m],
// V[l][m] (l over X-states, m over L-states, row major), then W[k][a]
// (k over X-states, a over letters).
struct SeriesGenerators {
  std::size_t x_states = 0;  // states of the support automaton
  std::size_t l_states = 0;  // states of the system automaton
  std::size_t letters = 0;

  std::size_t t(std::size_t k) const { return k; }
  std::size_t u(std::size_t l, std::size_t m) const { return x_states + l * l_states + m; }
  std::size_t up(std::size_t l, std::size_t m) const {
    return x_states + x_states * l_states + l * l_states + m;
  }
  std::size_t v(std::size_t l, std::size_t m) const {
    return x_states + 2 * x_states * l_states + l * l_states + m;
  }
  std::size_t w(std::size_t k, std::size_t a) const {
    return x_states + 3 * x_states * l_states + k * letters + a;
  }
  std::size_t dim() const { return x_states + 3 * x_states * l_states + x_states * letters; }

  std::string name(std::size_t index) const;
};

// Row vector, letter-indexed square matrices, column vector; the value of a
// word is lambda * mu(w_1) * ... * mu(w_n) * gamma. Ring is the integers or
// the integers mod q.
struct LinearRepresentation {
  OrderedAlphabet alphabet;
  std::size_t dim = 0;
  std::optional<Integer> modulus;  // nullopt: integers; q >= 2 otherwise
  std::vector<Integer> lambda;             // dim
  std::vector<std::vector<Integer>> mu;    // per letter, dim*dim row major
  std::vector<Integer> gamma;              // dim
  std::optional<SeriesGenerators> generators;
};

// Linear representation of the series that assigns every word of L its rank.
LinearRepresentation build_series_representation(const NumerationSystem& ns);

// Same construction with support restricted to a sublanguage: evaluates to
// value(w) on words of dfaX and to zero on other words of positive rank.
// The generators run over the reachable pairs of the product with the system
// automaton, so any valid automaton for a sublanguage of L is accepted.
LinearRepresentation build_subset_series(const NumerationSystem& ns, const OrderedDfa& dfaX);

// lambda * mu(w) * gamma; entries reduced mod q when the ring is modular.
Integer evaluate(const LinearRepresentation& rep, const Word& w);

// Entrywise reduction mod q (q >= 2). Evaluation commutes with reduction.
LinearRepresentation reduce_mod(const LinearRepresentation& rep, const Integer& q);

}  // namespace numsys
