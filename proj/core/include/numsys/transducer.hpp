#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numsys/numeration.hpp"
#include "numsys/positional.hpp"

namespace numsys {

// Exact decomposition of every state's count sequence over an anchor final
// state f:  alpha * u(p, n+k-1) = sum_i e[p][i] * U_(n+i), U_n = u(f, n).
struct Decomposition {
  Integer alpha = 1;
  std::size_t k = 0;
  std::vector<std::vector<Integer>> e;  // per state, k coefficients
  PositionalSystem positional;          // the sequence U
  State anchor_state = 0;
  Integer hankel_det = 0;               // det of the k x k window matrix at the anchor
};

struct DecompositionVerification {
  bool ok = true;
  std::size_t checked_upto = 0;
  std::optional<std::size_t> first_failure_n;
  std::optional<State> first_failure_state;
  // The agreement horizon that, combined with the shared recurrence, extends
  // the identity to every n.
  std::string justification;
};

// Finds the smallest width k and the first anchor final state (in canonical
// order) whose count sequence expresses every state's counts exactly.
// Throws no_suitable_anchor when no final state works at any width, and
// not_positional when every admissible anchor yields a non-increasing U.
Decomposition solve_decomposition(const NumerationSystem& ns);

// Re-checks the defining identity for n = 0 .. (recurrence order + k +
// extra_horizon). Agreement on the first `order` values already implies all n
// because both sides satisfy the common recurrence.
DecompositionVerification verify_decomposition(const NumerationSystem& ns,
                                               const Decomposition& dec,
                                               std::size_t extra_horizon = 8);

// Letter-to-letter two-tape automaton computing a digit function g with
// |g(w)| = |w| and pi_U(g(w)) = alpha * value(w). States pair an automaton
// state with a tuple of k-1 carried remainders; the last k-1 letters of a
// word are consumed by per-state tail edges carrying the closing constant.
struct DigitTransducer {
  struct MainTransition {
    std::uint32_t from = 0;
    Letter input = 0;
    std::int64_t output = 0;
    std::uint32_t to = 0;
  };
  struct TailEdge {
    std::uint32_t from = 0;
    Word suffix;                         // length k-1
    std::vector<std::int64_t> outputs;   // length k-1
  };

  std::size_t k = 1;
  Integer alpha = 1;
  std::vector<State> state_component;                       // per transducer state
  std::vector<std::vector<std::int64_t>> remainder_component;  // per transducer state, k-1 values
  std::uint32_t start = 0;
  std::vector<MainTransition> transitions;
  std::vector<TailEdge> tail_edges;
  std::map<Word, std::vector<std::int64_t>> short_words;  // |w| < k
  std::set<std::int64_t> output_alphabet;                 // B
  std::set<std::int64_t> remainder_values;                // T
  bool widened_output_alphabet = false;  // short-word table needed digits outside B

  std::size_t num_states() const { return state_component.size(); }
};

struct TransducerOptions {
  std::size_t max_states = 1'000'000;
};

// Builds the transducer from a verified decomposition. Throws
// remainder_closure_overflow when the reachable state set exceeds the bound.
DigitTransducer build_transducer(const NumerationSystem& ns, const Decomposition& dec,
                                 const TransducerOptions& options = {});

// g(w); throws not_in_language for words outside L.
DigitWord apply_transducer(const NumerationSystem& ns, const DigitTransducer& t, const Word& w);

// Canonical positional representation of alpha * value(w):
// rho_U(pi_U(g(w))).
DigitWord convert_representation(const NumerationSystem& ns, const Decomposition& dec,
                                 const DigitTransducer& t, const Word& w);

// The lambda table lambda[q][letter][j] = sum_p beta(q, p, letter) * e[p][j],
// where beta counts strictly smaller letters leading q to p (plus one when
// p is the initial state). Exposed for inspection and cross-checks.
std::vector<std::vector<std::vector<Integer>>> lambda_table(const NumerationSystem& ns,
                                                            const Decomposition& dec);
std::vector<std::vector<std::vector<Integer>>> beta_counts(const OrderedDfa& dfa);

}  // namespace numsys
