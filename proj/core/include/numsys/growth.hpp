#pragma once

#include <vector>

#include "numsys/bigint.hpp"
#include "numsys/dfa.hpp"

namespace numsys {

// Asymptotic class of the counting function n -> #(L ∩ Σ^n).
struct GrowthClass {
  enum class Kind { polynomial, exponential };

  Kind kind = Kind::polynomial;
  // For polynomial growth, the degree of the nonzero subsequence of the
  // counting function. Finite languages report degree 0 with finite=true.
  int degree = 0;
  bool finite = false;

  bool is_polynomial() const { return kind == Kind::polynomial; }
  bool is_exponential() const { return kind == Kind::exponential; }
};

// Classifies growth from the cycle structure of the live part: exponential
// iff some live state lies on two distinct cycles (a strongly connected
// component that is not a single simple cycle); otherwise polynomial of
// degree l where l+1 is the maximum number of cyclic components on a path
// from the initial state to a final state. Throws empty_language.
GrowthClass classify_growth(const OrderedDfa& dfa);

// Integer coefficients d_1..d_m of a linear recurrence
//   u(q, n+m) = d_1 u(q, n+m-1) + ... + d_m u(q, n)
// satisfied by every state's count sequence: the characteristic polynomial of
// the live-state transition count matrix, computed exactly. Validity is
// re-checked on n <= 2m + num_states.
std::vector<Integer> common_recurrence(const OrderedDfa& dfa);

}  // namespace numsys
