#pragma once

#include "numsys/lang.hpp"
#include "numsys/numeration.hpp"

namespace numsys::fixtures {

inline OrderedAlphabet ab() { return OrderedAlphabet({"a", "b"}); }
inline OrderedAlphabet abc() { return OrderedAlphabet({"a", "b", "c"}); }

// a*b* over a<b.
inline OrderedDfa a_star_b_star() {
  OrderedAlphabet s = ab();
  return lang::concat(lang::star(lang::word(s, "a")), lang::star(lang::word(s, "b")));
}

// {a,b}* \ a*b*.
inline OrderedDfa complement_a_star_b_star() { return minimize(complement(a_star_b_star())); }

// Words over {a,b,c} without the factor aa.
inline OrderedDfa no_aa() {
  OrderedAlphabet s = abc();
  OrderedDfa contains_aa = lang::concat(lang::concat(lang::all(s), lang::word(s, "aa")),
                                        lang::all(s));
  return minimize(complement(contains_aa));
}

// a*b* restricted to even lengths.
inline OrderedDfa even_a_star_b_star() {
  OrderedAlphabet s = ab();
  OrderedDfa even = lang::star(lang::concat(lang::any_of(s, "ab"), lang::any_of(s, "ab")));
  return lang::intersect(a_star_b_star(), even);
}

// a+{a,b}*.
inline OrderedDfa a_plus_all() {
  OrderedAlphabet s = ab();
  return minimize(lang::concat(lang::word(s, "a"), lang::all(s)));
}

// a{a,b}* ∪ {a,b}*bb{a,b}*.
inline OrderedDfa a_or_contains_bb() {
  OrderedAlphabet s = ab();
  OrderedDfa left = lang::concat(lang::word(s, "a"), lang::all(s));
  OrderedDfa right = lang::concat(lang::concat(lang::all(s), lang::word(s, "bb")), lang::all(s));
  return lang::union_(left, right);
}

inline NumerationSystem sys_a_star_b_star() { return make_system(a_star_b_star()); }
inline NumerationSystem sys_complement() { return make_system(complement_a_star_b_star()); }
inline NumerationSystem sys_no_aa() { return make_system(no_aa()); }

}  // namespace numsys::fixtures
