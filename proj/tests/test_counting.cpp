#include <doctest.h>

#include <memory>

#include "numsys/count_table.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace numsys;

namespace {

CountTable table_for(const OrderedDfa& dfa) {
  return CountTable(std::make_shared<OrderedDfa>(minimize(dfa)));
}

}  // namespace

TEST_CASE("counts match exhaustive enumeration") {
  for (const OrderedDfa& dfa :
       {fixtures::a_star_b_star(), fixtures::complement_a_star_b_star(),
        fixtures::even_a_star_b_star(), fixtures::a_plus_all()}) {
    OrderedDfa minimal = minimize(dfa);
    CountTable counts(std::make_shared<OrderedDfa>(minimal));
    for (State q = 0; q < minimal.num_states; ++q) {
      for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(counts.count(q, n) == oracles::brute_count(minimal, q, n));
      }
    }
  }
  // three-letter fixture at a smaller horizon
  OrderedDfa no_aa = minimize(fixtures::no_aa());
  CountTable counts(std::make_shared<OrderedDfa>(no_aa));
  for (State q = 0; q < no_aa.num_states; ++q) {
    for (std::size_t n = 0; n <= 9; ++n) {
      CHECK(counts.count(q, n) == oracles::brute_count(no_aa, q, n));
    }
  }
}

TEST_CASE("count recurrence over letters") {
  CountTable counts = table_for(fixtures::no_aa());
  const OrderedDfa& dfa = counts.owner();
  for (State q = 0; q < dfa.num_states; ++q) {
    for (std::size_t n = 0; n < 40; ++n) {
      Integer sum = 0;
      for (Letter a = 0; a < dfa.alphabet.size(); ++a) sum += counts.count(dfa.step(q, a), n);
      CHECK(counts.count(q, n + 1) == sum);
    }
  }
}

TEST_CASE("a*b* counts n+1 words of each length") {
  CountTable counts = table_for(fixtures::a_star_b_star());
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(counts.count(counts.owner().initial, n) == Integer(static_cast<long>(n + 1)));
  }
}

TEST_CASE("even-length a*b* counts") {
  // Even lengths carry 2n+1 words (a^i b^j with i+j = 2n), odd lengths none;
  // the running totals repeat each square: v(2n) = v(2n+1) = (n+1)^2.
  CountTable counts = table_for(fixtures::even_a_star_b_star());
  const State s = counts.owner().initial;
  for (std::size_t n = 0; n <= 15; ++n) {
    CHECK(counts.count(s, 2 * n) == Integer(static_cast<long>(2 * n + 1)));
    CHECK(counts.count(s, 2 * n + 1) == 0);
    Integer square(static_cast<long>((n + 1) * (n + 1)));
    CHECK(counts.cumulative(s, static_cast<std::ptrdiff_t>(2 * n)) == square);
    CHECK(counts.cumulative(s, static_cast<std::ptrdiff_t>(2 * n + 1)) == square);
  }
}

TEST_CASE("complement cumulative counts follow the closed form") {
  CountTable counts = table_for(fixtures::complement_a_star_b_star());
  const State s = counts.owner().initial;
  for (long n = 0; n <= 21; ++n) {
    Integer expect = (Integer(1) << (n + 1)) - Integer(n * (n + 3) / 2) - 2;
    CHECK(counts.cumulative(s, n) == expect);
  }
}

TEST_CASE("cumulative base cases") {
  CountTable counts = table_for(fixtures::a_star_b_star());
  const OrderedDfa& dfa = counts.owner();
  for (State q = 0; q < dfa.num_states; ++q) {
    CHECK(counts.cumulative(q, -1) == 0);
    CHECK(counts.count(q, 0) == (dfa.final_states[q] ? 1 : 0));
  }
}
