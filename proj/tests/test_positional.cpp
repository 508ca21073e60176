#include <doctest.h>

#include <random>

#include "numsys/positional.hpp"
#include "support/fixtures.hpp"

using namespace numsys;

namespace {

PositionalSystem base2() { return make_positional({2}, {1}); }
PositionalSystem zeckendorf() { return make_positional({1, 1}, {1, 2}); }
PositionalSystem tribase() { return make_positional({2, 2}, {1, 3}); }  // 1,3,8,22,60,...

}  // namespace

TEST_CASE("system construction and digit bounds") {
  PositionalSystem b2 = base2();
  CHECK(b2.term(10) == 1024);
  CHECK(b2.canonical_digit_bound() == 1);

  PositionalSystem z = zeckendorf();
  CHECK(z.term(2) == 3);
  CHECK(z.term(4) == 8);
  CHECK(z.canonical_digit_bound() == 1);

  PositionalSystem t = tribase();
  CHECK(t.term(2) == 8);
  CHECK(t.term(3) == 22);
  CHECK(t.term(4) == 60);
  CHECK(t.canonical_digit_bound() == 2);
}

TEST_CASE("construction rejects bad inputs") {
  CHECK_THROWS_AS(make_positional({1, 0}, {1, 2}), error);  // trailing zero
  try {
    make_positional({1, 0}, {1, 2});
  } catch (const error& e) {
    CHECK(e.code() == errc::zero_trailing_coefficient);
  }

  CHECK_THROWS_AS(make_positional({1}, {1}), error);  // constant sequence
  try {
    make_positional({1}, {1});
  } catch (const error& e) {
    CHECK(e.code() == errc::not_increasing);
  }

  CHECK_THROWS_AS(make_positional({2}, {3}), error);  // must start at 1
}

TEST_CASE("digit-word values") {
  CHECK(pi_value(base2(), DigitWord::of({1, 0, 1})) == 5);
  CHECK(pi_value(tribase(), DigitWord::of({1, 1})) == 4);
  // non-canonical digits are fine for the value map
  CHECK(pi_value(base2(), DigitWord::of({2, -1})) == 3);
  CHECK(pi_value(base2(), DigitWord{}) == 0);

  DigitWord too_long;
  too_long.digits.assign(PositionalSystem::kDefaultHorizon + 1, 0);
  too_long.alphabet = {0};
  CHECK_THROWS_AS(pi_value(base2(), too_long), error);
}

TEST_CASE("greedy expansion") {
  CHECK(rho_greedy(base2(), 0).digits.empty());
  CHECK(rho_greedy(base2(), 5).digits == std::vector<std::int64_t>{1, 0, 1});
  CHECK(rho_greedy(tribase(), 13).digits == std::vector<std::int64_t>{1, 1, 2});  // 8+3+2
}

TEST_CASE("greedy round trip, canonical digits and dominance") {
  for (const PositionalSystem& ps : {base2(), zeckendorf(), tribase()}) {
    for (long x = 0; x < 100000; ++x) {
      DigitWord w = rho_greedy(ps, Integer(x));
      CHECK(pi_value(ps, w) == Integer(x));
      if (x > 0) CHECK(w.digits.front() != 0);
      for (std::int64_t d : w.digits) {
        CHECK(d >= 0);
        CHECK(d <= ps.canonical_digit_bound());
      }
      // greedy dominance: the value carried below weight t stays under U_t
      const std::size_t n = w.digits.size();
      Integer below = 0;
      for (std::size_t t = 0; t < n; ++t) {
        CHECK(below < ps.term(t));
        below += Integer(static_cast<long>(w.digits[n - 1 - t])) * ps.term(t);
      }
    }
  }
}

TEST_CASE("greedy expansions are genealogically monotone") {
  for (const PositionalSystem& ps : {base2(), zeckendorf(), tribase()}) {
    DigitWord prev = rho_greedy(ps, 0);
    for (long x = 1; x < 20000; ++x) {
      DigitWord cur = rho_greedy(ps, Integer(x));
      bool less = prev.digits.size() < cur.digits.size() ||
                  (prev.digits.size() == cur.digits.size() && prev.digits < cur.digits);
      CHECK(less);
      prev = cur;
    }
  }
}

TEST_CASE("normalization") {
  PositionalSystem b2 = base2();
  CHECK(normalize(b2, DigitWord::of({2, -1})).digits == std::vector<std::int64_t>{1, 1});
  CHECK(normalize(tribase(), DigitWord::of({0, 4})).digits == std::vector<std::int64_t>{1, 1});

  // canonical input is a fixed point
  DigitWord canonical = rho_greedy(b2, 37);
  CHECK(normalize(b2, canonical) == canonical);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::int64_t> digits;
    for (int i = 0; i < 6; ++i) digits.push_back(static_cast<std::int64_t>(rng() % 7) - 1);
    DigitWord w = DigitWord::of(digits);
    if (pi_value(b2, w) < 0) {
      CHECK_THROWS_AS(normalize(b2, w), error);
      continue;
    }
    DigitWord once = normalize(b2, w);
    CHECK(normalize(b2, once) == once);
    CHECK(pi_value(b2, once) == pi_value(b2, w));
  }
}

TEST_CASE("dominant-root reports") {
  PisotReport r1 = pisot_check({2, 2});  // x^2 - 2x - 2
  CHECK(r1.is_pisot());
  CHECK(r1.irreducible);
  CHECK(r1.dominant_root == doctest::Approx(2.7320508).epsilon(1e-6));

  PisotReport r2 = pisot_check({2});  // x - 2
  CHECK(r2.is_pisot());
  CHECK(r2.dominant_root == doctest::Approx(2.0));

  PisotReport r3 = pisot_check({1, 1});  // golden ratio
  CHECK(r3.is_pisot());
  CHECK(r3.dominant_root == doctest::Approx(1.6180339).epsilon(1e-6));

  PisotReport r4 = pisot_check({3, -1});  // x^2 - 3x + 1
  CHECK(r4.is_pisot());

  PisotReport reducible = pisot_check({2, 0});  // x(x - 2)
  CHECK_FALSE(reducible.is_pisot());
  CHECK_FALSE(reducible.irreducible);

  PisotReport two_outside = pisot_check({0, 4});  // x^2 - 4 = (x-2)(x+2)
  CHECK_FALSE(two_outside.is_pisot());

  PisotReport boundary = pisot_check({1});  // x - 1, root on the circle
  CHECK(boundary.verdict == PisotReport::Verdict::inconclusive);
}
