#include <doctest.h>

#include <map>

#include "numsys/transducer.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace numsys;

TEST_CASE("decomposition of the aa-free system") {
  NumerationSystem ns = fixtures::sys_no_aa();
  Decomposition dec = solve_decomposition(ns);

  CHECK(dec.alpha == 1);
  CHECK(dec.k == 2);
  CHECK(dec.anchor_state == ns.dfa().initial);
  // canonical order: 0 = clean state, 1 = just-read-a, 2 = sink
  REQUIRE(dec.e.size() == 3);
  CHECK(dec.e[0] == std::vector<Integer>{0, 1});
  CHECK(dec.e[1] == std::vector<Integer>{2, 0});
  CHECK(dec.e[2] == std::vector<Integer>{0, 0});

  CHECK(dec.positional.term(0) == 1);
  CHECK(dec.positional.term(1) == 3);
  CHECK(dec.positional.term(2) == 8);
  CHECK(dec.positional.term(3) == 22);
  CHECK(dec.positional.term(4) == 60);
  CHECK(dec.positional.recurrence() == std::vector<Integer>{2, 2});
  CHECK(dec.hankel_det != 0);

  CHECK(pisot_check(dec.positional.recurrence()).is_pisot());
}

TEST_CASE("decomposition verification and perturbation") {
  NumerationSystem ns = fixtures::sys_no_aa();
  Decomposition dec = solve_decomposition(ns);

  DecompositionVerification ok = verify_decomposition(ns, dec, 20);
  CHECK(ok.ok);
  CHECK(ok.checked_upto >= 20);

  Decomposition broken = dec;
  broken.e[1][0] = 3;  // 3*U_0 != u(t, 1) = 2
  DecompositionVerification bad = verify_decomposition(ns, broken);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.first_failure_n.has_value());
  CHECK(*bad.first_failure_n == 0);
}

TEST_CASE("beta counts and digit-weight tables") {
  NumerationSystem ns = fixtures::sys_no_aa();
  const OrderedDfa& dfa = ns.dfa();
  Decomposition dec = solve_decomposition(ns);

  auto beta = beta_counts(dfa);
  // Row sums are fixed by construction: one unit for the initial column plus
  // one unit per strictly smaller letter.
  for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
    for (State q = 0; q < dfa.num_states; ++q) {
      Integer sum = 0;
      for (State p = 0; p < dfa.num_states; ++p) sum += beta[a][q][p];
      CHECK(sum == Integer(static_cast<long>(a + 1)));
    }
  }
  // Hand values for the three-state automaton (0 clean, 1 after-a, 2 sink).
  CHECK(beta[0] == std::vector<std::vector<Integer>>{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}});
  CHECK(beta[1] == std::vector<std::vector<Integer>>{{1, 1, 0}, {1, 0, 1}, {1, 0, 1}});
  CHECK(beta[2] == std::vector<std::vector<Integer>>{{2, 1, 0}, {2, 0, 1}, {1, 0, 2}});

  auto lambda = lambda_table(ns, dec);
  auto rows = [](std::vector<std::vector<Integer>> m) { return m; };
  CHECK(lambda[0] == rows({{0, 1}, {0, 1}, {0, 1}}));
  CHECK(lambda[1] == rows({{2, 1}, {0, 1}, {0, 1}}));
  CHECK(lambda[2] == rows({{2, 2}, {0, 2}, {0, 1}}));

  // The weight identity, recomputed from raw counts.
  for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
    for (State q = 0; q < dfa.num_states; ++q) {
      for (std::size_t j = 0; j < dec.k; ++j) {
        Integer sum = 0;
        for (State p = 0; p < dfa.num_states; ++p) sum += beta[a][q][p] * dec.e[p][j];
        CHECK(lambda[a][q][j] == sum);
      }
    }
  }
}

TEST_CASE("transducer preserves length and value on the aa-free system") {
  NumerationSystem ns = fixtures::sys_no_aa();
  Decomposition dec = solve_decomposition(ns);
  DigitTransducer t = build_transducer(ns, dec);

  CHECK(t.k == 2);
  CHECK(t.num_states() < 32);

  // determinism of the input projection
  std::map<std::pair<std::uint32_t, Letter>, int> seen;
  for (const auto& tr : t.transitions) {
    CHECK(++seen[{tr.from, tr.input}] == 1);
  }

  std::map<std::vector<std::int64_t>, Word> image;
  for (const Word& w : oracles::enumerate_language(ns.dfa(), 8)) {
    DigitWord g = apply_transducer(ns, t, w);
    CHECK(g.digits.size() == w.size());
    CHECK(pi_value(dec.positional, g) == dec.alpha * value(ns, w));
    auto [it, inserted] = image.emplace(g.digits, w);
    CHECK(inserted);  // injectivity
  }

  CHECK_THROWS_AS(apply_transducer(ns, t, ns.alphabet().parse("aa")), error);
}

TEST_CASE("conversion pipeline yields canonical expansions") {
  NumerationSystem ns = fixtures::sys_no_aa();
  Decomposition dec = solve_decomposition(ns);
  DigitTransducer t = build_transducer(ns, dec);

  for (long x = 0; x < 2000; ++x) {
    Word w = representation(ns, Integer(x));
    DigitWord canonical = convert_representation(ns, dec, t, w);
    CHECK(pi_value(dec.positional, canonical) == Integer(x));  // alpha == 1
    CHECK(canonical == rho_greedy(dec.positional, Integer(x)));
  }
  // the rank-0 word converts to the empty canonical word
  CHECK(convert_representation(ns, dec, t, representation(ns, 0)).digits.empty());
}

TEST_CASE("width-one systems relabel the automaton") {
  OrderedAlphabet s = fixtures::ab();
  NumerationSystem ns = make_system(lang::all(s));
  Decomposition dec = solve_decomposition(ns);
  CHECK(dec.k == 1);
  CHECK(dec.alpha == 1);
  CHECK(dec.positional.term(5) == 32);

  DigitTransducer t = build_transducer(ns, dec);
  CHECK(t.num_states() == ns.dfa().num_states);  // single empty remainder tuple
  CHECK(t.remainder_values.empty());

  // the digit function is the bijective base-2 numeration
  for (const Word& w : oracles::enumerate_language(ns.dfa(), 10)) {
    DigitWord g = apply_transducer(ns, t, w);
    CHECK(g.digits.size() == w.size());
    CHECK(pi_value(dec.positional, g) == value(ns, w));
    for (std::int64_t d : g.digits) CHECK((d == 1 || d == 2));
  }
}

TEST_CASE("power-of-two anchor for a+{a,b}*") {
  NumerationSystem ns = make_system(fixtures::a_plus_all());
  Decomposition dec = solve_decomposition(ns);

  // anchor counts are 1, 2, 4, 8, ...
  for (int n = 0; n < 10; ++n) CHECK(dec.positional.term(n) == Integer(1) << n);
  CHECK(dec.positional.recurrence() == std::vector<Integer>{2});
  CHECK(pisot_check(dec.positional.recurrence()).dominant_root == doctest::Approx(2.0));
  CHECK(dec.alpha == 1);
  CHECK(dec.k == 2);

  DigitTransducer t = build_transducer(ns, dec);
  for (const Word& w : oracles::enumerate_language(ns.dfa(), 10)) {
    DigitWord g = apply_transducer(ns, t, w);
    CHECK(g.digits.size() == w.size());
    CHECK(pi_value(dec.positional, g) == value(ns, w));
  }
  // conversion produces plain binary expansions of the rank
  for (long x = 0; x < 500; ++x) {
    Word w = representation(ns, Integer(x));
    DigitWord converted = convert_representation(ns, dec, t, w);
    PositionalSystem base2 = make_positional({2}, {1});
    CHECK(converted.digits == rho_greedy(base2, Integer(x)).digits);
  }
}

TEST_CASE("systems without a workable anchor") {
  SUBCASE("mixed exponential and golden-ratio counts") {
    NumerationSystem ns = make_system(fixtures::a_or_contains_bb());
    CHECK_THROWS_AS(solve_decomposition(ns), error);
    try {
      solve_decomposition(ns);
    } catch (const error& e) {
      CHECK(e.code() == errc::no_suitable_anchor);
    }
  }

  SUBCASE("constant counts cannot increase") {
    OrderedAlphabet s = fixtures::ab();
    NumerationSystem ns = make_system(lang::star(lang::word(s, "a")));
    CHECK_THROWS_AS(solve_decomposition(ns), error);
    try {
      solve_decomposition(ns);
    } catch (const error& e) {
      CHECK(e.code() == errc::not_positional);
    }
  }
}
