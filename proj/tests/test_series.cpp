#include <doctest.h>

#include <random>

#include "numsys/series.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace numsys;

namespace {

// Hand-reduced 3x3 representation of the a*b* value series, used as an
// independent oracle for the constructed representation.
LinearRepresentation reduced_ab_representation() {
  LinearRepresentation rep;
  rep.alphabet = fixtures::ab();
  rep.dim = 3;
  rep.lambda = {1, 0, 0};
  rep.gamma = {0, 1, 1};
  rep.mu = {
      {1, 1, 0,
       0, 1, 1,
       0, 0, 1},
      {1, 1, 1,
       0, 1, 1,
       0, 0, 1},
  };
  return rep;
}

}  // namespace

TEST_CASE("reduced 3x3 representation evaluates ranks of a*b*") {
  LinearRepresentation rep = reduced_ab_representation();
  NumerationSystem ns = fixtures::sys_a_star_b_star();

  CHECK(evaluate(rep, ns.alphabet().parse("ab")) == 4);
  CHECK(evaluate(rep, ns.alphabet().parse("bb")) == 5);
  CHECK(evaluate(rep, Word{}) == 0);

  for (const Word& w : oracles::enumerate_language(ns.dfa(), 12)) {
    CHECK(evaluate(rep, w) == value(ns, w));
  }
}

TEST_CASE("constructed representation has the generator-basis dimension") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  LinearRepresentation rep = build_series_representation(ns);
  const std::size_t k = ns.dfa().num_states;
  const std::size_t sigma = ns.alphabet().size();
  CHECK(rep.dim == k + 3 * k * k + k * sigma);
  REQUIRE(rep.generators.has_value());
  CHECK(rep.generators->dim() == rep.dim);
  CHECK(rep.generators->name(0) == "T[0]");
}

TEST_CASE("constructed representation matches ranks") {
  auto soundness = [](const NumerationSystem& ns, std::size_t max_len) {
    LinearRepresentation rep = build_series_representation(ns);
    for (const Word& w : oracles::enumerate_language(ns.dfa(), max_len)) {
      CHECK(evaluate(rep, w) == value(ns, w));
    }
  };
  soundness(fixtures::sys_a_star_b_star(), 10);
  soundness(fixtures::sys_complement(), 9);
  soundness(fixtures::sys_no_aa(), 7);
}

TEST_CASE("constructed and reduced representation agree on random words") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  LinearRepresentation built = build_series_representation(ns);
  LinearRepresentation reduced = reduced_ab_representation();
  std::mt19937 rng(20240511);
  // random members of a*b* with |w| <= 12
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t i = rng() % 7, j = rng() % 7;
    Word w;
    w.insert(w.end(), i, 0);
    w.insert(w.end(), j, 1);
    CHECK(evaluate(built, w) == evaluate(reduced, w));
  }
}

TEST_CASE("quotient rows reproduce the shifted coefficients") {
  // Direct series-coefficient check of every matrix row: the coefficient of
  // w in the quotient of a generator equals the coefficient of (letter)(w)
  // in the generator, both sides computed from counts and values alone.
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  const OrderedDfa& dfa = ns.dfa();
  CountTable& counts = ns.counts();
  LinearRepresentation rep = build_series_representation(ns);
  const SeriesGenerators& gen = *rep.generators;

  auto coefficient = [&](std::size_t index, const Word& w) -> Integer {
    if (index < gen.t(dfa.num_states)) {
      State k = static_cast<State>(index);
      if (w.empty() || !dfa.is_final(dfa.run(k, w))) return 0;
      return value_from_state(ns, k, w) -
             counts.cumulative(k, static_cast<std::ptrdiff_t>(w.size()) - 1);
    }
    if (index < gen.u(0, 0) + dfa.num_states * dfa.num_states) {
      std::size_t off = index - gen.u(0, 0);
      State l = static_cast<State>(off / dfa.num_states);
      State m = static_cast<State>(off % dfa.num_states);
      if (w.empty() || !dfa.is_final(dfa.run(l, w))) return 0;
      return counts.count(m, w.size());
    }
    if (index < gen.up(0, 0) + dfa.num_states * dfa.num_states) {
      std::size_t off = index - gen.up(0, 0);
      State l = static_cast<State>(off / dfa.num_states);
      State m = static_cast<State>(off % dfa.num_states);
      if (!dfa.is_final(dfa.run(l, w))) return 0;
      return counts.count(m, w.size());
    }
    if (index < gen.v(0, 0) + dfa.num_states * dfa.num_states) {
      std::size_t off = index - gen.v(0, 0);
      State l = static_cast<State>(off / dfa.num_states);
      State m = static_cast<State>(off % dfa.num_states);
      if (w.empty() || !dfa.is_final(dfa.run(l, w))) return 0;
      return counts.cumulative(m, static_cast<std::ptrdiff_t>(w.size()) - 1);
    }
    std::size_t off = index - gen.w(0, 0);
    State k = static_cast<State>(off / dfa.alphabet.size());
    Letter a = static_cast<Letter>(off % dfa.alphabet.size());
    if (!w.empty() || !dfa.is_final(dfa.step(k, a))) return 0;
    return value_from_state(ns, k, Word{a}) - counts.cumulative(k, 0);
  };

  for (Letter a = 0; a < dfa.alphabet.size(); ++a) {
    for (std::size_t g = 0; g < rep.dim; ++g) {
      for (std::size_t len = 0; len <= 5; ++len) {
        for (const Word& w : oracles::all_words(dfa.alphabet.size(), len)) {
          Word aw;
          aw.push_back(a);
          aw.insert(aw.end(), w.begin(), w.end());
          Integer lhs = coefficient(g, aw);
          Integer rhs = 0;
          for (std::size_t j = 0; j < rep.dim; ++j) {
            const Integer& c = rep.mu[a][g * rep.dim + j];
            if (c != 0) rhs += c * coefficient(j, w);
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("subset series: whole language support") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  LinearRepresentation rep = build_subset_series(ns, ns.dfa());
  for (const Word& w : oracles::enumerate_language(ns.dfa(), 8)) {
    CHECK(evaluate(rep, w) == value(ns, w));
  }
}

TEST_CASE("subset series over a*, b* supports") {
  OrderedAlphabet s = fixtures::ab();
  NumerationSystem ns = fixtures::sys_a_star_b_star();

  OrderedDfa astar = minimize(lang::star(lang::word(s, "a")));
  LinearRepresentation rep_a = build_subset_series(ns, astar);
  CHECK(evaluate(rep_a, s.parse("aa")) == 3);

  OrderedDfa bstar = minimize(lang::star(lang::word(s, "b")));
  LinearRepresentation rep_b = build_subset_series(ns, bstar);
  CHECK(evaluate(rep_b, s.parse("bb")) == 5);

  // On the support the series ranks within the big system; off the support
  // every positive-rank word evaluates to zero.
  for (const Word& w : oracles::enumerate_language(ns.dfa(), 10)) {
    if (astar.accepts(w)) {
      CHECK(evaluate(rep_a, w) == value(ns, w));
    } else if (value(ns, w) > 0) {
      CHECK(evaluate(rep_a, w) == 0);
    }
    if (bstar.accepts(w)) {
      CHECK(evaluate(rep_b, w) == value(ns, w));
    } else if (value(ns, w) > 0) {
      CHECK(evaluate(rep_b, w) == 0);
    }
  }

  OrderedDfa all = lang::all(s);
  CHECK_THROWS_AS(build_subset_series(ns, all), error);
}

TEST_CASE("modular reduction commutes with evaluation") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  LinearRepresentation rep = build_series_representation(ns);

  CHECK(evaluate(reduce_mod(rep, 2), ns.alphabet().parse("ab")) == 0);  // rank 4 mod 2

  for (long q : {2L, 3L, 5L}) {
    LinearRepresentation reduced = reduce_mod(rep, Integer(q));
    for (const Word& w : oracles::enumerate_language(ns.dfa(), 8)) {
      CHECK(evaluate(reduced, w) == mod_canonical(evaluate(rep, w), Integer(q)));
    }
    LinearRepresentation twice = reduce_mod(reduced, Integer(q));
    CHECK(twice.lambda == reduced.lambda);
    CHECK(twice.gamma == reduced.gamma);
    CHECK(twice.mu == reduced.mu);
  }

  CHECK_THROWS_AS(reduce_mod(rep, 1), error);
  CHECK_THROWS_AS(evaluate(rep, Word{7}), error);
}
