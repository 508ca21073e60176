#include <doctest.h>

#include "numsys/experiments.hpp"
#include "numsys/io.hpp"
#include "support/fixtures.hpp"

using namespace numsys;

TEST_CASE("exact polynomial fit for a*b*") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  CountPolynomial poly = fit_count_polynomial(ns);

  REQUIRE(poly.degree() == 1);
  CHECK(poly.a[0] == 1);
  CHECK(poly.a[1] == 1);  // counts are n + 1
  REQUIRE(poly.b.size() == 3);
  CHECK(poly.b[0] == 0);
  CHECK(poly.b[1] == Rational(1, 2));
  CHECK(poly.b[2] == Rational(1, 2));  // P(n) = n(n+1)/2

  for (long n = 0; n <= 40; ++n) {
    CHECK(poly.p_at(Integer(n)) == Integer(n * (n + 1) / 2));
  }
  // defining recursion P(n+1) = P(n) + rho(n), n >= 1
  for (long n = 1; n <= 40; ++n) {
    CHECK(Rational(poly.p_at(Integer(n + 1)) - poly.p_at(Integer(n))) ==
          poly.rho_at(Integer(n)));
  }
}

TEST_CASE("degree-zero fit") {
  OrderedAlphabet s = fixtures::ab();
  NumerationSystem ns = make_system(lang::star(lang::word(s, "a")));
  CountPolynomial poly = fit_count_polynomial(ns);
  REQUIRE(poly.degree() == 0);
  CHECK(poly.a[0] == 1);
  for (long n = 0; n <= 20; ++n) CHECK(poly.p_at(Integer(n)) == Integer(n));
}

TEST_CASE("order-of-magnitude growth is rejected by the exact fit") {
  NumerationSystem ns = make_system(fixtures::even_a_star_b_star());
  CHECK_THROWS_AS(fit_count_polynomial(ns), error);
  try {
    fit_count_polynomial(ns);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_exactly_polynomial);
  }
}

TEST_CASE("length bracket against the summation polynomial") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  CountPolynomial poly = fit_count_polynomial(ns);
  const Integer a0 = poly.a[0].get_num();  // a0 is integral here
  for (long x = 1; x <= 10000; ++x) {
    std::size_t n = representation_length(ns, Integer(x));
    CHECK(poly.p_at(Integer(static_cast<long>(n))) - a0 + 1 <= Integer(x));
    CHECK(Integer(x) <= poly.p_at(Integer(static_cast<long>(n) + 1)) - a0);
  }
}

TEST_CASE("golden table reproduction") {
  ExperimentReport report = table1_experiment();
  CHECK(report.rows.size() == 21);
  CHECK_FALSE(report.anomalous);
  REQUIRE(report.verdict("golden") != nullptr);
  CHECK(*report.verdict("golden") == "all 21 rows match");
  CHECK(report.rows[9][1] == "3962");
  CHECK(report.rows[9][2] == "bbbbbaabaaa");

  // byte determinism of the serialized report
  ExperimentReport again = table1_experiment();
  CHECK(report_to_json(report).dump() == report_to_json(again).dump());
}

TEST_CASE("multiplication by a perfect square preserves the progression") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  ExperimentReport report = multiplication_experiment(ns, 4, 400);
  CHECK_FALSE(report.anomalous);
  REQUIRE(report.verdict("detector") != nullptr);
  CHECK(report.verdict("detector")->find("eventually_ap") == 0);
  REQUIRE(report.verdict("affine_law") != nullptr);
  CHECK(report.verdict("affine_law")->find("length = 2*n") == 0);
  CHECK(*report.verdict("consistency") == "consistent");
}

TEST_CASE("multiplication by two breaks the progression") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  ExperimentReport report = multiplication_experiment(ns, 2, 400);
  CHECK_FALSE(report.anomalous);
  REQUIRE(report.verdict("detector") != nullptr);
  CHECK(*report.verdict("detector") == "not_ap_on_window");
  CHECK(*report.verdict("consistency") == "consistent");
}

TEST_CASE("complement system: doubling pushes the run and the tail") {
  NumerationSystem ns = fixtures::sys_complement();
  ExperimentReport report = multiplication_experiment(ns, 2, 60);
  CHECK_FALSE(report.anomalous);
  CHECK(*report.verdict("leading_run") == "growing");
  CHECK(*report.verdict("tail_length") == "growing");
  CHECK(*report.verdict("consistency") == "consistent");
}

TEST_CASE("convergence of the normalized cumulative counts") {
  NumerationSystem ns = fixtures::sys_a_star_b_star();
  ExperimentReport report = convergence_experiment(ns, 2000);
  CHECK(*report.verdict("convergence") == "converging");
  // limit is 1/2
  CHECK(report.verdict("limit_estimate")->substr(0, 4) == "0.50");

  NumerationSystem even = make_system(fixtures::even_a_star_b_star());
  ExperimentReport wreport = convergence_experiment(even, 2000);
  CHECK(*wreport.verdict("convergence") == "converging");
  CHECK(wreport.verdict("limit_estimate")->substr(0, 4) == "0.25");

  NumerationSystem tiny = fixtures::sys_a_star_b_star();
  ExperimentReport small = convergence_experiment(tiny, 8);
  CHECK(small.verdict("convergence")->find("inconclusive") == 0);

  CHECK_THROWS_AS(convergence_experiment(fixtures::sys_complement(), 100), error);
}
