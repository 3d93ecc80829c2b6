#include <cmath>

#include "doctest.h"
#include "qpade/confluence.hpp"
#include "qpade/errors.hpp"
#include "qpade/runner.hpp"

using namespace qpade;

TEST_CASE("classical counterpart") {
  CHECK(classical_counterpart({3, 1, 1, 2, 1}) == ClassicalProblem{3, 1, 1, 2});
}

TEST_CASE("limits for A=2, n=0") {
  const PadeSolution sol = build_solution({2, 0, 0, 0, 0});
  const QLimit lim = q_limit_solution(sol);
  CHECK(lim.Q[1] == RatPoly(Variable::z, {BigRat(1)}));
  CHECK(lim.Q[0].is_zero());
  const PoleOrderReport poles = pole_order_certify(sol);
  CHECK(poles.ok());
  REQUIRE(poles.entries.size() == 1);
  CHECK(poles.entries[0].j == 2);
  CHECK(poles.entries[0].bound == 0);
  CHECK(poles.entries[0].valuation == 0);
}

TEST_CASE("property: exact confluence over a sweep") {
  for (const auto& p : enumerate_instances(6)) {
    const ConfluenceReport rep = confluence_report(p);
    CHECK_MESSAGE(rep.passed(), p.to_string());
    CHECK(rep.poles.bound_holds);
  }
}

TEST_CASE("property: the limits do not depend on nu") {
  for (long nu = 1; nu <= 2; ++nu) {
    const PadeProblem base{3, 1, 1, 1, 0};
    PadeProblem p = base;
    p.nu = nu;
    const QLimit a = q_limit_solution(build_solution(base));
    const QLimit b = q_limit_solution(build_solution(p));
    CHECK(a.Q == b.Q);
    CHECK(a.Q0 == b.Q0);
    CHECK(a.Q0bar == b.Q0bar);
  }
}

TEST_CASE("strict pole orders are reported, not rejected") {
  const PoleOrderReport r = pole_order_certify(build_solution({8, 0, 2, 2, 2}));
  CHECK(r.ok());
  CHECK(r.strict_entries().size() == 4);
}

TEST_CASE("s coefficient limits") {
  CHECK(s_coefficient_confluence({2, 0, 0, 0, 0}));
  CHECK(s_coefficient_confluence({3, 1, 2, 1, 1}, 6));
}

TEST_CASE("derivative formula readings") {
  for (const auto& p : enumerate_instances(5)) {
    const auto results = derivative_formula_crosscheck(build_solution(p));
    REQUIRE(results.size() == 4);
    for (const auto& r : results) {
      CHECK(r.status.size() == static_cast<std::size_t>(p.dim()));
      if (r.reading == DerivativeReading::corrected) CHECK(r.all_agree());
      if (r.reading == DerivativeReading::printed_at_pole && p.n == 0) CHECK(r.all_agree());
      if (r.reading == DerivativeReading::printed && p.n > 0) CHECK(r.count(EntryStatus::undefined) > 0);
    }
  }
  for (auto r : {DerivativeReading::printed, DerivativeReading::printed_at_pole, DerivativeReading::substituted,
                 DerivativeReading::corrected})
    CHECK(std::string(reading_name(r)).size() > 0);
}

TEST_CASE("numeric samples approach the classical values") {
  const auto samples = numeric_confluence({2, 0, 0, 0, 0}, 2.0, {0.9, 0.99, 0.999}, 1e-12);
  REQUIRE(samples.size() == 3);
  const double li2_half = 0.5822405264650125;
  for (const auto& s : samples) {
    CHECK(std::fabs(s.classical_s - li2_half) <= s.classical_tail + 1e-12);
    CHECK(s.s_tail <= 1e-12);
    CHECK(std::fabs(s.scaled_log - s.minus_log) < 1.0);
  }
  CHECK(samples[1].error() < samples[0].error());
  CHECK(samples[2].error() < samples[1].error());
  CHECK(samples[2].error() < 0.01 * li2_half);
  CHECK(std::fabs(samples[2].scaled_log - samples[2].minus_log) < 1e-3);
  CHECK(std::fabs(samples[2].scaled_i - samples[2].minus_classical_i) <
        std::fabs(samples[0].scaled_i - samples[0].minus_classical_i));
}

TEST_CASE("numeric samples for a larger instance") {
  const auto samples = numeric_confluence({3, 1, 1, 1, 1}, 3.0, {0.9, 0.99, 0.999}, 1e-12);
  CHECK(samples[2].error() < samples[0].error());
  CHECK(std::fabs(samples[2].scaled_i - samples[2].minus_classical_i) <
        std::fabs(samples[0].scaled_i - samples[0].minus_classical_i));
}

TEST_CASE("numeric input and tail errors") {
  CHECK_THROWS_AS(numeric_confluence({2, 0, 0, 0, 0}, 1.001, {0.999}, 1e-12, 1000), ArithmeticError);
  CHECK_THROWS_AS(numeric_confluence({2, 0, 0, 0, 0}, 0.5, {0.9}), ArithmeticError);
  CHECK_THROWS_AS(numeric_confluence({2, 0, 0, 0, 0}, 2.0, {1.0}), ArithmeticError);
}
