#include "doctest.h"
#include "qpade/errors.hpp"
#include "qpade/linalg.hpp"
#include "qpade/runner.hpp"
#include "qpade/uniqueness.hpp"
#include "support.hpp"

using namespace qpade;
using testing::rf;

TEST_CASE("system for A=2, n=0") {
  const ConditionSystem sys = assemble_system({2, 0, 0, 0, 0});
  CHECK(sys.rows() == 1);
  CHECK(sys.cols() == 2);
  CHECK(sys.labels[0].kind == ConditionKind::i_vanish);
  CHECK(sys.labels[0].index == 0);
  const auto basis = nullspace(sys);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0].is_zero());
  CHECK_FALSE(basis[0][1].is_zero());
}

TEST_CASE("row labels and counts") {
  const PadeProblem p{3, 1, 1, 1, 1};
  const ConditionSystem sys = assemble_system(p);
  CHECK(sys.rows() == static_cast<std::size_t>(p.dim() - 1));
  std::size_t s = 0, sb = 0, i = 0;
  for (const auto& l : sys.labels) {
    if (l.kind == ConditionKind::s_vanish) ++s;
    if (l.kind == ConditionKind::sbar_vanish) ++sb;
    if (l.kind == ConditionKind::i_vanish) ++i;
  }
  CHECK(s == 1);
  CHECK(sb == 1);
  CHECK(i == static_cast<std::size_t>(p.dim() - p.rho - p.sigma - 1));
  CHECK_FALSE(sys.labels.front().to_string().empty());
  CHECK_THROWS_AS(assemble_system({1, 0, 0, 0, 0}), ConstraintError);
}

TEST_CASE("property: one-dimensional nullspace containing the canonical table") {
  for (const auto& p : enumerate_instances(6)) {
    const UniquenessReport rep = certify_uniqueness(p);
    CHECK(rep.rows == static_cast<std::size_t>(p.dim() - 1));
    CHECK_MESSAGE(rep.certified(), p.to_string());
  }
}

TEST_CASE("property: one more I row leaves only the zero solution") {
  for (const auto& p : enumerate_instances(5)) {
    ConditionSystem sys = assemble_system(p);
    append_i_row(sys, p.window_top() + 1);
    CHECK(nullspace(sys).empty());
  }
}

TEST_CASE("compare_up_to_scalar") {
  const std::vector<RatFunc> v{RatFunc(1), rf({0, 1})};
  CHECK(compare_up_to_scalar(v, v).proportional);
  CHECK(compare_up_to_scalar(v, v).lambda == RatFunc(1));

  const RatFunc c = rf({1, -1});
  const ScalarComparison scaled = compare_up_to_scalar({c * v[0], c * v[1]}, v);
  CHECK(scaled.proportional);
  CHECK(scaled.lambda == c);

  const ScalarComparison bad = compare_up_to_scalar({RatFunc(1), RatFunc(1)}, v);
  CHECK_FALSE(bad.proportional);
  REQUIRE(bad.mismatch.has_value());
  CHECK(*bad.mismatch == 1);

  CHECK_FALSE(compare_up_to_scalar({RatFunc(), RatFunc(1)}, {RatFunc(1), RatFunc(1)}).proportional);
  CHECK_THROWS_AS(compare_up_to_scalar({RatFunc(), RatFunc()}, v), ArithmeticError);
  CHECK_THROWS_AS(compare_up_to_scalar(v, {RatFunc(1)}), ArithmeticError);
}

TEST_CASE("property: specialization never exceeds the exact rank") {
  for (const auto& p : enumerate_instances(5)) {
    const ConditionSystem sys = assemble_system(p);
    const std::size_t exact = rank(sys.matrix);
    CHECK(predicted_rank(sys, 4) == exact);
    const Matrix<BigRat> m = specialize(sys, BigRat(2, 3));
    CHECK(rank(m) <= exact);
    // the specialized basis vector solves the specialized system
    const auto basis = nullspace(sys);
    REQUIRE(basis.size() == 1);
    std::vector<BigRat> v;
    for (const auto& x : basis[0]) v.push_back(x.evaluate(BigRat(2, 3)));
    for (const auto& row : m) {
      BigRat acc = 0;
      for (std::size_t c = 0; c < v.size(); ++c) acc += row[c] * v[c];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("specialize rejects a pole") {
  const ConditionSystem sys = assemble_system({3, 0, 1, 0, 0});
  CHECK_THROWS_AS(specialize(sys, BigRat(1)), PoleError);
}

TEST_CASE("capacity") {
  CHECK_THROWS_AS(certify_uniqueness({2, 6, 0, 0, 0}), CapacityError);
  CHECK_THROWS_AS(certify_uniqueness({2, 1, 0, 0, 0}, 3), CapacityError);
  CHECK_NOTHROW(certify_uniqueness({2, 1, 0, 0, 0}, 4));
}
