#include "doctest.h"
#include "qpade/classical.hpp"
#include "qpade/errors.hpp"

using namespace qpade;

namespace {

std::vector<ClassicalProblem> classical_instances(long bound) {
  std::vector<ClassicalProblem> out;
  for (long A = 1; A <= bound; ++A)
    for (long n = 0; A * (n + 1) <= bound; ++n)
      for (long rho = 0; rho + 2 <= A * (n + 1); ++rho)
        for (long sigma = 0; rho + sigma + 2 <= A * (n + 1); ++sigma) out.push_back({A, n, rho, sigma});
  return out;
}

}  // namespace

TEST_CASE("classical validation") {
  CHECK_THROWS_AS(ClassicalProblem({1, 0, 0, 0}).validate(), ConstraintError);
  CHECK_THROWS_AS(build_classical({2, 0, 1, 0}), ConstraintError);
  try {
    ClassicalProblem{2, 1, 2, 1}.validate();
    FAIL("expected a constraint error");
  } catch (const ConstraintError& e) {
    CHECK(std::string(e.what()).find("rho + sigma + 2 <= A(n+1)") != std::string::npos);
  }
}

TEST_CASE("classical A=2, n=0") {
  const ClassicalSolution sol = build_classical({2, 0, 0, 0});
  CHECK(sol.pi == RatPoly(Variable::s, {BigRat(1)}));
  CHECK(sol.at(2, 0) == 1);
  CHECK(sol.at(1, 0) == 0);
  CHECK(sol.P_j(2) == RatPoly(Variable::z, {BigRat(1)}));
  CHECK(sol.P_j(1).is_zero());
  for (long k = 1; k <= 6; ++k) CHECK(classical_s_coefficient(sol, k) == BigRat(1, k * k));
  CHECK_THROWS_AS(classical_r_value(sol, BigRat(0)), PoleError);
}

TEST_CASE("classical pi") {
  const RatPoly pi = classical_pi({3, 1, 2, 1});
  CHECK(pi.degree() == 3);
  for (long k : {1L, 2L}) CHECK(pi.evaluate(BigRat(k)) == 0);
  CHECK(pi.evaluate(BigRat(-2)) == 0);
  CHECK(pi.evaluate(BigRat(3)) != 0);
}

TEST_CASE("classical I examples") {
  const IVanishing a = classical_I_vanishing(build_classical({2, 0, 0, 0}));
  CHECK(a.required == 0);
  CHECK(a.order == 1);
  CHECK(a.coeffs[0] == 0);
  CHECK(a.coeffs[1] == -1);
  CHECK(a.certified());

  const IVanishing b = classical_I_vanishing(build_classical({2, 1, 1, 1}));
  CHECK(b.required == 0);
  CHECK(b.certified());
}

TEST_CASE("property: classical construction over a sweep") {
  for (const auto& p : classical_instances(8)) {
    const ClassicalSolution sol = build_classical(p);
    CHECK(classical_reconstruct_pi(sol) == sol.pi);
    const ClassicalReport rep = verify_classical(sol);
    CHECK_MESSAGE(rep.passed(), p.to_string());
    CHECK_MESSAGE(classical_I_vanishing(sol).certified(), p.to_string());
  }
}

TEST_CASE("property: S coefficients are the values R(k)") {
  for (const auto& p : classical_instances(6)) {
    const ClassicalSolution sol = build_classical(p);
    for (long k = 1; k <= 10; ++k) {
      const BigRat closed = classical_s_coefficient_closed(p, k);
      CHECK(classical_s_coefficient(sol, k) == closed);
      CHECK(classical_r_value(sol, BigRat(k)) == closed);
      if (k <= p.rho) CHECK(closed == 0);
    }
    CHECK(classical_s_coefficient_closed(p, p.rho + 1) != 0);
    for (long k = 1 - p.n; k <= 0; ++k) CHECK(classical_s_coefficient(sol, k) == 0);
    for (long m = 0; m <= p.n + p.sigma; ++m) CHECK(classical_sbar_coefficient(sol, m) == 0);
    CHECK(classical_sbar_coefficient(sol, p.n + p.sigma + 1) != 0);
  }
}

TEST_CASE("elementary numerators") {
  // (s+0)^{A-j} (s+1)^A for A=2, n=1, j=1, t=0
  const RatPoly e = classical_elementary_numerator(2, 1, 1, 0);
  CHECK(e == RatPoly(Variable::s, {BigRat(0), BigRat(1), BigRat(2), BigRat(1)}));
}
