#include "qpade/classical.hpp"

#include "qpade/errors.hpp"
#include "qpade/linalg.hpp"
#include "qpade/q_special.hpp"
#include "qpade/truncated_series.hpp"

namespace qpade {

void ClassicalProblem::validate() const {
  if (A < 1) throw ConstraintError("A must be >= 1 (got " + std::to_string(A) + ")");
  if (n < 0 || rho < 0 || sigma < 0) throw ConstraintError("n, rho, sigma must be >= 0 (" + to_string() + ")");
  if (rho + sigma + 2 > dim()) {
    throw ConstraintError("constraint rho + sigma + 2 <= A(n+1) fails: " + std::to_string(rho + sigma + 2) +
                          " <= " + std::to_string(dim()) + " is false (" + to_string() + ")");
  }
}

std::string ClassicalProblem::to_string() const {
  return "A=" + std::to_string(A) + " n=" + std::to_string(n) + " rho=" + std::to_string(rho) +
         " sigma=" + std::to_string(sigma);
}

RatPoly classical_pi(const ClassicalProblem& problem) {
  problem.validate();
  return classical_pochhammer_poly(-problem.rho, static_cast<std::size_t>(problem.rho)) *
         classical_pochhammer_poly(problem.n + 1, static_cast<std::size_t>(problem.sigma));
}

RatPoly classical_elementary_numerator(long A, long n, long j, long t) {
  RatPoly p = RatPoly::constant(Variable::s, BigRat(1));
  for (long u = 0; u <= n; ++u) {
    const long e = u == t ? A - j : A;
    p = p * RatPoly(Variable::s, {BigRat(u), BigRat(1)}).pow(static_cast<std::size_t>(e));
  }
  return p;
}

namespace {

BigRat inverse_power(const BigRat& x, long j) {
  BigRat r(1);
  for (long i = 0; i < j; ++i) r /= x;
  return r;
}

}  // namespace

ClassicalSolution build_classical(const ClassicalProblem& problem) {
  ClassicalSolution sol;
  sol.problem = problem;
  sol.pi = classical_pi(problem);
  const long A = problem.A;
  const long n = problem.n;
  const long N = problem.dim();

  Matrix<BigRat> m(static_cast<std::size_t>(N), std::vector<BigRat>(static_cast<std::size_t>(N)));
  for (long j = 1; j <= A; ++j) {
    for (long t = 0; t <= n; ++t) {
      const RatPoly basis = classical_elementary_numerator(A, n, j, t);
      const auto col = static_cast<std::size_t>((j - 1) * (n + 1) + t);
      for (long i = 0; i < N; ++i) m[static_cast<std::size_t>(i)][col] = basis.coeff(static_cast<std::size_t>(i));
    }
  }
  std::vector<BigRat> rhs;
  for (long i = 0; i < N; ++i) rhs.push_back(sol.pi.coeff(static_cast<std::size_t>(i)));
  sol.table = solve_square(m, rhs);

  for (long j = 1; j <= A; ++j) {
    std::vector<BigRat> c;
    for (long t = 0; t <= n; ++t) c.push_back(sol.at(j, t));
    sol.P.emplace_back(Variable::z, std::move(c));
  }
  std::vector<BigRat> p0(static_cast<std::size_t>(n + 1));
  for (long k = 0; k < n; ++k) {
    BigRat acc;
    for (long j = 1; j <= A; ++j) {
      for (long t = k + 1; t <= n; ++t) acc += sol.at(j, t) * inverse_power(BigRat(t - k), j);
    }
    p0[static_cast<std::size_t>(k)] = -acc;
  }
  sol.P0 = RatPoly(Variable::z, std::move(p0));
  std::vector<BigRat> p0bar(static_cast<std::size_t>(n + 1));
  for (long k = 0; k <= n; ++k) {
    BigRat acc;
    for (long j = 1; j <= A; ++j) {
      for (long t = 0; t < k; ++t) {
        const BigRat w = inverse_power(BigRat(k - t), j);
        acc += j % 2 == 0 ? BigRat(sol.at(j, t) * w) : BigRat(-sol.at(j, t) * w);
      }
    }
    p0bar[static_cast<std::size_t>(k)] = -acc;
  }
  sol.P0bar = RatPoly(Variable::z, std::move(p0bar));
  return sol;
}

RatPoly classical_reconstruct_pi(const ClassicalSolution& solution) {
  const long A = solution.problem.A;
  const long n = solution.problem.n;
  RatPoly acc(Variable::s);
  for (long j = 1; j <= A; ++j) {
    for (long t = 0; t <= n; ++t) {
      if (!is_zero(solution.at(j, t))) acc += classical_elementary_numerator(A, n, j, t) * solution.at(j, t);
    }
  }
  return acc;
}

BigRat classical_r_value(const ClassicalSolution& solution, const BigRat& x) {
  BigRat acc;
  for (long t = 0; t <= solution.problem.n; ++t) {
    const BigRat d = x + t;
    if (is_zero(d)) throw PoleError("R(s) has a pole at s = " + to_string(x));
    for (long j = 1; j <= solution.problem.A; ++j) acc += solution.at(j, t) * inverse_power(d, j);
  }
  return acc;
}

BigRat classical_s_coefficient_closed(const ClassicalProblem& problem, long k) {
  if (k < 1) throw ArithmeticError("classical_s_coefficient_closed: k must be >= 1");
  const BigInt num = classical_pochhammer(k - problem.rho, static_cast<std::size_t>(problem.rho)) *
                     classical_pochhammer(k + problem.n + 1, static_cast<std::size_t>(problem.sigma));
  BigInt den = 1;
  const BigInt base = classical_pochhammer(k, static_cast<std::size_t>(problem.n + 1));
  for (long i = 0; i < problem.A; ++i) den *= base;
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat classical_s_coefficient(const ClassicalSolution& solution, long k) {
  const long n = solution.problem.n;
  if (k < 1 - n) throw ArithmeticError("classical_s_coefficient: k must be >= 1 - n");
  BigRat acc = k <= 0 ? solution.P0.coeff(static_cast<std::size_t>(-k)) : BigRat(0);
  for (long j = 1; j <= solution.problem.A; ++j) {
    for (long t = 0; t <= n; ++t) {
      if (k + t >= 1) acc += solution.at(j, t) * inverse_power(BigRat(k + t), j);
    }
  }
  return acc;
}

BigRat classical_sbar_coefficient(const ClassicalSolution& solution, long m) {
  if (m < 0) throw ArithmeticError("classical_sbar_coefficient: m must be >= 0");
  BigRat acc = solution.P0bar.coeff(static_cast<std::size_t>(m));
  for (long j = 1; j <= solution.problem.A; ++j) {
    for (long t = 0; t <= solution.problem.n && t < m; ++t) {
      const BigRat w = solution.at(j, t) * inverse_power(BigRat(m - t), j);
      acc += j % 2 == 0 ? w : BigRat(-w);
    }
  }
  return acc;
}

ClassicalReport verify_classical(const ClassicalSolution& solution) {
  const ClassicalProblem& p = solution.problem;
  ClassicalReport rep;
  rep.reconstruction = classical_reconstruct_pi(solution) == solution.pi;

  rep.s_vanishing = true;
  for (long k = 1 - p.n; k <= p.rho; ++k) {
    if (!is_zero(classical_s_coefficient(solution, k))) rep.s_vanishing = false;
  }
  rep.s_sharp = !is_zero(classical_s_coefficient(solution, p.rho + 1));

  rep.sbar_vanishing = true;
  for (long m = 0; m <= p.n + p.sigma; ++m) {
    if (!is_zero(classical_sbar_coefficient(solution, m))) rep.sbar_vanishing = false;
  }
  rep.sbar_sharp = !is_zero(classical_sbar_coefficient(solution, p.n + p.sigma + 1));
  return rep;
}

IVanishing classical_I_vanishing(const ClassicalSolution& solution) {
  const ClassicalProblem& p = solution.problem;
  IVanishing out;
  out.required = p.dim() - p.rho - p.sigma - 2;
  const long trunc = out.required + 2;

  const auto log_series = log_series_at_one(trunc);
  auto log_power = TruncatedSeries<BigRat>(SeriesVar::z_minus_one, 0, {BigRat(1)}, trunc);
  auto total = TruncatedSeries<BigRat>::zero(SeriesVar::z_minus_one, trunc);
  for (long j = 1; j <= p.A; ++j) {
    if (j > 1) log_power = log_power * log_series;
    const RatPoly shifted = solution.P_j(j).taylor_shift(BigRat(1));
    const auto pj = TruncatedSeries<BigRat>::from_poly(SeriesVar::z_minus_one, shifted, trunc);
    const BigRat inv_fact(BigInt(1), factorial(static_cast<unsigned long>(j - 1)));
    total = total + pj * log_power * inv_fact;
  }
  for (long m = 0; m < trunc; ++m) out.coeffs.push_back(total.coefficient(m));
  out.order = total.valuation();
  return out;
}

}  // namespace qpade
