#include "qpade/qpade.hpp"

#include <cstdlib>
#include <string>
#include <utility>

#include "qpade/errors.hpp"
#include "qpade/linalg.hpp"
#include "qpade/q_special.hpp"
#include "qpade/truncated_series.hpp"

namespace qpade {

void PadeProblem::validate() const {
  if (A < 1) throw ConstraintError("A must be >= 1 (got " + std::to_string(A) + ")");
  if (n < 0 || rho < 0 || sigma < 0 || nu < 0) {
    throw ConstraintError("n, rho, sigma, nu must be >= 0 (" + to_string() + ")");
  }
  if (rho + sigma + nu + 2 > dim()) {
    throw ConstraintError("constraint rho + sigma + nu + 2 <= A(n+1) fails: " + std::to_string(rho + sigma + nu + 2) +
                          " <= " + std::to_string(dim()) + " is false (" + to_string() + ")");
  }
}

std::string PadeProblem::to_string() const {
  return "A=" + std::to_string(A) + " n=" + std::to_string(n) + " rho=" + std::to_string(rho) +
         " sigma=" + std::to_string(sigma) + " nu=" + std::to_string(nu);
}

long capacity_limit() {
  if (const char* env = std::getenv("QPADE_MAX_DIM")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 12;
}

void check_capacity(long dim, long cap) {
  if (dim > cap) {
    throw CapacityError("A(n+1) = " + std::to_string(dim) + " exceeds the capacity cap " + std::to_string(cap) +
                        " (set QPADE_MAX_DIM to raise it)");
  }
}

CoefficientTable CoefficientTable::from_flat(long A, long n, std::vector<RatFunc> entries) {
  if (static_cast<long>(entries.size()) != A * (n + 1)) {
    throw ArithmeticError("coefficient table size does not match A(n+1)");
  }
  CoefficientTable t(A, n);
  t.entries_ = std::move(entries);
  return t;
}

QPoly build_pi(const PadeProblem& problem) {
  problem.validate();
  QPoly pi = q_pochhammer_poly({-problem.rho, static_cast<std::size_t>(problem.rho)}) *
             q_pochhammer_poly({problem.n + 1, static_cast<std::size_t>(problem.sigma)});
  return pi * QPoly::monomial(Variable::s, RatFunc(1), static_cast<std::size_t>(problem.nu));
}

QPoly denominator_poly(long A, long n) {
  return q_pochhammer_poly({0, static_cast<std::size_t>(n + 1)}).pow(static_cast<std::size_t>(A));
}

QPoly elementary_numerator(long A, long n, long j, long t) {
  QPoly p = QPoly::constant(Variable::s, RatFunc::q_power(t));
  for (long u = 0; u <= n; ++u) {
    const long e = u == t ? A - j : A;
    p = p * QPoly::one_minus(Variable::s, RatFunc::q_power(u)).pow(static_cast<std::size_t>(e));
  }
  return p;
}

CoefficientTable partial_fractions(const QPoly& pi, long A, long n) {
  const long N = A * (n + 1);
  if (pi.degree() >= N) {
    throw ConstraintError("partial_fractions: deg Pi = " + std::to_string(pi.degree()) + " must be < A(n+1) = " +
                          std::to_string(N) + " (no polynomial part allowed)");
  }
  Matrix<RatFunc> m(static_cast<std::size_t>(N), std::vector<RatFunc>(static_cast<std::size_t>(N)));
  for (long j = 1; j <= A; ++j) {
    for (long t = 0; t <= n; ++t) {
      const QPoly basis = elementary_numerator(A, n, j, t);
      const auto col = static_cast<std::size_t>((j - 1) * (n + 1) + t);
      for (long i = 0; i < N; ++i) m[static_cast<std::size_t>(i)][col] = basis.coeff(static_cast<std::size_t>(i));
    }
  }
  std::vector<RatFunc> rhs(static_cast<std::size_t>(N));
  for (long i = 0; i < N; ++i) rhs[static_cast<std::size_t>(i)] = pi.coeff(static_cast<std::size_t>(i));
  return CoefficientTable::from_flat(A, n, solve_square(m, rhs));
}

QPoly reconstruct_pi(const CoefficientTable& table) {
  QPoly acc(Variable::s);
  for (long j = 1; j <= table.A(); ++j) {
    for (long t = 0; t <= table.n(); ++t) {
      if (table.at(j, t).is_zero()) continue;
      acc += elementary_numerator(table.A(), table.n(), j, t) * table.at(j, t);
    }
  }
  return acc;
}

PadeSolution solution_from_table(const PadeProblem& problem, QPoly pi, CoefficientTable table) {
  PadeSolution sol;
  sol.problem = problem;
  sol.pi = std::move(pi);
  const long A = problem.A;
  const long n = problem.n;
  for (long j = 1; j <= A; ++j) {
    std::vector<RatFunc> c;
    for (long t = 0; t <= n; ++t) c.push_back(table.at(j, t));
    sol.P.emplace_back(Variable::z, std::move(c));
  }
  // P_0 cancels the z^m (m = 0..n-1) terms of sum_j P_j(z) Li_j(1/z;q).
  std::vector<RatFunc> p0(static_cast<std::size_t>(n + 1));
  for (long m = 0; m < n; ++m) {
    RatFunc acc;
    for (long j = 1; j <= A; ++j) {
      for (long t = m + 1; t <= n; ++t) {
        if (!table.at(j, t).is_zero()) acc += table.at(j, t) * qpolylog_coeff(j, t - m);
      }
    }
    p0[static_cast<std::size_t>(m)] = -acc;
  }
  sol.P0 = QPoly(Variable::z, std::move(p0));
  // Pbar_0 cancels the z^m (m = 0..n) terms of sum_j P_j(z) Li_j(z;1/q).
  std::vector<RatFunc> p0bar(static_cast<std::size_t>(n + 1));
  for (long m = 0; m <= n; ++m) {
    RatFunc acc;
    for (long j = 1; j <= A; ++j) {
      for (long t = 0; t < m; ++t) {
        if (!table.at(j, t).is_zero()) acc += table.at(j, t) * qpolylog_recip_coeff(j, m - t);
      }
    }
    p0bar[static_cast<std::size_t>(m)] = -acc;
  }
  sol.P0bar = QPoly(Variable::z, std::move(p0bar));
  sol.table = std::move(table);
  return sol;
}

PadeSolution build_solution(const PadeProblem& problem) {
  QPoly pi = build_pi(problem);
  CoefficientTable table = partial_fractions(pi, problem.A, problem.n);
  return solution_from_table(problem, std::move(pi), std::move(table));
}

RatFunc s_coefficient_closed(const PadeProblem& problem, long k) {
  if (k < 1) throw ArithmeticError("s_coefficient_closed: k must be >= 1");
  const RatFunc num = RatFunc::q_power(k * (problem.nu + 1)) *
                      q_pochhammer_value(k - problem.rho, static_cast<std::size_t>(problem.rho)) *
                      q_pochhammer_value(k + problem.n + 1, static_cast<std::size_t>(problem.sigma));
  if (num.is_zero()) return num;
  return num / q_pochhammer_value(k, static_cast<std::size_t>(problem.n + 1)).pow(problem.A);
}

RatFunc s_linear_form(long k, long j, long t) {
  return RatFunc::q_power(k + t) * RatFunc::one_minus_q_power(k + t).pow(-j);
}

RatFunc sbar_linear_form(long n, long k, long j, long t) {
  return RatFunc::q_power(t - n - k) * RatFunc::one_minus_q_power(t - n - k).pow(-j);
}

namespace {

// sum_{j,t} q^{t+shift} p_{j,t} / (1 - q^{t+shift})^j, i.e. q^shift R(q^shift).
RatFunc shifted_r_value(const CoefficientTable& table, long shift) {
  RatFunc acc;
  for (long t = 0; t <= table.n(); ++t) {
    const RatFunc inv = RatFunc::one_minus_q_power(t + shift).inverse();
    const RatFunc qpow = RatFunc::q_power(t + shift);
    RatFunc inv_pow = inv;
    for (long j = 1; j <= table.A(); ++j) {
      if (!table.at(j, t).is_zero()) acc += qpow * table.at(j, t) * inv_pow;
      inv_pow *= inv;
    }
  }
  return acc;
}

}  // namespace

RatFunc s_coefficient_via_table(const CoefficientTable& table, long k) {
  if (k < 1) throw ArithmeticError("s_coefficient_via_table: k must be >= 1");
  return shifted_r_value(table, k);
}

RatFunc s_coefficient_via_products(const PadeSolution& solution, long k) {
  const long n = solution.problem.n;
  if (k < 1 - n) throw ArithmeticError("s_coefficient_via_products: k must be >= 1 - n");
  RatFunc acc = k <= 0 ? solution.P0.coeff(static_cast<std::size_t>(-k)) : RatFunc();
  for (long j = 1; j <= solution.problem.A; ++j) {
    for (long t = 0; t <= n; ++t) {
      if (k + t < 1) continue;
      const RatFunc& p = solution.table.at(j, t);
      if (!p.is_zero()) acc += p * qpolylog_coeff(j, k + t);
    }
  }
  return acc;
}

RatFunc sbar_coefficient(const CoefficientTable& table, long k) {
  if (k < 1) throw ArithmeticError("sbar_coefficient: k must be >= 1");
  const long shift = -table.n() - k;
  return shifted_r_value(table, shift);
}

RatFunc sbar_coefficient_via_products(const PadeSolution& solution, long m) {
  if (m < 0) throw ArithmeticError("sbar_coefficient_via_products: m must be >= 0");
  RatFunc acc = solution.P0bar.coeff(static_cast<std::size_t>(m));
  for (long j = 1; j <= solution.problem.A; ++j) {
    for (long t = 0; t <= solution.problem.n && t < m; ++t) {
      const RatFunc& p = solution.table.at(j, t);
      if (!p.is_zero()) acc += p * qpolylog_recip_coeff(j, m - t);
    }
  }
  return acc;
}

namespace {

// -(-l)_{j-1} / (j-1)!
RatFunc finite_formula_weight(long ell, long j) {
  BigRat w(rising_factorial(-ell, static_cast<unsigned long>(j - 1)), factorial(static_cast<unsigned long>(j - 1)));
  w.canonicalize();
  return RatFunc(BigRat(-w));
}

// P_j(x) for x = q^e.
RatFunc eval_pj_at_q_power(const CoefficientTable& table, long j, long e) {
  RatFunc acc;
  for (long t = 0; t <= table.n(); ++t) {
    if (!table.at(j, t).is_zero()) acc += table.at(j, t) * RatFunc::q_power(e * t);
  }
  return acc;
}

RatFunc i_finite_formula(const CoefficientTable& table, long ell) {
  RatFunc acc;
  for (long j = 1; j <= table.A(); ++j) {
    const RatFunc w = finite_formula_weight(ell, j);
    if (w.is_zero()) continue;
    acc += w * eval_pj_at_q_power(table, j, -ell);
  }
  return acc;
}

// Res_{s = q^{-t}} s^l (1 - s q^t)^{-j}
//   = (-1)^j q^{-tj} (1/(j-1)!) (d/ds)^{j-1} s^l |_{s = q^{-t}}
//   = (-1)^j q^{-tj} binom(l, j-1) q^{-t(l-j+1)}.
RatFunc residue_weight(long ell, long j, long t) {
  BigRat c = binomial(ell, static_cast<unsigned long>(j - 1));
  if (sgn(c) == 0) return RatFunc();
  if (j % 2 != 0) c = -c;
  return RatFunc(c) * RatFunc::q_power(-t * j) * RatFunc::q_power(-t * (ell - j + 1));
}

}  // namespace

RatFunc i_linear_form(long ell, long j, long t) {
  const RatFunc r = residue_weight(ell, j, t);
  return r.is_zero() ? r : RatFunc::q_power(t) * r;
}

namespace {

RatFunc i_residue_sum(const CoefficientTable& table, long ell) {
  RatFunc acc;
  for (long j = 1; j <= table.A(); ++j) {
    for (long t = 0; t <= table.n(); ++t) {
      const RatFunc& p = table.at(j, t);
      if (p.is_zero()) continue;
      const RatFunc r = residue_weight(ell, j, t);
      if (!r.is_zero()) acc += RatFunc::q_power(t) * p * r;
    }
  }
  return acc;
}

RatFunc i_laurent(const QPoly& pi, long A, long n, long ell) {
  if (ell < 0) throw ArithmeticError("Laurent route for I(q^{-l}) requires l >= 0");
  if (pi.is_zero()) return RatFunc();
  const long omega = A * (n + 1) - pi.degree();
  if (ell + 1 < omega) return RatFunc();
  return laurent_at_infinity(pi, A, n, ell + 2 - omega).c(ell + 1);
}

}  // namespace

RatFunc i_at(const CoefficientTable& table, long ell, IMethod method) {
  switch (method) {
    case IMethod::finite_formula:
      return i_finite_formula(table, ell);
    case IMethod::residue_sum:
      return i_residue_sum(table, ell);
    case IMethod::laurent:
      return i_laurent(reconstruct_pi(table), table.A(), table.n(), ell);
  }
  throw ArithmeticError("unknown IMethod");
}

RatFunc i_at(const PadeSolution& solution, long ell, IMethod method) {
  if (method == IMethod::laurent) return i_laurent(solution.pi, solution.problem.A, solution.problem.n, ell);
  return i_at(solution.table, ell, method);
}

RatFunc i_at_shifted_formula(const CoefficientTable& table, long ell) {
  RatFunc acc;
  for (long j = 1; j <= table.A(); ++j) {
    const RatFunc w = finite_formula_weight(ell, j);
    if (w.is_zero()) continue;
    // P_j(z q^{1-j}) at z = q^{-l}
    acc += w * eval_pj_at_q_power(table, j, -ell + 1 - j);
  }
  return acc;
}

RatFunc LaurentExpansion::c(long k) const {
  if (k < omega) return RatFunc();
  const long i = k - omega;
  if (i >= static_cast<long>(coeffs.size())) {
    throw ArithmeticError("Laurent coefficient c_" + std::to_string(k) + " was not computed");
  }
  return coeffs[static_cast<std::size_t>(i)];
}

LaurentExpansion laurent_at_infinity(const QPoly& pi, long A, long n, long count) {
  if (count < 1) throw ArithmeticError("laurent_at_infinity: count must be >= 1");
  if (pi.is_zero()) throw ArithmeticError("laurent_at_infinity: Pi is zero");
  const QPoly d = denominator_poly(A, n);
  // With u = 1/s: Pi(s) = s^{deg Pi} Pi~(u), D(s) = s^N D~(u) with reversed coefficients.
  auto reversed = [count](const QPoly& p) {
    std::vector<RatFunc> c;
    for (long i = 0; i < count; ++i) {
      c.push_back(i <= p.degree() ? p.coeff(static_cast<std::size_t>(p.degree() - i)) : RatFunc());
    }
    return TruncatedSeries<RatFunc>(SeriesVar::s_inverse, 0, std::move(c), count);
  };
  const auto quotient = reversed(pi) / reversed(d);
  LaurentExpansion out;
  out.omega = d.degree() - pi.degree();
  for (long i = 0; i < count; ++i) out.coeffs.push_back(quotient.coefficient(i));
  return out;
}

LaurentExpansion laurent_at_infinity(const PadeSolution& solution, long count) {
  return laurent_at_infinity(solution.pi, solution.problem.A, solution.problem.n, count);
}

namespace {

void record(GroupCheck& g, bool& flag, const std::string& what) {
  flag = false;
  if (g.detail.empty()) g.detail = what;
}

}  // namespace

VerificationReport verify_solution(const PadeProblem& problem, const CoefficientTable& table) {
  problem.validate();
  if (table.A() != problem.A || table.n() != problem.n) {
    throw ConstraintError("coefficient table shape does not match the problem");
  }
  VerificationReport rep;

  for (long k = 1; k <= problem.rho; ++k) {
    if (!s_coefficient_via_table(table, k).is_zero()) {
      record(rep.s_group, rep.s_group.vanishing, "S coefficient of z^-" + std::to_string(k) + " is nonzero");
    }
  }
  if (s_coefficient_via_table(table, problem.rho + 1).is_zero()) {
    record(rep.s_group, rep.s_group.sharp, "S coefficient of z^-" + std::to_string(problem.rho + 1) + " vanishes");
  }

  for (long k = 1; k <= problem.sigma; ++k) {
    if (!sbar_coefficient(table, k).is_zero()) {
      record(rep.sbar_group, rep.sbar_group.vanishing,
             "Sbar coefficient of z^" + std::to_string(problem.n + k) + " is nonzero");
    }
  }
  if (sbar_coefficient(table, problem.sigma + 1).is_zero()) {
    record(rep.sbar_group, rep.sbar_group.sharp,
           "Sbar coefficient of z^" + std::to_string(problem.n + problem.sigma + 1) + " vanishes");
  }

  for (long ell = -problem.nu; ell <= problem.window_top(); ++ell) {
    if (!i_at(table, ell, IMethod::residue_sum).is_zero()) {
      record(rep.i_group, rep.i_group.vanishing, "I(q^" + std::to_string(-ell) + ") is nonzero");
    }
  }
  for (long ell : {-problem.nu - 1, problem.window_top() + 1}) {
    if (i_at(table, ell, IMethod::residue_sum).is_zero()) {
      record(rep.i_group, rep.i_group.sharp, "I(q^" + std::to_string(-ell) + ") vanishes outside the window");
    }
  }

  rep.normalized = reconstruct_pi(table).coeff(static_cast<std::size_t>(problem.nu)).is_one();
  return rep;
}

VerificationReport verify_solution(const PadeSolution& solution) {
  return verify_solution(solution.problem, solution.table);
}

}  // namespace qpade
