#include "qpade/confluence.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <optional>

#include "qpade/errors.hpp"
#include "qpade/q_special.hpp"
#include "qpade/truncated_series.hpp"

namespace qpade {

ClassicalProblem classical_counterpart(const PadeProblem& problem) {
  return {problem.A, problem.n, problem.rho, problem.sigma};
}

namespace {

long scaling_exponent(const PadeProblem& p) { return p.dim() - p.sigma - p.rho; }

BigRat limit_at_one(const RatFunc& f, long e) {
  if (f.is_zero()) return BigRat(0);
  return (f * RatFunc::one_minus_q_pow(e)).evaluate(BigRat(1));
}

RatPoly scaled_limit(const QPoly& p, long e) {
  std::vector<BigRat> c;
  for (const auto& x : p.coeffs()) c.push_back(limit_at_one(x, e));
  return RatPoly(Variable::z, std::move(c));
}

}  // namespace

bool PoleOrderReport::ok() const {
  if (!bound_holds) return false;
  for (std::size_t i = 0; i < attained.size(); ++i) {
    if (limit_nonzero[i] && !attained[i]) return false;
  }
  return true;
}

std::vector<PoleOrderEntry> PoleOrderReport::strict_entries() const {
  std::vector<PoleOrderEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const auto& e) { return e.strict(); });
  return out;
}

PoleOrderReport pole_order_certify(const PadeSolution& solution) {
  const PadeProblem& p = solution.problem;
  PoleOrderReport rep;
  rep.attained.assign(static_cast<std::size_t>(p.A), false);
  rep.limit_nonzero.assign(static_cast<std::size_t>(p.A), false);
  for (long j = 1; j <= p.A; ++j) {
    const long bound = scaling_exponent(p) - j;
    for (long t = 0; t <= p.n; ++t) {
      const RatFunc& x = solution.table.at(j, t);
      if (x.is_zero()) continue;
      PoleOrderEntry e{j, t, x.valuation_at_one(), bound};
      if (-e.valuation > bound) rep.bound_holds = false;
      if (-e.valuation == bound) {
        rep.attained[static_cast<std::size_t>(j - 1)] = true;
        rep.limit_nonzero[static_cast<std::size_t>(j - 1)] = true;
      }
      rep.entries.push_back(e);
    }
  }
  return rep;
}

QLimit q_limit_solution(const PadeSolution& solution) {
  const PadeProblem& p = solution.problem;
  const long e = scaling_exponent(p);
  QLimit out;
  for (long j = 1; j <= p.A; ++j) out.Q.push_back(scaled_limit(solution.P_j(j), e - j));
  out.Q0 = scaled_limit(solution.P0, e);
  out.Q0bar = scaled_limit(solution.P0bar, e);
  return out;
}

LimitMatch compare_with_classical(const QLimit& limit, const ClassicalSolution& classical) {
  LimitMatch m;
  m.P = limit.Q == classical.P;
  m.P0 = limit.Q0 == classical.P0;
  m.P0bar = limit.Q0bar == classical.P0bar;
  return m;
}

bool s_coefficient_confluence(const PadeProblem& problem, long kmax) {
  const ClassicalProblem c = classical_counterpart(problem);
  for (long k = 1; k <= kmax; ++k) {
    if (limit_at_one(s_coefficient_closed(problem, k), scaling_exponent(problem)) !=
        classical_s_coefficient_closed(c, k)) {
      return false;
    }
  }
  return true;
}

ConfluenceReport confluence_report(const PadeSolution& solution, const ClassicalSolution& classical) {
  ConfluenceReport rep;
  rep.poles = pole_order_certify(solution);
  rep.limit = q_limit_solution(solution);
  rep.match = compare_with_classical(rep.limit, classical);
  rep.s_coefficients = s_coefficient_confluence(solution.problem);
  // Q_j != 0 is read off the limit itself; the pole report only saw equality.
  for (std::size_t i = 0; i < rep.limit.Q.size(); ++i) rep.poles.limit_nonzero[i] = !rep.limit.Q[i].is_zero();
  return rep;
}

ConfluenceReport confluence_report(const PadeProblem& problem) {
  return confluence_report(build_solution(problem), build_classical(classical_counterpart(problem)));
}

const char* reading_name(DerivativeReading r) {
  switch (r) {
    case DerivativeReading::printed:
      return "printed";
    case DerivativeReading::printed_at_pole:
      return "printed_at_pole";
    case DerivativeReading::substituted:
      return "substituted";
    case DerivativeReading::corrected:
      return "corrected";
  }
  return "?";
}

std::size_t ReadingResult::count(EntryStatus s) const {
  return static_cast<std::size_t>(std::count(status.begin(), status.end(), s));
}

namespace {

// (1/m!) d^m/ds^m (Pi / E) at s = x0, or nothing when E(x0) = 0.
std::optional<RatFunc> taylor_coefficient(const QPoly& pi, const QPoly& e, const RatFunc& x0, long m) {
  const QPoly hp = pi.taylor_shift(x0);
  const QPoly he = e.taylor_shift(x0);
  if (he.coeff(0).is_zero()) return std::nullopt;
  const long trunc = m + 1;
  const auto num = TruncatedSeries<RatFunc>::from_poly(SeriesVar::s_inverse, hp, trunc);
  const auto den = TruncatedSeries<RatFunc>::from_poly(SeriesVar::s_inverse, he, trunc);
  return (num / den).coefficient(m);
}

}  // namespace

std::vector<ReadingResult> derivative_formula_crosscheck(const PadeSolution& solution) {
  const PadeProblem& p = solution.problem;
  const std::vector<DerivativeReading> readings = {DerivativeReading::printed, DerivativeReading::printed_at_pole,
                                                   DerivativeReading::substituted, DerivativeReading::corrected};
  std::vector<ReadingResult> out;
  for (auto r : readings) out.push_back({r, {}});

  for (long j = 1; j <= p.A; ++j) {
    const long m = p.A - j;
    const RatFunc sign(BigRat(m % 2 == 0 ? 1 : -1));
    for (long t = 0; t <= p.n; ++t) {
      QPoly e = QPoly::constant(Variable::s, RatFunc(1));
      for (long u = 0; u <= p.n; ++u) {
        if (u != t) e = e * QPoly::one_minus(Variable::s, RatFunc::q_power(u)).pow(static_cast<std::size_t>(p.A));
      }
      const auto at_one = taylor_coefficient(solution.pi, e, RatFunc(1), m);
      const auto at_pole = taylor_coefficient(solution.pi, e, RatFunc::q_power(-t), m);
      const RatFunc& expected = solution.table.at(j, t);
      for (auto& res : out) {
        const auto& c = res.reading == DerivativeReading::printed ? at_one : at_pole;
        if (!c) {
          res.status.push_back(EntryStatus::undefined);
          continue;
        }
        long qexp = 0;
        switch (res.reading) {
          case DerivativeReading::printed:
          case DerivativeReading::printed_at_pole:
            qexp = t * (m - 1);
            break;
          case DerivativeReading::substituted:
            qexp = -t;
            break;
          case DerivativeReading::corrected:
            qexp = -t * (m + 1);
            break;
        }
        const RatFunc value = sign * RatFunc::q_power(qexp) * *c;
        res.status.push_back(value == expected ? EntryStatus::agree : EntryStatus::disagree);
      }
    }
  }
  return out;
}

double NumericSample::error() const { return std::fabs(scaled_s - classical_s); }

namespace {

// (1-q)^{A(n+1)-sigma-rho} times the z^{-k} coefficient of S(z;q), k >= 1.
double scaled_s_term(const PadeProblem& p, double q0, long k) {
  const auto k_d = static_cast<double>(k);
  double v = std::pow(q0, k_d * static_cast<double>(p.nu + 1));
  for (long i = 0; i < p.rho; ++i) v *= one_minus_q_power(q0, static_cast<double>(k - p.rho + i));
  for (long i = 0; i < p.sigma; ++i) v *= one_minus_q_power(q0, static_cast<double>(k + p.n + 1 + i));
  const double one_minus_q = 1.0 - q0;
  for (long u = 0; u <= p.n; ++u) {
    const double d = one_minus_q_power(q0, static_cast<double>(k + u));
    for (long a = 0; a < p.A; ++a) v /= d;
  }
  return v * std::pow(one_minus_q, static_cast<double>(scaling_exponent(p)));
}

double geometric_tail(double z0, std::size_t terms) {
  return std::pow(z0, -static_cast<double>(terms + 1)) / (1.0 - 1.0 / z0);
}

double q_tail_bound(const PadeProblem& p, double q0, double z0, std::size_t terms) {
  const double lead = one_minus_q_power(q0, static_cast<double>(terms + 1));
  return std::pow(1.0 - q0, static_cast<double>(scaling_exponent(p))) /
         std::pow(lead, static_cast<double>(p.dim())) * geometric_tail(z0, terms);
}

double classical_tail_bound(const ClassicalProblem& c, double z0, std::size_t terms) {
  const double ratio = 1.0 + static_cast<double>(c.n + c.sigma) / static_cast<double>(terms + 1);
  return std::pow(ratio, static_cast<double>(c.sigma)) * geometric_tail(z0, terms);
}

template <class Bound>
std::size_t terms_for(Bound bound, double tolerance, std::size_t floor, std::size_t max_terms) {
  std::size_t terms = std::max<std::size_t>(floor, 16);
  while (bound(terms) > tolerance) {
    if (terms >= max_terms) {
      throw ArithmeticError("numeric_confluence: tail bound " + std::to_string(bound(terms)) + " above tolerance with " +
                            std::to_string(terms) + " terms; raise the term limit or the tolerance");
    }
    terms = std::min(terms * 2, max_terms);
  }
  return terms;
}

// sum_j Q_j(z) w^{j-1}/(j-1)! where w stands for log(1/z), or its q-analogue.
double log_weighted(const std::vector<double>& pj_values, const std::vector<double>& weights) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pj_values.size(); ++i) acc += pj_values[i] * weights[i];
  return acc;
}

}  // namespace

std::vector<NumericSample> numeric_confluence(const PadeProblem& problem, double z0, const std::vector<double>& q_list,
                                              double tolerance, std::size_t max_terms) {
  problem.validate();
  if (!(z0 > 1.0)) throw ArithmeticError("numeric_confluence: z0 must be > 1");
  const PadeSolution sol = build_solution(problem);
  const ClassicalProblem cp = classical_counterpart(problem);
  const ClassicalSolution csol = build_classical(cp);
  const auto floor = static_cast<std::size_t>(problem.rho);

  const std::size_t cterms =
      terms_for([&](std::size_t k) { return classical_tail_bound(cp, z0, k); }, tolerance, floor, max_terms);
  double classical_s = 0.0;
  for (std::size_t k = cterms; k >= 1; --k) {
    classical_s += classical_s_coefficient_closed(cp, static_cast<long>(k)).get_d() * std::pow(z0, -static_cast<double>(k));
  }

  const double log_inv = -std::log(z0);
  std::vector<double> classical_pj, classical_w;
  double fact = 1.0, power = 1.0;
  for (long j = 1; j <= problem.A; ++j) {
    if (j > 1) {
      fact *= static_cast<double>(j - 1);
      power *= log_inv;
    }
    classical_pj.push_back(csol.P_j(j).evaluate(BigRat(z0)).get_d());
    classical_w.push_back(power / fact);
  }
  const double classical_i = log_weighted(classical_pj, classical_w);

  std::vector<NumericSample> out;
  for (double q0 : q_list) {
    if (!(q0 > 0.0 && q0 < 1.0)) throw ArithmeticError("numeric_confluence: q must lie in (0, 1)");
    NumericSample smp;
    smp.q = q0;
    smp.terms = terms_for([&](std::size_t k) { return q_tail_bound(problem, q0, z0, k); }, tolerance, floor, max_terms);
    smp.s_tail = q_tail_bound(problem, q0, z0, smp.terms);
    double sum = 0.0;
    for (std::size_t k = smp.terms; k >= 1; --k) {
      sum += scaled_s_term(problem, q0, static_cast<long>(k)) * std::pow(z0, -static_cast<double>(k));
    }
    smp.scaled_s = sum;
    smp.classical_s = classical_s;
    smp.classical_tail = classical_tail_bound(cp, z0, cterms);

    // I(z;q) = -sum_j P_j(z;q) (-log_q(1/z))_{j-1}/(j-1)!, each factor scaled by a power of 1-q.
    const BigRat qx(q0);
    const long e = scaling_exponent(problem);
    const double ell = std::log(1.0 / z0) / std::log(q0);
    std::vector<double> pj, w;
    double weight = 1.0;
    for (long j = 1; j <= problem.A; ++j) {
      if (j > 1) weight *= (1.0 - q0) * (-ell + static_cast<double>(j - 2)) / static_cast<double>(j - 1);
      double v = 0.0;
      for (long t = problem.n; t >= 0; --t) {
        const RatFunc& x = sol.table.at(j, t);
        const double c = x.is_zero() ? 0.0 : (x * RatFunc::one_minus_q_pow(e - j)).evaluate(qx).get_d();
        v = v * z0 + c;
      }
      pj.push_back(v);
      w.push_back(weight);
    }
    smp.scaled_i = -log_weighted(pj, w);
    smp.minus_classical_i = -classical_i;
    smp.scaled_log = (1.0 - q0) * std::log(z0) / std::log(q0);
    smp.minus_log = -std::log(z0);
    out.push_back(smp);
  }
  return out;
}

}  // namespace qpade
