#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpade/classical.hpp"
#include "qpade/qpade.hpp"

namespace qpade {

ClassicalProblem classical_counterpart(const PadeProblem& problem);

struct PoleOrderEntry {
  long j = 0;
  long t = 0;
  long valuation = 0;  // (1-q)-adic valuation of p_{j,t}
  long bound = 0;      // A(n+1) - sigma - rho - j
  bool strict() const { return -valuation < bound; }
};

struct PoleOrderReport {
  std::vector<PoleOrderEntry> entries;  // nonzero entries only
  bool bound_holds = true;              // -valuation <= bound everywhere
  std::vector<bool> attained;           // per j (index j-1)
  std::vector<bool> limit_nonzero;      // per j: Q_j != 0
  bool ok() const;
  std::vector<PoleOrderEntry> strict_entries() const;
};

PoleOrderReport pole_order_certify(const PadeSolution& solution);

/// Exact limits at q = 1 of (1-q)^e times the q-side polynomials.
struct QLimit {
  std::vector<RatPoly> Q;  // Q_j, e = A(n+1) - sigma - rho - j
  RatPoly Q0{Variable::z};     // e = A(n+1) - sigma - rho
  RatPoly Q0bar{Variable::z};  // e = A(n+1) - sigma - rho
};

/// Throws PoleError when a scaled coefficient still has a pole at q = 1.
QLimit q_limit_solution(const PadeSolution& solution);

struct LimitMatch {
  bool P = false;
  bool P0 = false;
  bool P0bar = false;
  bool all() const { return P && P0 && P0bar; }
};

LimitMatch compare_with_classical(const QLimit& limit, const ClassicalSolution& classical);

/// Checks evaluate((1-q)^{A(n+1)-sigma-rho} s_coefficient_closed(k), q=1) against
/// the classical coefficient for k = 1..kmax.
bool s_coefficient_confluence(const PadeProblem& problem, long kmax = 10);

struct ConfluenceReport {
  PoleOrderReport poles;
  QLimit limit;
  LimitMatch match;
  bool s_coefficients = false;
  bool passed() const { return poles.ok() && match.all() && s_coefficients; }
};

/// Exact part of the confluence check for one instance.
ConfluenceReport confluence_report(const PadeSolution& solution, const ClassicalSolution& classical);
ConfluenceReport confluence_report(const PadeProblem& problem);

/// Readings of the displayed derivative formula
///   p_{j,t} = c / (A-j)! * d^{A-j}/ds^{A-j} [ (1 - s q^t)^A Pi / (s;q)_{n+1}^A ] at s = x0.
enum class DerivativeReading {
  printed,             // c = (-1)^{A-j} q^{t(A-j-1)}, x0 = 1
  printed_at_pole,     // same prefactor, x0 = q^{-t}
  substituted,         // u = s q^t, derivative in u at u = 1, printed prefactor
  corrected,           // c = (-1)^{A-j} q^{-t(A-j+1)}, x0 = q^{-t}
};

const char* reading_name(DerivativeReading r);

enum class EntryStatus { agree, disagree, undefined };

struct ReadingResult {
  DerivativeReading reading;
  std::vector<EntryStatus> status;  // (j, t) lexicographic
  std::size_t count(EntryStatus s) const;
  bool all_agree() const { return count(EntryStatus::agree) == status.size(); }
};

/// Evaluates every reading against the linear-solve table.
std::vector<ReadingResult> derivative_formula_crosscheck(const PadeSolution& solution);

struct NumericSample {
  double q = 0;
  double scaled_s = 0;     // (1-q)^{A(n+1)-sigma-rho} S(z0;q)
  double s_tail = 0;       // bound on the truncated part
  std::size_t terms = 0;
  double classical_s = 0;  // S(z0)
  double classical_tail = 0;
  double error() const;    // |scaled_s - classical_s|
  double scaled_i = 0;      // (1-q)^{A(n+1)-sigma-rho-1} I(z0;q)
  double minus_classical_i = 0;  // -I(z0)
  double scaled_log = 0;   // (1-q) log_q(z0)
  double minus_log = 0;    // -log(z0)
};

/// Numeric q -> 1 samples at real z0 > 1. Throws ArithmeticError if a tail
/// bound cannot be brought under tolerance within max_terms.
std::vector<NumericSample> numeric_confluence(const PadeProblem& problem, double z0, const std::vector<double>& q_list,
                                              double tolerance = 1e-12, std::size_t max_terms = 2000000);

}  // namespace qpade
