#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpade/bigrat.hpp"
#include "qpade/polynomial.hpp"

namespace qpade {

/// Parameters of the classical problem; admissible when rho + sigma + 2 <= A(n+1).
struct ClassicalProblem {
  long A = 1;
  long n = 0;
  long rho = 0;
  long sigma = 0;

  long dim() const { return A * (n + 1); }
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const ClassicalProblem&, const ClassicalProblem&) = default;
};

/// R(s) = Pi(s) / (s)_{n+1}^A = sum_{j,t} p_{j,t} / (s+t)^j.
struct ClassicalSolution {
  ClassicalProblem problem;
  RatPoly pi{Variable::s};
  std::vector<BigRat> table;  // (j, t) lexicographic
  std::vector<RatPoly> P;     // P_j at index j-1
  RatPoly P0{Variable::z};
  RatPoly P0bar{Variable::z};

  const BigRat& at(long j, long t) const { return table[static_cast<std::size_t>((j - 1) * (problem.n + 1) + t)]; }
  const RatPoly& P_j(long j) const { return P[static_cast<std::size_t>(j - 1)]; }
};

/// (s-rho)_rho (s+n+1)_sigma.
RatPoly classical_pi(const ClassicalProblem& problem);

/// (s+t)^{A-j} prod_{u != t} (s+u)^A.
RatPoly classical_elementary_numerator(long A, long n, long j, long t);

ClassicalSolution build_classical(const ClassicalProblem& problem);

/// sum_{j,t} p_{j,t} (s)_{n+1}^A / (s+t)^j.
RatPoly classical_reconstruct_pi(const ClassicalSolution& solution);

/// R(x) from the table; throws PoleError at x in {0, -1, ..., -n}.
BigRat classical_r_value(const ClassicalSolution& solution, const BigRat& x);

/// (k-rho)_rho (k+n+1)_sigma / (k)_{n+1}^A, k >= 1.
BigRat classical_s_coefficient_closed(const ClassicalProblem& problem, long k);

/// Coefficient of z^{-k} in P_0 + sum_j P_j(z) Li_j(1/z), k >= 1 - n.
BigRat classical_s_coefficient(const ClassicalSolution& solution, long k);

/// Coefficient of z^m in Pbar_0 + sum_j (-1)^j P_j(z) Li_j(z), m >= 0.
BigRat classical_sbar_coefficient(const ClassicalSolution& solution, long m);

struct ClassicalReport {
  bool reconstruction = false;
  bool s_vanishing = false;
  bool s_sharp = false;
  bool sbar_vanishing = false;
  bool sbar_sharp = false;
  bool passed() const { return reconstruction && s_vanishing && s_sharp && sbar_vanishing && sbar_sharp; }
};

ClassicalReport verify_classical(const ClassicalSolution& solution);

struct IVanishing {
  long required = 0;             // A(n+1) - rho - sigma - 2
  long order = 0;                // index of the first nonzero coefficient
  std::vector<BigRat> coeffs;    // coefficients of (z-1)^m, m = 0..required+1
  bool certified() const { return order == required + 1; }
};

/// Expands I(z) = sum_j P_j(z) log^{j-1}(1/z)/(j-1)! in powers of z-1 and
/// reports the first nonzero coefficient. Certified when the coefficients of
/// (z-1)^0 .. (z-1)^required all vanish and the next one does not.
IVanishing classical_I_vanishing(const ClassicalSolution& solution);

}  // namespace qpade
