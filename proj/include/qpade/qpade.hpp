#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpade/polynomial.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

/// Parameters (A, n, rho, sigma, nu) of the q-Pade problem. Admissible when
/// A >= 1, n, rho, sigma, nu >= 0 and rho + sigma + nu + 2 <= A(n+1).
struct PadeProblem {
  long A = 1;
  long n = 0;
  long rho = 0;
  long sigma = 0;
  long nu = 0;

  long dim() const { return A * (n + 1); }
  /// Last l of the I-vanishing window {-nu, ..., A(n+1) - rho - sigma - nu - 2}.
  long window_top() const { return dim() - rho - sigma - nu - 2; }
  /// Throws ConstraintError quoting the violated constraint.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const PadeProblem&, const PadeProblem&) = default;
};

/// Default A(n+1) cap, overridable through the QPADE_MAX_DIM environment variable.
long capacity_limit();
/// Throws CapacityError when dim > cap.
void check_capacity(long dim, long cap);

/// The entries p_{j,t}, j = 1..A, t = 0..n, of
///   R(s;q) = sum_{j,t} q^t p_{j,t} / (1 - s q^t)^j.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(long A, long n) : A_(A), n_(n), entries_(static_cast<std::size_t>(A * (n + 1))) {}

  long A() const { return A_; }
  long n() const { return n_; }
  const RatFunc& at(long j, long t) const { return entries_[index(j, t)]; }
  RatFunc& at(long j, long t) { return entries_[index(j, t)]; }
  /// Entries in (j, t) lexicographic order.
  const std::vector<RatFunc>& flat() const { return entries_; }
  static CoefficientTable from_flat(long A, long n, std::vector<RatFunc> entries);

  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;

 private:
  std::size_t index(long j, long t) const { return static_cast<std::size_t>((j - 1) * (n_ + 1) + t); }
  long A_ = 0;
  long n_ = 0;
  std::vector<RatFunc> entries_;
};

/// Fully assembled instance: Pi(s;q), the table, P_j(z;q) (index j-1), P_0, Pbar_0.
struct PadeSolution {
  PadeProblem problem;
  QPoly pi{Variable::s};
  CoefficientTable table;
  std::vector<QPoly> P;
  QPoly P0{Variable::z};
  QPoly P0bar{Variable::z};

  const QPoly& P_j(long j) const { return P[static_cast<std::size_t>(j - 1)]; }
  friend bool operator==(const PadeSolution&, const PadeSolution&) = default;
};

/// Pi(s;q) = (s q^{-rho}; q)_rho (s q^{n+1}; q)_sigma s^nu.
QPoly build_pi(const PadeProblem& problem);

/// (s;q)_{n+1}^A.
QPoly denominator_poly(long A, long n);

/// q^t (s;q)_{n+1}^A / (1 - s q^t)^j, built as a product (no division).
QPoly elementary_numerator(long A, long n, long j, long t);

/// Decomposes Pi / (s;q)_{n+1}^A by solving the square system obtained from
/// equating coefficients of s^0..s^{A(n+1)-1}. Throws ConstraintError when
/// deg Pi >= A(n+1).
CoefficientTable partial_fractions(const QPoly& pi, long A, long n);

/// sum_{j,t} p_{j,t} q^t (s;q)_{n+1}^A / (1 - s q^t)^j.
QPoly reconstruct_pi(const CoefficientTable& table);

/// P_j, P_0 and Pbar_0 assembled from a table (for any table, canonical or not).
PadeSolution solution_from_table(const PadeProblem& problem, QPoly pi, CoefficientTable table);

PadeSolution build_solution(const PadeProblem& problem);

/// q^{k(nu+1)} (q^{k-rho};q)_rho (q^{k+n+1};q)_sigma / (q^k;q)_{n+1}^A.
RatFunc s_coefficient_closed(const PadeProblem& problem, long k);

/// Linear forms in the unknowns p_{j,t}: the coefficient multiplying p_{j,t} in
/// the z^{-k} coefficient of S, the z^{n+k} coefficient of Sbar, and I(q^{-l}).
RatFunc s_linear_form(long k, long j, long t);
RatFunc sbar_linear_form(long n, long k, long j, long t);
RatFunc i_linear_form(long ell, long j, long t);

/// q^k R(q^k; q) from the table.
RatFunc s_coefficient_via_table(const CoefficientTable& table, long k);

/// Coefficient of z^{-k} in P_0 + sum_j P_j(z) Li_j(1/z; q), by direct
/// product expansion. Valid for k >= 1 - n (nonpositive k test P_0).
RatFunc s_coefficient_via_products(const PadeSolution& solution, long k);

/// Coefficient of z^{n+k} in Sbar: q^{-n-k} R(q^{-n-k}; q) from the table.
RatFunc sbar_coefficient(const CoefficientTable& table, long k);

/// Coefficient of z^m in Pbar_0 + sum_j P_j(z) Li_j(z; 1/q), by direct
/// product expansion, m >= 0.
RatFunc sbar_coefficient_via_products(const PadeSolution& solution, long m);

enum class IMethod {
  finite_formula,  // -sum_j P_j(q^{-l}) (-l)_{j-1} / (j-1)!
  residue_sum,     // sum of residues at s = q^{-t}, t = 0..n
  laurent,         // c_{l+1} of the expansion at s = infinity (l >= 0 only)
};

/// I(q^{-l}; q). Laurent method throws ArithmeticError for l < 0.
RatFunc i_at(const PadeSolution& solution, long ell, IMethod method = IMethod::residue_sum);
RatFunc i_at(const CoefficientTable& table, long ell, IMethod method = IMethod::residue_sum);

/// The finite formula with P_j evaluated at z q^{1-j}, as printed in the
/// problem statement. Does not coincide with the contour integral for n >= 1
/// and A >= 2; kept for comparison.
RatFunc i_at_shifted_formula(const CoefficientTable& table, long ell);

/// Expansion Pi / (s;q)_{n+1}^A = sum_{k >= omega} c_k s^{-k}.
struct LaurentExpansion {
  long omega = 0;
  std::vector<RatFunc> coeffs;  // c_omega, c_{omega+1}, ...
  /// c_k, zero for k < omega; throws ArithmeticError beyond the computed range.
  RatFunc c(long k) const;
};

LaurentExpansion laurent_at_infinity(const QPoly& pi, long A, long n, long count);
LaurentExpansion laurent_at_infinity(const PadeSolution& solution, long count);

struct GroupCheck {
  bool vanishing = true;  // the defining condition holds on the whole range
  bool sharp = true;      // the adjacent coefficients / points are nonzero
  std::string detail;     // first failure, empty when all good
  bool ok() const { return vanishing && sharp; }
};

struct VerificationReport {
  GroupCheck s_group;     // S(z;q) = O(z^{-rho-1})
  GroupCheck sbar_group;  // Sbar(z;q) = O(z^{sigma+n+1})
  GroupCheck i_group;     // I(q^{-l};q) = 0 on the window
  bool normalized = true;  // multiplicative constant is 1
  bool passed() const { return s_group.ok() && sbar_group.ok() && i_group.ok() && normalized; }
  bool conditions_hold() const { return s_group.vanishing && sbar_group.vanishing && i_group.vanishing; }
};

/// Checks all three condition groups symbolically over Q(q), with sharpness,
/// plus the normalization of the multiplicative constant.
VerificationReport verify_solution(const PadeProblem& problem, const CoefficientTable& table);
VerificationReport verify_solution(const PadeSolution& solution);

}  // namespace qpade
