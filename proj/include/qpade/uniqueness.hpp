#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpade/linalg.hpp"
#include "qpade/qpade.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

enum class ConditionKind { s_vanish, sbar_vanish, i_vanish };

struct ConditionLabel {
  ConditionKind kind;
  long index;  // k for S / Sbar rows, l for I rows
  std::string to_string() const;
};

/// The homogeneous linear conditions of the q-Pade problem on the A(n+1)
/// unknowns p_{j,t}, columns in (j, t) lexicographic order.
struct ConditionSystem {
  PadeProblem problem;
  Matrix<RatFunc> matrix;
  std::vector<ConditionLabel> labels;
  std::size_t cols() const { return static_cast<std::size_t>(problem.dim()); }
  std::size_t rows() const { return matrix.size(); }
};

/// rho S-rows, sigma Sbar-rows and A(n+1) - rho - sigma - 1 I-rows.
ConditionSystem assemble_system(const PadeProblem& problem);

/// Adds the I-vanishing condition at l (used to probe sharpness of the count).
void append_i_row(ConditionSystem& system, long ell);

/// Exact nullspace basis over Q(q). Throws CapacityError above the cap.
std::vector<std::vector<RatFunc>> nullspace(const ConditionSystem& system, long cap = capacity_limit());

struct ScalarComparison {
  bool proportional = false;
  RatFunc lambda;                     // v = lambda * w when proportional
  std::optional<std::size_t> mismatch;  // first offending coordinate otherwise
};

/// Finds lambda with v = lambda w coordinate-wise; throws ArithmeticError on a
/// zero input vector.
ScalarComparison compare_up_to_scalar(const std::vector<RatFunc>& v, const std::vector<RatFunc>& w);

struct UniquenessReport {
  std::size_t rows = 0;
  std::size_t dimension = 0;
  std::vector<std::vector<RatFunc>> basis;
  bool canonical_annihilated = false;  // canonical table satisfies every row
  ScalarComparison comparison;         // canonical table vs the basis vector
  bool certified() const { return dimension == 1 && canonical_annihilated && comparison.proportional; }
};

/// Assembles the system, computes its nullspace and compares it with the
/// canonical table.
UniquenessReport certify_uniqueness(const PadeProblem& problem, long cap = capacity_limit());

/// System specialized at q = q0; throws PoleError if q0 hits a denominator root.
Matrix<BigRat> specialize(const ConditionSystem& system, const BigRat& q0);

/// Rank predicted from random rational specializations of q (maximum over the
/// samples). Never a certificate: a specialization can only lower the rank.
std::size_t predicted_rank(const ConditionSystem& system, int samples, std::uint32_t seed = 12345);

}  // namespace qpade
