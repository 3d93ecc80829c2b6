#include "qpade/uniqueness.hpp"

#include <algorithm>
#include <random>

#include "qpade/errors.hpp"

namespace qpade {

std::string ConditionLabel::to_string() const {
  switch (kind) {
    case ConditionKind::s_vanish:
      return "S[z^-" + std::to_string(index) + "]";
    case ConditionKind::sbar_vanish:
      return "Sbar[k=" + std::to_string(index) + "]";
    case ConditionKind::i_vanish:
      return "I[l=" + std::to_string(index) + "]";
  }
  return "?";
}

namespace {

std::vector<RatFunc> make_row(const PadeProblem& p, auto&& entry) {
  std::vector<RatFunc> row;
  row.reserve(static_cast<std::size_t>(p.dim()));
  for (long j = 1; j <= p.A; ++j) {
    for (long t = 0; t <= p.n; ++t) row.push_back(entry(j, t));
  }
  return row;
}

}  // namespace

ConditionSystem assemble_system(const PadeProblem& problem) {
  problem.validate();
  ConditionSystem sys;
  sys.problem = problem;
  for (long k = 1; k <= problem.rho; ++k) {
    sys.matrix.push_back(make_row(problem, [k](long j, long t) { return s_linear_form(k, j, t); }));
    sys.labels.push_back({ConditionKind::s_vanish, k});
  }
  for (long k = 1; k <= problem.sigma; ++k) {
    sys.matrix.push_back(
        make_row(problem, [k, n = problem.n](long j, long t) { return sbar_linear_form(n, k, j, t); }));
    sys.labels.push_back({ConditionKind::sbar_vanish, k});
  }
  for (long ell = -problem.nu; ell <= problem.window_top(); ++ell) append_i_row(sys, ell);
  return sys;
}

void append_i_row(ConditionSystem& system, long ell) {
  system.matrix.push_back(make_row(system.problem, [ell](long j, long t) { return i_linear_form(ell, j, t); }));
  system.labels.push_back({ConditionKind::i_vanish, ell});
}

std::vector<std::vector<RatFunc>> nullspace(const ConditionSystem& system, long cap) {
  check_capacity(system.problem.dim(), cap);
  return nullspace(system.matrix, system.cols());
}

ScalarComparison compare_up_to_scalar(const std::vector<RatFunc>& v, const std::vector<RatFunc>& w) {
  const auto nonzero = [](const std::vector<RatFunc>& x) {
    return std::any_of(x.begin(), x.end(), [](const RatFunc& f) { return !f.is_zero(); });
  };
  if (!nonzero(v) || !nonzero(w)) throw ArithmeticError("compare_up_to_scalar: zero vector");
  if (v.size() != w.size()) throw ArithmeticError("compare_up_to_scalar: length mismatch");
  ScalarComparison out;
  std::size_t pivot = 0;
  while (w[pivot].is_zero()) {
    if (!v[pivot].is_zero()) {
      out.mismatch = pivot;
      return out;
    }
    ++pivot;
  }
  const RatFunc lambda = v[pivot] / w[pivot];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != lambda * w[i]) {
      out.mismatch = i;
      return out;
    }
  }
  out.proportional = true;
  out.lambda = lambda;
  return out;
}

UniquenessReport certify_uniqueness(const PadeProblem& problem, long cap) {
  check_capacity(problem.dim(), cap);
  const ConditionSystem sys = assemble_system(problem);
  UniquenessReport rep;
  rep.rows = sys.rows();
  rep.basis = nullspace(sys, cap);
  rep.dimension = rep.basis.size();

  const PadeSolution canonical = build_solution(problem);
  const auto& p = canonical.table.flat();
  rep.canonical_annihilated = std::all_of(sys.matrix.begin(), sys.matrix.end(), [&](const std::vector<RatFunc>& row) {
    RatFunc acc;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero() && !p[c].is_zero()) acc += row[c] * p[c];
    }
    return acc.is_zero();
  });
  if (rep.dimension == 1) rep.comparison = compare_up_to_scalar(p, rep.basis.front());
  return rep;
}

Matrix<BigRat> specialize(const ConditionSystem& system, const BigRat& q0) {
  Matrix<BigRat> out;
  for (const auto& row : system.matrix) {
    std::vector<BigRat> r;
    r.reserve(row.size());
    for (const auto& f : row) r.push_back(f.evaluate(q0));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t predicted_rank(const ConditionSystem& system, int samples, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(2, 997);
  std::uniform_int_distribution<long> den(2, 991);
  std::size_t best = 0;
  for (int i = 0; i < samples; ++i) {
    BigRat q0(num(rng), den(rng));
    q0.canonicalize();
    try {
      best = std::max(best, rank(specialize(system, q0)));
    } catch (const PoleError&) {
      continue;
    }
  }
  return best;
}

}  // namespace qpade
