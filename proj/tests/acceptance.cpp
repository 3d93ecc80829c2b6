#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qpade/classical.hpp"
#include "qpade/confluence.hpp"
#include "qpade/errors.hpp"
#include "qpade/q_special.hpp"
#include "qpade/qpade.hpp"
#include "qpade/runner.hpp"
#include "qpade/uniqueness.hpp"

using namespace qpade;

namespace {

constexpr long kBound = 8;

struct Result {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

const std::vector<PadeProblem>& instances() {
  static const std::vector<PadeProblem> all = enumerate_instances(kBound);
  return all;
}

std::vector<ClassicalProblem> classical_instances() {
  std::vector<ClassicalProblem> out;
  for (long A = 1; A <= kBound; ++A)
    for (long n = 0; A * (n + 1) <= kBound; ++n)
      for (long rho = 0; rho + 2 <= A * (n + 1); ++rho)
        for (long sigma = 0; rho + sigma + 2 <= A * (n + 1); ++sigma) out.push_back({A, n, rho, sigma});
  return out;
}

Result construction() {
  Result r;
  for (const auto& p : instances()) {
    if (!verify_solution(build_solution(p)).passed()) r.fail(p.to_string());
  }
  r.note = std::to_string(instances().size()) + " instances" + (r.pass ? "" : ", first failure " + r.note);
  return r;
}

Result uniqueness() {
  Result r;
  for (const auto& p : instances()) {
    const UniquenessReport u = certify_uniqueness(p);
    if (u.rows != static_cast<std::size_t>(p.dim() - 1) || !u.certified()) r.fail(p.to_string());
  }
  return r;
}

Result reconstruction() {
  Result r;
  for (const auto& p : instances()) {
    const PadeSolution sol = build_solution(p);
    if (reconstruct_pi(sol.table) != sol.pi) r.fail(p.to_string());
  }
  return r;
}

Result i_agreement() {
  Result r;
  for (const auto& p : instances()) {
    const PadeSolution sol = build_solution(p);
    const long omega = p.dim() - sol.pi.degree();
    for (long ell = -p.nu - 2; ell <= omega + 2; ++ell) {
      const RatFunc a = i_at(sol, ell, IMethod::finite_formula);
      const RatFunc b = i_at(sol, ell, IMethod::residue_sum);
      bool ok = a == b;
      if (ell >= 0) ok = ok && i_at(sol, ell, IMethod::laurent) == b;
      if (!ok) r.fail(p.to_string() + " l=" + std::to_string(ell));
    }
  }
  return r;
}

Result classical() {
  Result r;
  const auto all = classical_instances();
  for (const auto& p : all) {
    const ClassicalSolution sol = build_classical(p);
    for (long k = 1; k <= 10; ++k) {
      if (classical_s_coefficient(sol, k) != classical_r_value(sol, BigRat(k))) r.fail(p.to_string());
    }
    const IVanishing iv = classical_I_vanishing(sol);
    if (iv.required != p.dim() - p.rho - p.sigma - 2 || !iv.certified()) r.fail(p.to_string() + " I order");
  }
  if (r.pass) r.note = std::to_string(all.size()) + " instances";
  return r;
}

Result confluence() {
  Result r;
  for (const auto& p : instances()) {
    if (p.nu > 2) continue;
    if (!confluence_report(p).passed()) r.fail(p.to_string());
  }
  return r;
}

Result numeric() {
  Result r;
  const double q0 = 0.999;
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  const double zeta3 = 1.2020569031595942;
  const QZetaPartial z2 = q_zeta(2, q0, 1e-9);
  const QZetaPartial z3 = q_zeta(3, q0, 1e-9);
  const double e2 = std::fabs((1 - q0) * (1 - q0) * z2.value / zeta2 - 1.0);
  const double e3 = std::fabs(std::pow(1 - q0, 3) * z3.value / (2.0 * zeta3) - 1.0);
  if (e2 >= 0.02) r.fail("zeta_q(2)");
  if (e3 >= 0.02) r.fail("zeta_q(3)");

  const auto samples = numeric_confluence({2, 0, 0, 0, 0}, 2.0, {q0}, 1e-12);
  const NumericSample& s = samples.at(0);
  const double rel = (s.error() + s.s_tail + s.classical_tail) / std::fabs(s.classical_s);
  if (rel >= 0.01) r.fail("S(2;q)");
  char buf[160];
  std::snprintf(buf, sizeof buf, "zeta rel err %.4f %.4f, S(2) rel err %.2e", e2, e3, rel);
  if (r.pass) r.note = buf;
  return r;
}

// Dropping one factor of Pi: only the matching group may lose its vanishing.
struct Drop {
  const char* name;
  std::function<bool(const PadeProblem&)> applies;
  std::function<QPoly(const PadeProblem&)> pi;
  std::function<bool(const VerificationReport&)> broken_only;
};

Result sensitivity() {
  Result r;
  for (const auto& p : instances()) {
    const PadeSolution sol = build_solution(p);
    for (long j = 1; j <= p.A; ++j) {
      for (long t = 0; t <= p.n; ++t) {
        PadeSolution bad = sol;
        bad.table.at(j, t) += RatFunc(1);
        if (verify_solution(bad).passed()) r.fail("perturbation " + p.to_string());
      }
    }
  }

  const auto s_pow = [](const PadeProblem& p) {
    return QPoly::monomial(Variable::s, RatFunc(1), static_cast<std::size_t>(p.nu));
  };
  const auto rho_f = [](const PadeProblem& p) {
    return q_pochhammer_poly({-p.rho, static_cast<std::size_t>(p.rho)});
  };
  const auto sigma_f = [](const PadeProblem& p) {
    return q_pochhammer_poly({p.n + 1, static_cast<std::size_t>(p.sigma)});
  };
  const std::vector<Drop> drops = {
      {"s^nu", [](const PadeProblem& p) { return p.nu > 0; },
       [&](const PadeProblem& p) { return rho_f(p) * sigma_f(p); },
       [](const VerificationReport& v) { return v.s_group.vanishing && v.sbar_group.vanishing && !v.i_group.vanishing; }},
      {"rho factor", [](const PadeProblem& p) { return p.rho > 0; },
       [&](const PadeProblem& p) { return s_pow(p) * sigma_f(p); },
       [](const VerificationReport& v) { return !v.s_group.vanishing && v.sbar_group.vanishing && v.i_group.vanishing; }},
      {"sigma factor", [](const PadeProblem& p) { return p.sigma > 0; },
       [&](const PadeProblem& p) { return s_pow(p) * rho_f(p); },
       [](const VerificationReport& v) { return v.s_group.vanishing && !v.sbar_group.vanishing && v.i_group.vanishing; }},
  };
  std::string counts;
  for (const auto& d : drops) {
    long tried = 0;
    for (const auto& p : instances()) {
      if (p.dim() > 6 || !d.applies(p)) continue;
      ++tried;
      const VerificationReport v = verify_solution(p, partial_fractions(d.pi(p), p.A, p.n));
      if (!d.broken_only(v)) r.fail(std::string(d.name) + " " + p.to_string());
    }
    if (tried < 3) r.fail(std::string(d.name) + ": fewer than three instances");
    counts += (counts.empty() ? "" : ", ") + std::string(d.name) + " on " + std::to_string(tried);
  }
  if (r.pass) r.note = "dropped " + counts;
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"construction correctness", construction},
      {"uniqueness", uniqueness},
      {"partial-fraction reconstruction", reconstruction},
      {"three-way I agreement", i_agreement},
      {"classical solution", classical},
      {"confluence", confluence},
      {"numeric demos", numeric},
      {"falsification sensitivity", sensitivity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %-32s %s  (%.1fs) %s\n", i + 1, criteria[i].first, r.pass ? "PASS" : "FAIL", secs,
                r.note.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
