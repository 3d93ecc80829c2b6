#include "qpade/runner.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "qpade/classical.hpp"
#include "qpade/confluence.hpp"
#include "qpade/errors.hpp"
#include "qpade/json_io.hpp"
#include "qpade/uniqueness.hpp"

namespace qpade {

using json_io::json;

std::vector<PadeProblem> enumerate_instances(long bound) {
  std::vector<PadeProblem> out;
  for (long A = 1; A <= bound; ++A) {
    for (long n = 0; A * (n + 1) <= bound; ++n) {
      const long N = A * (n + 1);
      for (long rho = 0; rho + 2 <= N; ++rho) {
        for (long sigma = 0; rho + sigma + 2 <= N; ++sigma) {
          for (long nu = 0; rho + sigma + nu + 2 <= N; ++nu) out.push_back({A, n, rho, sigma, nu});
        }
      }
    }
  }
  return out;
}

namespace {

std::string poly_text(const QPoly& p) { return p.to_string(); }
std::string poly_text(const RatPoly& p) { return p.to_string(); }

json group_json(const GroupCheck& g) {
  return json{{"vanishing", g.vanishing}, {"sharp", g.sharp}, {"detail", g.detail}};
}

// Methods (a), (b), (c) on l in {-nu-2 .. omega+2}; Laurent only for l >= 0.
bool i_methods_agree(const PadeSolution& sol, std::string& detail) {
  const long omega = sol.problem.dim() - sol.pi.degree();
  for (long ell = -sol.problem.nu - 2; ell <= omega + 2; ++ell) {
    const RatFunc b = i_at(sol, ell, IMethod::residue_sum);
    if (i_at(sol, ell, IMethod::finite_formula) != b ||
        (ell >= 0 && i_at(sol, ell, IMethod::laurent) != b)) {
      detail = "I methods disagree at l = " + std::to_string(ell);
      return false;
    }
  }
  return true;
}

struct Outcome {
  json report;
  std::string text;
  bool passed = true;
};

Outcome do_construct(const PadeProblem& p) {
  const PadeSolution sol = build_solution(p);
  Outcome o;
  o.report = json_io::to_json(sol);
  std::ostringstream t;
  t << "instance " << p.to_string() << "\n";
  t << "Pi(s) = " << poly_text(sol.pi) << "\n";
  for (long j = 1; j <= p.A; ++j) {
    for (long k = 0; k <= p.n; ++k) t << "p[" << j << "," << k << "] = " << sol.table.at(j, k).to_string() << "\n";
  }
  for (long j = 1; j <= p.A; ++j) t << "P_" << j << "(z) = " << poly_text(sol.P_j(j)) << "\n";
  t << "P_0(z) = " << poly_text(sol.P0) << "\n";
  t << "Pbar_0(z) = " << poly_text(sol.P0bar) << "\n";
  o.text = t.str();
  return o;
}

Outcome do_verify(const PadeProblem& p) {
  const PadeSolution sol = build_solution(p);
  const VerificationReport rep = verify_solution(sol);
  const bool reconstruction = reconstruct_pi(sol.table) == sol.pi;
  std::string i_detail;
  const bool agree = i_methods_agree(sol, i_detail);
  Outcome o;
  o.passed = rep.passed() && reconstruction && agree;
  o.report = json{{"problem", json_io::to_json(p)},
                  {"S", group_json(rep.s_group)},
                  {"Sbar", group_json(rep.sbar_group)},
                  {"I", group_json(rep.i_group)},
                  {"normalized", rep.normalized},
                  {"reconstruction", reconstruction},
                  {"I_methods_agree", agree},
                  {"passed", o.passed}};
  std::ostringstream t;
  t << "instance " << p.to_string() << "\n";
  const auto line = [&t](const char* name, const GroupCheck& g) {
    t << name << ": " << (g.vanishing ? "vanishes" : "FAILS") << ", " << (g.sharp ? "sharp" : "NOT sharp");
    if (!g.detail.empty()) t << " (" << g.detail << ")";
    t << "\n";
  };
  line("S    ", rep.s_group);
  line("Sbar ", rep.sbar_group);
  line("I    ", rep.i_group);
  t << "normalized: " << (rep.normalized ? "yes" : "NO") << "\n";
  t << "reconstruction: " << (reconstruction ? "exact" : "MISMATCH") << "\n";
  t << "I methods: " << (agree ? "agree" : i_detail) << "\n";
  t << (o.passed ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  return o;
}

Outcome do_unique(const PadeProblem& p) {
  const UniquenessReport rep = certify_uniqueness(p);
  Outcome o;
  o.passed = rep.certified();
  json basis = json::array();
  for (const auto& v : rep.basis) {
    json col = json::array();
    for (const auto& x : v) col.push_back(json_io::to_json(x));
    basis.push_back(std::move(col));
  }
  o.report = json{{"problem", json_io::to_json(p)},
                  {"rows", rep.rows},
                  {"columns", p.dim()},
                  {"nullspace_dimension", rep.dimension},
                  {"basis", std::move(basis)},
                  {"canonical_annihilated", rep.canonical_annihilated},
                  {"proportional", rep.comparison.proportional},
                  {"passed", o.passed}};
  if (rep.comparison.proportional) o.report["lambda"] = json_io::to_json(rep.comparison.lambda);
  std::ostringstream t;
  t << "instance " << p.to_string() << "\n";
  t << "system: " << rep.rows << " x " << p.dim() << "\n";
  t << "nullspace dimension: " << rep.dimension << "\n";
  t << "canonical table annihilates every row: " << (rep.canonical_annihilated ? "yes" : "NO") << "\n";
  if (rep.comparison.proportional) {
    t << "canonical = lambda * basis, lambda = " << rep.comparison.lambda.to_string() << "\n";
  } else if (rep.comparison.mismatch) {
    t << "not proportional at coordinate " << *rep.comparison.mismatch << "\n";
  }
  t << (o.passed ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  return o;
}

Outcome do_classical(const PadeProblem& pp) {
  const ClassicalProblem p = classical_counterpart(pp);
  const ClassicalSolution sol = build_classical(p);
  const ClassicalReport rep = verify_classical(sol);
  const IVanishing iv = classical_I_vanishing(sol);
  bool r_match = true;
  for (long k = 1; k <= 10; ++k) {
    if (classical_r_value(sol, BigRat(k)) != classical_s_coefficient_closed(p, k)) r_match = false;
  }
  Outcome o;
  o.passed = rep.passed() && iv.certified() && r_match;
  json coeffs = json::array();
  for (const auto& c : iv.coeffs) coeffs.push_back(json_io::to_json(c));
  o.report = json{{"solution", json_io::to_json(sol)},
                  {"reconstruction", rep.reconstruction},
                  {"S", {{"vanishing", rep.s_vanishing}, {"sharp", rep.s_sharp}}},
                  {"Sbar", {{"vanishing", rep.sbar_vanishing}, {"sharp", rep.sbar_sharp}}},
                  {"S_coefficients_match_R", r_match},
                  {"I", {{"required", iv.required}, {"order", iv.order}, {"coefficients", std::move(coeffs)}}},
                  {"passed", o.passed}};
  std::ostringstream t;
  t << "classical instance " << p.to_string() << "\n";
  t << "Pi(s) = " << poly_text(sol.pi) << "\n";
  for (long j = 1; j <= p.A; ++j) t << "P_" << j << "(z) = " << poly_text(sol.P_j(j)) << "\n";
  t << "P_0(z) = " << poly_text(sol.P0) << "\n";
  t << "Pbar_0(z) = " << poly_text(sol.P0bar) << "\n";
  t << "reconstruction: " << (rep.reconstruction ? "exact" : "MISMATCH") << "\n";
  t << "S: " << (rep.s_vanishing && rep.s_sharp ? "O(z^-" + std::to_string(p.rho + 1) + "), sharp" : "FAILS") << "\n";
  t << "Sbar: " << (rep.sbar_vanishing && rep.sbar_sharp ? "sharp" : "FAILS") << "\n";
  t << "S coefficients = R(k), k = 1..10: " << (r_match ? "yes" : "NO") << "\n";
  t << "I(z): coefficients of (z-1)^0..(z-1)^" << iv.required << " vanish, first nonzero at " << iv.order << "\n";
  t << (o.passed ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  return o;
}

const char* status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::agree:
      return "agree";
    case EntryStatus::disagree:
      return "disagree";
    case EntryStatus::undefined:
      return "undefined";
  }
  return "?";
}

Outcome do_confluence(const RunConfig& cfg) {
  const PadeProblem& p = cfg.problem;
  const PadeSolution sol = build_solution(p);
  const ClassicalSolution csol = build_classical(classical_counterpart(p));
  const ConfluenceReport rep = confluence_report(sol, csol);
  const auto readings = derivative_formula_crosscheck(sol);
  std::vector<double> qs = cfg.q_list;
  std::sort(qs.begin(), qs.end());
  std::vector<NumericSample> samples;
  try {
    samples = numeric_confluence(p, cfg.z0, qs, cfg.tolerance, cfg.terms);
  } catch (const ArithmeticError& e) {
    throw CapacityError(e.what());
  }
  bool shrinking = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double slack = samples[i].s_tail + samples[i - 1].s_tail + samples[i].classical_tail;
    if (samples[i].error() > samples[i - 1].error() + slack) shrinking = false;
  }

  Outcome o;
  o.passed = rep.passed() && shrinking;
  json poles = json::array();
  for (const auto& e : rep.poles.entries) {
    poles.push_back({{"j", e.j}, {"t", e.t}, {"valuation", e.valuation}, {"bound", e.bound}, {"strict", e.strict()}});
  }
  json Q = json::array();
  for (const auto& q : rep.limit.Q) Q.push_back(json_io::to_json(q, static_cast<std::size_t>(p.n + 1)));
  json deriv = json::object();
  for (const auto& r : readings) {
    json st = json::array();
    for (auto s : r.status) st.push_back(status_name(s));
    deriv[reading_name(r.reading)] = std::move(st);
  }
  json num = json::array();
  for (const auto& s : samples) {
    num.push_back({{"q", s.q},
                   {"scaled_S", s.scaled_s},
                   {"S_tail_bound", s.s_tail},
                   {"terms", s.terms},
                   {"classical_S", s.classical_s},
                   {"error", s.error()},
                   {"scaled_I", s.scaled_i},
                   {"minus_classical_I", s.minus_classical_i},
                   {"scaled_log_q", s.scaled_log},
                   {"minus_log", s.minus_log}});
  }
  o.report = json{{"problem", json_io::to_json(p)},
                  {"pole_orders", std::move(poles)},
                  {"pole_bound_holds", rep.poles.bound_holds},
                  {"pole_bound_attained", rep.poles.ok()},
                  {"Q", std::move(Q)},
                  {"Q0", json_io::to_json(rep.limit.Q0, static_cast<std::size_t>(p.n + 1))},
                  {"Q0bar", json_io::to_json(rep.limit.Q0bar, static_cast<std::size_t>(p.n + 1))},
                  {"match", {{"P", rep.match.P}, {"P0", rep.match.P0}, {"P0bar", rep.match.P0bar}}},
                  {"S_coefficient_limits", rep.s_coefficients},
                  {"derivative_formula", std::move(deriv)},
                  {"z0", cfg.z0},
                  {"numeric", std::move(num)},
                  {"numeric_error_shrinks", shrinking},
                  {"passed", o.passed}};

  std::ostringstream t;
  t << "instance " << p.to_string() << "\n";
  t << "pole-order bound: " << (rep.poles.bound_holds ? "holds" : "VIOLATED") << ", attained per j: "
    << (rep.poles.ok() ? "yes" : "NO") << ", strict entries: " << rep.poles.strict_entries().size() << "\n";
  for (std::size_t j = 0; j < rep.limit.Q.size(); ++j) t << "Q_" << j + 1 << "(z) = " << poly_text(rep.limit.Q[j]) << "\n";
  t << "Qbar_0(z) = " << poly_text(rep.limit.Q0bar) << "\n";
  t << "Q_j = classical P_j: " << (rep.match.P ? "yes" : "NO") << ", Q_0: " << (rep.match.P0 ? "yes" : "NO")
    << ", Qbar_0: " << (rep.match.P0bar ? "yes" : "NO") << "\n";
  t << "S coefficient limits, k = 1..10: " << (rep.s_coefficients ? "exact" : "MISMATCH") << "\n";
  for (const auto& r : readings) {
    t << "derivative formula [" << reading_name(r.reading) << "]: " << r.count(EntryStatus::agree) << " agree, "
      << r.count(EntryStatus::disagree) << " disagree, " << r.count(EntryStatus::undefined) << " undefined\n";
  }
  t << std::setprecision(10);
  for (const auto& s : samples) {
    t << "q = " << s.q << ": (1-q)^e S(z0;q) = " << s.scaled_s << " (tail <= " << s.s_tail << "), S(z0) = "
      << s.classical_s << ", error " << s.error() << "; (1-q)^{e-1} I = " << s.scaled_i << ", -I(z0) = "
      << s.minus_classical_i << "\n";
  }
  t << (o.passed ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  return o;
}

struct SweepRow {
  bool verify = false;
  bool unique = false;
  bool confluence = false;
  std::string error;
};

SweepRow sweep_one(const PadeProblem& p) {
  SweepRow r;
  try {
    const PadeSolution sol = build_solution(p);
    std::string detail;
    r.verify = verify_solution(sol).passed() && reconstruct_pi(sol.table) == sol.pi && i_methods_agree(sol, detail);
    r.unique = certify_uniqueness(p).certified();
    r.confluence = confluence_report(sol, build_classical(classical_counterpart(p))).passed();
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

Outcome do_sweep(const RunConfig& cfg) {
  check_capacity(cfg.bound, capacity_limit());
  const auto instances = enumerate_instances(cfg.bound);
  std::vector<SweepRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(instances.size(), 1)));
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < instances.size();) rows[i] = sweep_one(instances[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t nv = 0, nu = 0, nc = 0, nall = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    nv += r.verify;
    nu += r.unique;
    nc += r.confluence;
    const bool ok = r.verify && r.unique && r.confluence;
    nall += ok;
    if (!ok) {
      failures.push_back({{"problem", json_io::to_json(instances[i])},
                          {"verify", r.verify},
                          {"unique", r.unique},
                          {"confluence", r.confluence},
                          {"error", r.error}});
    }
  }
  Outcome o;
  o.passed = nall == instances.size();
  o.report = json{{"bound", cfg.bound},
                  {"instances", instances.size()},
                  {"verify_passed", nv},
                  {"unique_passed", nu},
                  {"confluence_passed", nc},
                  {"all_passed", nall},
                  {"failures", failures},
                  {"passed", o.passed}};
  std::ostringstream t;
  t << "sweep A(n+1) <= " << cfg.bound << ": " << instances.size() << " instances\n";
  t << "verify     " << nv << "/" << instances.size() << "\n";
  t << "unique     " << nu << "/" << instances.size() << "\n";
  t << "confluence " << nc << "/" << instances.size() << "\n";
  for (const auto& f : failures) t << "FAILED " << f.dump() << "\n";
  t << (o.passed ? "PASS" : "FAIL") << "\n";
  o.text = t.str();
  return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command != Subcommand::sweep) {
      config.problem.validate();
      check_capacity(config.problem.dim(), capacity_limit());
    }
    Outcome o;
    switch (config.command) {
      case Subcommand::construct:
        o = do_construct(config.problem);
        break;
      case Subcommand::verify:
        o = do_verify(config.problem);
        break;
      case Subcommand::unique:
        o = do_unique(config.problem);
        break;
      case Subcommand::classical:
        o = do_classical(config.problem);
        break;
      case Subcommand::confluence:
        o = do_confluence(config);
        break;
      case Subcommand::sweep:
        o = do_sweep(config);
        break;
    }
    if (config.format == OutputFormat::json) {
      out << json_io::dump(o.report) << "\n";
    } else {
      out << o.text;
    }
    return o.passed ? exit_pass : exit_falsified;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_falsified;
  }
}

}  // namespace qpade
