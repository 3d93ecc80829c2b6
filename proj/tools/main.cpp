#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qpade/runner.hpp"

int main(int argc, char** argv) {
  using qpade::Subcommand;
  qpade::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"q-Pade approximants of q-polylogarithms: construction, verification and confluence checks"};
  app.require_subcommand(1);

  const std::map<std::string, std::pair<Subcommand, std::string>> commands = {
      {"construct", {Subcommand::construct, "Build Pi, the coefficient table and the polynomials P_j, P_0, Pbar_0"}},
      {"verify", {Subcommand::verify, "Check the three condition groups exactly, with sharpness"}},
      {"unique", {Subcommand::unique, "Certify that the condition system has a one-dimensional nullspace"}},
      {"classical", {Subcommand::classical, "Solve and verify the classical (q = 1) problem"}},
      {"confluence", {Subcommand::confluence, "Exact q -> 1 limits, pole orders and numeric samples"}},
      {"sweep", {Subcommand::sweep, "verify + unique + confluence over every instance with A(n+1) <= bound"}},
  };

  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    const Subcommand which = entry.first;
    sub->callback([&cfg, which] { cfg.command = which; });
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    if (which == Subcommand::sweep) {
      sub->add_option("--bound", cfg.bound, "Largest A(n+1) in the sweep")->check(CLI::Range(1L, 64L));
      sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
      continue;
    }
    sub->add_option("--A", cfg.problem.A, "Number of polylogarithm weights")->required();
    sub->add_option("--n", cfg.problem.n, "Degree of the polynomials P_j")->required();
    sub->add_option("--rho", cfg.problem.rho, "Vanishing order at infinity");
    sub->add_option("--sigma", cfg.problem.sigma, "Vanishing order at zero");
    sub->add_option("--nu", cfg.problem.nu, "Shift of the I-vanishing window");
    if (which == Subcommand::confluence) {
      sub->add_option("--z0", cfg.z0, "Real evaluation point > 1")->check(CLI::PositiveNumber);
      sub->add_option("--q-list", cfg.q_list, "Values of q in (0, 1)")->delimiter(',')->check(CLI::Range(0.0, 1.0));
      sub->add_option("--terms", cfg.terms, "Maximum number of series terms");
      sub->add_option("--tolerance", cfg.tolerance, "Target tail bound")->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qpade::exit_usage;
  }
  cfg.format = format == "json" ? qpade::OutputFormat::json : qpade::OutputFormat::text;
  return qpade::run(cfg, std::cout, std::cerr);
}
