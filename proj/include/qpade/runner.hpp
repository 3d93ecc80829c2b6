#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpade/qpade.hpp"

namespace qpade {

enum class Subcommand { construct, verify, unique, classical, confluence, sweep };
enum class OutputFormat { json, text };

struct RunConfig {
  Subcommand command = Subcommand::construct;
  PadeProblem problem;
  OutputFormat format = OutputFormat::text;
  double z0 = 2.0;
  std::vector<double> q_list = {0.9, 0.99, 0.999};
  std::size_t terms = 2000000;  // cap on terms of the numeric sums
  double tolerance = 1e-12;     // target tail bound of the numeric sums
  long bound = 8;               // sweep: largest A(n+1)
  unsigned threads = 0;         // sweep: 0 = hardware concurrency
};

/// Exit statuses of run().
inline constexpr int exit_pass = 0;
inline constexpr int exit_falsified = 1;
inline constexpr int exit_usage = 2;

/// Every (A, n, rho, sigma, nu) with rho + sigma + nu + 2 <= A(n+1) <= bound,
/// in lexicographic order.
std::vector<PadeProblem> enumerate_instances(long bound);

/// Runs one subcommand; the report goes to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qpade
