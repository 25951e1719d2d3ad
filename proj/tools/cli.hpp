#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace permclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Everything one invocation needs, filled in by the argument parser.
struct RunConfig {
  std::string command;
  std::string avoid;
  std::string closure_of;
  std::string perms;
  std::string separator = ",";
  std::vector<std::string> positional;
  std::size_t max_n = 0;
  std::size_t max_len = 0;
  std::size_t max_order = 0;
  std::optional<std::size_t> k;
  std::optional<std::size_t> alpha;
  std::string mu_range;
  std::string recurrence;
  std::string seq;
  bool with_short_basis = false;
  bool graph_certify = false;
  double tol = 1e-9;
  std::string format = "table";
  std::string output;
};

/// Runs one command. args excludes the program name. Data goes to out,
/// diagnostics to err; returns 0, 1 (domain error) or 2 (usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permclass::cli
