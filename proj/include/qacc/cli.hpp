#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qacc/experiments.hpp"
#include "qacc/params.hpp"

namespace qacc::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,  ///< unexpected failure, I/O
  kUsage = 2,          ///< bad flags or config file
  kDomain = 3,         ///< parameters outside the physical domain (incl. horizon)
  kConvergence = 4,    ///< series, root scan or quadrature did not converge
  kCheckFailed = 5,    ///< `validate` ran and at least one check failed
};

enum class Command { Modes, Probability, Sweep, Distinguish, Validate, ValidateSpecfun };

std::string_view to_string(Command command);

/// Resolved run configuration. Every field has its final value; `keys` keeps
/// the resolved key = value pairs in output order for the metadata header.
struct RunConfig {
  Command command = Command::Validate;
  PhysicalParams physical;  ///< gap already resolved (ω₁ by default)
  int k_max = 15;
  double tol = 1e-6;
  std::optional<experiments::AccelerationGrid> grid;
  std::optional<experiments::Panel> panel;
  std::optional<Scenario> scenario;
  std::string mode;  ///< "", "vacuum", "stimulated" or "full"
  Normalization normalization = Normalization::Massless;
  std::optional<double> p_measured;
  int samples = 11;
  unsigned threads = 0;
  std::string output_path;  ///< empty: stdout
  bool acceleration_given = false;

  std::vector<std::pair<std::string, std::string>> keys;
};

/// Result of argument parsing: either a config or a usage/help text to print.
struct ParseResult {
  std::optional<RunConfig> config;
  std::string message;  ///< help text when config is empty
  int exit_code = kSuccess;
};

/// Parses `args` (without the program name). Flags override values read
/// from `--config FILE`; unknown keys, malformed values and a missing command
/// raise UsageError.
ParseResult parse_config(const std::vector<std::string>& args);

/// Reads a flat `key = value` file (`#` comments, blank lines allowed).
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Rejects parameter combinations that cannot be computed (HorizonError,
/// DomainError) before any numerical work starts.
void check_domain(const RunConfig& config);

/// Executes the command, writing CSV or text to `out` (or config.output_path)
/// and diagnostics to `err`. Returns the exit code; library exceptions
/// propagate to `main_entry`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// argv-level entry point: parse, run, map exceptions onto ExitCode.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Tool version embedded in every output file.
std::string_view version();

}  // namespace qacc::cli
