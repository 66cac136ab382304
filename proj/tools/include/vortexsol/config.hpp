#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <vortex/basis.hpp>
#include <vortex/optimizer.hpp>
#include <vortex/params.hpp>

namespace vortexsol {

enum class Command { kSolve, kSweep, kBounds, kCrosscheck };
enum class OutputFormat { kCsv, kJson };
enum class SweepParam { kQ0, kN, kKappa };

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(SweepParam s);

/// Everything one invocation needs. Built by parse_command_line, checked by
/// validate(); the library never reads argv or files past this point.
struct RunConfig {
  Command command = Command::kSolve;
  vortex::Params params;
  std::optional<double> Q0;
  std::optional<double> kappa;
  vortex::BasisKind basis = vortex::BasisKind::kSpectralSine;
  int N = 40;
  int cells = 0;  ///< 0: 512 for sine, N + 1 for hats
  vortex::SolverSettings solver;
  int shoot_steps = 8192;
  int jobs = 1;
  int profile_points = 401;
  std::string out_dir = "vortexsol-out";
  OutputFormat format = OutputFormat::kCsv;
  bool strict = false;
  SweepParam sweep_param = SweepParam::kQ0;
  std::vector<double> values;

  /// Throws vortex::ConfigError on any inconsistency.
  void validate() const;
  int effective_cells() const;
};

/// Result of parsing argv. When exit_code is set the caller should stop and
/// return it (help text, parse failure); message holds what to print.
struct ParseOutcome {
  RunConfig config;
  std::optional<int> exit_code;
  std::string message;
};

/// CLI flags take precedence over `--config FILE` (flat `key = value`
/// lines, keys named like the long flags), which overrides the defaults.
ParseOutcome parse_command_line(int argc, const char* const* argv);

}  // namespace vortexsol
