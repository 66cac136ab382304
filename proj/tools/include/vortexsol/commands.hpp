#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"
#include "record.hpp"

namespace vortexsol {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNotConverged = 3,
  kExitBounds = 4,
};

/// Solve at Q0 (flux-constrained) or kappa (Nehari). Fills a record even on
/// NotConverged, using the best iterate.
struct SolveOutcome {
  ResultRecord record;
  vortex::SolveResult result;
  bool has_result = false;
};
SolveOutcome run_solve_record(const RunConfig& cfg);

struct SweepRow {
  double param = 0.0;
  double kappa = 0.0;
  double flux = 0.0;
  double residual = 0.0;
  bool converged = false;
  std::string error;
  ResultRecord record;  ///< empty for kappa-grid (oracle) sweeps
  std::vector<double> r, u;  ///< sampled profile for plot files
};

/// One row per grid value, in grid order. Points run on `cfg.jobs` workers;
/// failures are recorded in the row and do not stop the sweep.
std::vector<SweepRow> run_sweep_rows(const RunConfig& cfg);

/// Subcommand drivers: write files under cfg.out_dir, print a summary in
/// cfg.format to `out`, and return the process exit code.
int run_solve(const RunConfig& cfg, std::ostream& out);
int run_sweep(const RunConfig& cfg, std::ostream& out);
int run_bounds(const RunConfig& cfg, std::ostream& out);
int run_crosscheck(const RunConfig& cfg, std::ostream& out);

int dispatch(const RunConfig& cfg, std::ostream& out);

/// Profile CSV text (`r,u,du_dr`) on a uniform grid including both ends.
std::string profile_csv(const vortex::RadialField& u, int points);

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace vortexsol
