#include "vortexsol/config.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include <vortex/errors.hpp>
#include <vortex/version.hpp>

namespace vortexsol {

using vortex::ConfigError;

std::string to_string(Command c) {
  switch (c) {
    case Command::kSolve: return "solve";
    case Command::kSweep: return "sweep";
    case Command::kBounds: return "bounds";
    case Command::kCrosscheck: return "crosscheck";
  }
  return "?";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::kCsv ? "csv" : "json"; }

std::string to_string(SweepParam s) {
  switch (s) {
    case SweepParam::kQ0: return "Q0";
    case SweepParam::kN: return "n";
    case SweepParam::kKappa: return "kappa";
  }
  return "?";
}

int RunConfig::effective_cells() const {
  if (cells > 0) return cells;
  return basis == vortex::BasisKind::kHatP1 ? N + 1 : vortex::kDefaultSpectralCells;
}

void RunConfig::validate() const {
  try {
    params.validate();
  } catch (const vortex::DomainError& e) {
    throw ConfigError(e.what());
  }
  if (N < 1) throw ConfigError("N must be at least 1");
  if (cells < 0) throw ConfigError("cells must be nonnegative");
  if (basis == vortex::BasisKind::kHatP1 && cells != 0 && cells != N + 1)
    throw ConfigError("hat basis needs cells == N + 1");
  if (jobs < 1) throw ConfigError("jobs must be at least 1");
  if (profile_points < 2) throw ConfigError("points must be at least 2");
  if (shoot_steps < 4096) throw ConfigError("steps must be at least 4096");
  if (Q0 && !(*Q0 > 0.0 && std::isfinite(*Q0))) throw ConfigError("Q0 must be positive");
  if (kappa && !std::isfinite(*kappa)) throw ConfigError("kappa must be finite");
  try {
    solver.validate();
  } catch (const vortex::Error& e) {
    throw ConfigError(e.what());
  }

  switch (command) {
    case Command::kSolve:
      if (Q0.has_value() == kappa.has_value())
        throw ConfigError("solve needs exactly one of --Q0 or --kappa");
      break;
    case Command::kBounds:
    case Command::kCrosscheck:
      if (!Q0) throw ConfigError(to_string(command) + " needs --Q0");
      break;
    case Command::kSweep:
      if (values.empty()) throw ConfigError("sweep needs a nonempty --values grid");
      for (double v : values) {
        if (!std::isfinite(v)) throw ConfigError("sweep values must be finite");
        if (sweep_param == SweepParam::kQ0 && !(v > 0.0))
          throw ConfigError("Q0 grid values must be positive");
        if (sweep_param == SweepParam::kN && (v != std::round(v) || std::abs(v) < 1.0))
          throw ConfigError("n grid values must be nonzero integers");
      }
      if (sweep_param == SweepParam::kN && !Q0) throw ConfigError("n sweep needs --Q0");
      break;
  }
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  ParseOutcome outcome;
  RunConfig& cfg = outcome.config;

  CLI::App app{"Optical-vortex soliton solver for saturable media", "vortexsol"};
  app.set_version_flag("--version", std::string(vortex::kVersion));
  app.set_config("--config", "", "flat `key = value` file; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  double alpha = cfg.params.alpha;
  int n = cfg.params.n;
  double R = cfg.params.R;
  std::string basis = "sine";
  std::string format = "csv";
  std::string method = "lbfgs";
  std::string param = "Q0";

  app.add_option("--alpha", alpha, "saturation constant")->capture_default_str();
  app.add_option("--n", n, "winding number")->capture_default_str();
  app.add_option("--R", R, "outer radius")->capture_default_str();
  app.add_option("--Q0", cfg.Q0, "prescribed energy flux");
  app.add_option("--kappa", cfg.kappa, "prescribed propagation constant (Nehari mode)");
  app.add_option("--N", cfg.N, "basis size")->capture_default_str();
  app.add_option("--basis", basis, "basis kind")
      ->check(CLI::IsMember({"sine", "hat"}))
      ->capture_default_str();
  app.add_option("--cells", cfg.cells, "quadrature cells (0: default for the basis)")
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "sweep workers")->capture_default_str();
  app.add_option("--seed", cfg.solver.seed, "restart perturbation seed")->capture_default_str();
  app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  app.add_option("--format", format, "stdout summary format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--strict", cfg.strict, "exit 4 when a bound is violated");
  app.add_option("--method", method, "descent direction")
      ->check(CLI::IsMember({"lbfgs", "steepest"}))
      ->capture_default_str();
  app.add_option("--max-iters", cfg.solver.max_iters)->capture_default_str();
  app.add_option("--grad-tol", cfg.solver.grad_tol)->capture_default_str();
  app.add_option("--restarts", cfg.solver.restarts)->capture_default_str();
  app.add_option("--steps", cfg.shoot_steps, "shooting grid steps")->capture_default_str();
  app.add_option("--points", cfg.profile_points, "profile CSV rows")->capture_default_str();
  app.add_option("--param", param, "sweep parameter")
      ->check(CLI::IsMember({"Q0", "n", "kappa"}))
      ->capture_default_str();
  app.add_option("--values", cfg.values, "sweep grid, comma separated")->delimiter(',');

  auto* solve = app.add_subcommand("solve", "minimize at fixed Q0, or on the Nehari manifold at fixed kappa");
  auto* sweep = app.add_subcommand("sweep", "solve over a grid of Q0, n or kappa");
  auto* bounds = app.add_subcommand("bounds", "closed-form estimates for (alpha, n, R, Q0)");
  auto* cross = app.add_subcommand("crosscheck", "solver against the shooting oracle");
  for (auto* sub : {solve, sweep, bounds, cross}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    outcome.message = out.str() + err.str();
    outcome.exit_code = code == 0 ? 0 : 2;
    return outcome;
  }

  if (*solve) cfg.command = Command::kSolve;
  if (*sweep) cfg.command = Command::kSweep;
  if (*bounds) cfg.command = Command::kBounds;
  if (*cross) cfg.command = Command::kCrosscheck;

  cfg.params.alpha = alpha;
  cfg.params.n = n;
  cfg.params.R = R;
  cfg.basis = vortex::basis_kind_from_string(basis);
  cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  cfg.solver.method = method == "steepest" ? vortex::DescentMethod::kSteepest
                                           : vortex::DescentMethod::kLbfgs;
  static const std::map<std::string, SweepParam> params{
      {"Q0", SweepParam::kQ0}, {"n", SweepParam::kN}, {"kappa", SweepParam::kKappa}};
  cfg.sweep_param = params.at(param);
  return outcome;
}

}  // namespace vortexsol
