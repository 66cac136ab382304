#include "vortexsol/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <vortex/vortex.hpp>

namespace vortexsol {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

vortex::BasisPtr make_basis(const RunConfig& cfg) {
  return vortex::build_basis(cfg.basis, cfg.N, cfg.params.R, cfg.effective_cells());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw vortex::ConfigError("cannot write " + path.string());
  f << text;
}

fs::path prepare_out(const RunConfig& cfg) {
  fs::path dir(cfg.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw vortex::ConfigError("cannot create output directory " + dir.string());
  return dir;
}

std::string two_columns(const std::vector<double>& x, const std::vector<double>& y) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += format_double(x[i]) + " " + format_double(y[i]) + "\n";
  return s;
}

std::string label(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Residual of a sampled profile after projection onto a sine basis.
double projected_residual(const vortex::RadialField& sampled, const vortex::Params& p,
                          double kappa, int N) {
  auto sine = vortex::build_basis(vortex::BasisKind::kSpectralSine, N, sampled.mesh_ptr());
  Eigen::VectorXd a = vortex::project(sampled.u(), *sine);
  return vortex::strong_residual(vortex::synthesize(a, sine), p, kappa);
}

void sample_profile(const vortex::RadialField& u, int points, std::vector<double>& r,
                    std::vector<double>& v) {
  const double R = u.mesh().R();
  r.resize(points);
  v.resize(points);
  for (int i = 0; i < points; ++i) {
    r[i] = R * i / (points - 1);
    v[i] = u.value_at(r[i]);
  }
}

void print_summary(const ResultRecord& rec, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << json(rec).dump(2) << "\n";
    return;
  }
  out << "key,value\n";
  out << "kappa," << format_double(rec.outputs.kappa) << "\n";
  out << "flux," << format_double(rec.outputs.flux) << "\n";
  out << "action," << format_double(rec.outputs.action) << "\n";
  out << "residual," << format_double(rec.outputs.residual) << "\n";
  out << "converged," << (rec.outputs.converged ? "true" : "false") << "\n";
  out << "bounds," << rec.bounds.verdict << "\n";
  if (!rec.error.empty()) out << "error,\"" << rec.error << "\"\n";
}

}  // namespace

std::string profile_csv(const vortex::RadialField& u, int points) {
  std::string s = "r,u,du_dr\n";
  const double R = u.mesh().R();
  for (int i = 0; i < points; ++i) {
    const double r = R * i / (points - 1);
    s += format_double(r) + "," + format_double(u.value_at(r)) + "," +
         format_double(u.derivative_at(r)) + "\n";
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string s = "param,kappa,flux,residual,converged\n";
  for (const auto& row : rows) {
    s += format_double(row.param) + "," + format_double(row.kappa) + "," +
         format_double(row.flux) + "," + format_double(row.residual) + "," +
         (row.converged ? "true" : "false") + "\n";
  }
  return s;
}

SolveOutcome run_solve_record(const RunConfig& cfg) {
  SolveOutcome outcome;
  ResultRecord& rec = outcome.record;
  rec.version = vortex::kVersion;
  rec.seed = cfg.solver.seed;
  rec.inputs = make_inputs(cfg);

  const auto start = std::chrono::steady_clock::now();
  auto basis = make_basis(cfg);
  try {
    outcome.result = cfg.Q0 ? vortex::minimize_sphere(*cfg.Q0, cfg.params, basis, cfg.solver)
                            : vortex::minimize_nehari(*cfg.kappa, cfg.params, basis, cfg.solver);
  } catch (const vortex::NotConverged& e) {
    outcome.result = e.best();
    outcome.result.converged = false;
    rec.error = e.what();
  }
  outcome.has_result = outcome.result.basis != nullptr;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (outcome.has_result) {
    rec.outputs = make_outputs(outcome.result);
    const double flux = cfg.Q0 ? *cfg.Q0 : outcome.result.flux;
    if (flux > 0.0) {
      auto rep = vortex::bounds_report(cfg.params, flux, outcome.result.kappa);
      rec.bounds = make_bounds(rep, vortex::check_solution_against_bounds(outcome.result, rep));
    }
  }
  return outcome;
}

std::vector<SweepRow> run_sweep_rows(const RunConfig& cfg) {
  std::vector<SweepRow> rows(cfg.values.size());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].param = cfg.values[i];

  auto work = [&](SweepRow& row) {
    try {
      if (cfg.sweep_param == SweepParam::kKappa) {
        vortex::ShootingOptions opts;
        opts.steps = cfg.shoot_steps;
        auto prof = vortex::profile_for_kappa(row.param, cfg.params, opts);
        auto mesh = vortex::make_mesh(cfg.params.R, vortex::kDefaultSpectralCells);
        auto sampled = prof.resample(mesh);
        row.kappa = row.param;
        row.flux = prof.flux();
        row.residual = projected_residual(sampled, cfg.params, row.param, cfg.N);
        row.converged = true;
        row.r = prof.r;
        row.u = prof.u;
        return;
      }
      RunConfig point = cfg;
      point.command = Command::kSolve;
      point.kappa.reset();
      if (cfg.sweep_param == SweepParam::kQ0)
        point.Q0 = row.param;
      else
        point.params.n = static_cast<int>(std::lround(row.param));
      auto outcome = run_solve_record(point);
      row.record = outcome.record;
      row.error = outcome.record.error;
      if (outcome.has_result) {
        row.kappa = outcome.result.kappa;
        row.flux = outcome.result.flux;
        row.residual = outcome.result.residual;
        row.converged = outcome.result.converged;
        sample_profile(outcome.result.field(), cfg.profile_points, row.r, row.u);
      }
    } catch (const vortex::Error& e) {
      row.converged = false;
      row.kappa = row.flux = row.residual = std::nan("");
      row.error = e.what();
    }
  };

  const std::size_t workers = std::min<std::size_t>(cfg.jobs, rows.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) work(rows[i]);
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
  }
  return rows;
}

int run_solve(const RunConfig& cfg, std::ostream& out) {
  auto outcome = run_solve_record(cfg);
  const fs::path dir = prepare_out(cfg);
  if (outcome.has_result) {
    write_text(dir / "profile.csv", profile_csv(outcome.result.field(), cfg.profile_points));
    const double flux = cfg.Q0 ? *cfg.Q0 : outcome.result.flux;
    if (flux > 0.0)
      write_text(dir / "bounds.json",
                 bounds_to_json(vortex::bounds_report(cfg.params, flux, outcome.result.kappa))
                         .dump(2) +
                     "\n");
  }
  write_text(dir / "record.json", json(outcome.record).dump(2) + "\n");
  print_summary(outcome.record, cfg.format, out);

  if (!outcome.record.outputs.converged) return kExitNotConverged;
  if (cfg.strict && outcome.record.bounds.verdict == "violation") return kExitBounds;
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  auto rows = run_sweep_rows(cfg);
  const fs::path dir = prepare_out(cfg);
  const std::string name = to_string(cfg.sweep_param);

  write_text(dir / "sweep.csv", sweep_csv(rows));
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    if (!row.converged) continue;
    xs.push_back(row.param);
    ys.push_back(cfg.sweep_param == SweepParam::kKappa ? row.flux : row.kappa);
  }
  write_text(dir / (cfg.sweep_param == SweepParam::kKappa ? "flux_vs_kappa.dat"
                                                          : "kappa_vs_" + name + ".dat"),
             two_columns(xs, ys));
  json records = json::array();
  bool failed = false, violated = false;
  for (const auto& row : rows) {
    if (!row.r.empty())
      write_text(dir / ("profile_" + name + "_" + label(row.param) + ".dat"),
                 two_columns(row.r, row.u));
    if (cfg.sweep_param != SweepParam::kKappa) records.push_back(row.record);
    failed = failed || !row.converged;
    violated = violated || row.record.bounds.verdict == "violation";
  }
  if (cfg.sweep_param != SweepParam::kKappa)
    write_text(dir / "sweep.json", records.dump(2) + "\n");

  if (cfg.format == OutputFormat::kJson) {
    json j = json::array();
    for (const auto& row : rows)
      j.push_back({{"param", row.param},
                   {"kappa", row.kappa},
                   {"flux", row.flux},
                   {"residual", row.residual},
                   {"converged", row.converged},
                   {"error", row.error}});
    out << j.dump(2) << "\n";
  } else {
    out << sweep_csv(rows);
  }
  if (failed) return kExitNotConverged;
  if (cfg.strict && violated) return kExitBounds;
  return kExitOk;
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
  auto rep = vortex::bounds_report(cfg.params, *cfg.Q0, cfg.kappa);
  const fs::path dir = prepare_out(cfg);
  json j = bounds_to_json(rep);
  write_text(dir / "bounds.json", j.dump(2) + "\n");
  if (cfg.format == OutputFormat::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << "key,value\n";
    for (const char* key : {"kappa_upper", "kappa_lower", "sigma", "r0", "R_indefinite",
                            "R_nehari"})
      out << key << "," << format_double(j.at(key).get<double>()) << "\n";
    out << "kappa_interval," << format_double(rep.kappa_interval.first) << ";"
        << format_double(rep.kappa_interval.second) << "\n";
    out << "winding_negative," << (rep.winding_negative ? "true" : "false") << "\n";
    out << "small_flux_excluded," << (rep.small_flux_excluded ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_crosscheck(const RunConfig& cfg, std::ostream& out) {
  RunConfig solve_cfg = cfg;
  solve_cfg.command = Command::kSolve;
  solve_cfg.kappa.reset();
  auto outcome = run_solve_record(solve_cfg);
  const fs::path dir = prepare_out(cfg);

  json j{{"schema", kSchemaVersion}, {"version", vortex::kVersion}, {"solver", outcome.record}};
  int code = outcome.record.outputs.converged ? kExitOk : kExitNotConverged;
  if (outcome.has_result) {
    const auto field = outcome.result.field();
    write_text(dir / "profile.csv", profile_csv(field, cfg.profile_points));
    try {
      vortex::ShootingOptions opts;
      opts.steps = cfg.shoot_steps;
      auto prof = vortex::profile_for_kappa(outcome.result.kappa, cfg.params, opts);
      auto sampled = prof.resample(field.mesh_ptr());
      const double residual =
          projected_residual(sampled, cfg.params, outcome.result.kappa, std::max(cfg.N, 40));
      const double peak = field.u().cwiseAbs().maxCoeff();
      const double gap = (sampled.u() - field.u()).cwiseAbs().maxCoeff();
      j["oracle"] = {{"kappa", prof.kappa},
                     {"core_slope", prof.core_slope},
                     {"flux", prof.flux()},
                     {"flux_relative_error", std::abs(prof.flux() - *cfg.Q0) / *cfg.Q0},
                     {"projected_residual", residual},
                     {"profile_max_relative_gap", gap / peak},
                     {"terminal", prof.terminal()}};
      std::vector<double> du = prof.du;
      std::string csv = "r,u,du_dr\n";
      const std::size_t stride = std::max<std::size_t>(1, prof.r.size() / 400);
      for (std::size_t i = 0; i < prof.r.size(); i += stride)
        csv += format_double(prof.r[i]) + "," + format_double(prof.u[i]) + "," +
               format_double(du[i]) + "\n";
      write_text(dir / "oracle_profile.csv", csv);
    } catch (const vortex::Error& e) {
      j["oracle"] = {{"error", e.what()}};
      code = kExitNotConverged;
    }
  }
  write_text(dir / "crosscheck.json", j.dump(2) + "\n");
  if (cfg.format == OutputFormat::kJson) {
    out << j.dump(2) << "\n";
  } else {
    out << "key,value\n";
    out << "kappa," << format_double(outcome.record.outputs.kappa) << "\n";
    if (j.contains("oracle") && j["oracle"].contains("flux")) {
      out << "oracle_flux," << format_double(j["oracle"]["flux"].get<double>()) << "\n";
      out << "oracle_residual,"
          << format_double(j["oracle"]["projected_residual"].get<double>()) << "\n";
      out << "profile_gap,"
          << format_double(j["oracle"]["profile_max_relative_gap"].get<double>()) << "\n";
    }
  }
  return code;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  switch (cfg.command) {
    case Command::kSolve: return run_solve(cfg, out);
    case Command::kSweep: return run_sweep(cfg, out);
    case Command::kBounds: return run_bounds(cfg, out);
    case Command::kCrosscheck: return run_crosscheck(cfg, out);
  }
  return kExitConfig;
}

}  // namespace vortexsol
