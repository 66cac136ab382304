#include "vortexsol/record.hpp"

#include <cstdio>

#include <vortex/version.hpp>

namespace vortexsol {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void to_json(json& j, const ResultRecord& r) {
  const auto& in = r.inputs;
  const auto& out = r.outputs;
  json violations = json::array();
  for (const auto& v : r.bounds.violations)
    violations.push_back({{"code", v.code}, {"message", v.message}, {"advisory", v.advisory}});
  j = json{
      {"schema", r.schema},
      {"version", r.version},
      {"seed", r.seed},
      {"inputs",
       {{"command", in.command},
        {"alpha", in.alpha},
        {"n", in.n},
        {"R", in.R},
        {"Q0", optional_number(in.Q0)},
        {"kappa", optional_number(in.kappa)},
        {"basis", in.basis},
        {"N", in.N},
        {"cells", in.cells},
        {"method", in.method},
        {"max_iters", in.max_iters},
        {"grad_tol", in.grad_tol},
        {"restarts", in.restarts}}},
      {"outputs",
       {{"kappa", out.kappa},
        {"kappa_recovered", out.kappa_recovered},
        {"flux", out.flux},
        {"action", out.action},
        {"action_kappa", out.action_kappa},
        {"residual", out.residual},
        {"grad_norm", out.grad_norm},
        {"iterations", out.iterations},
        {"restart_index", out.restart_index},
        {"converged", out.converged}}},
      {"bounds",
       {{"kappa_upper", r.bounds.kappa_upper},
        {"kappa_lower", r.bounds.kappa_lower},
        {"sigma", r.bounds.sigma},
        {"winding_negative", r.bounds.winding_negative},
        {"small_flux_excluded", r.bounds.small_flux_excluded},
        {"violations", violations},
        {"verdict", r.bounds.verdict}}},
      {"timing", {{"wall_seconds", r.wall_seconds}}},
      {"error", r.error},
  };
}

void from_json(const json& j, ResultRecord& r) {
  r.schema = j.at("schema").get<int>();
  r.version = j.at("version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();

  const json& in = j.at("inputs");
  r.inputs.command = in.at("command").get<std::string>();
  r.inputs.alpha = in.at("alpha").get<double>();
  r.inputs.n = in.at("n").get<int>();
  r.inputs.R = in.at("R").get<double>();
  r.inputs.Q0 = read_optional(in, "Q0");
  r.inputs.kappa = read_optional(in, "kappa");
  r.inputs.basis = in.at("basis").get<std::string>();
  r.inputs.N = in.at("N").get<int>();
  r.inputs.cells = in.at("cells").get<int>();
  r.inputs.method = in.at("method").get<std::string>();
  r.inputs.max_iters = in.at("max_iters").get<int>();
  r.inputs.grad_tol = in.at("grad_tol").get<double>();
  r.inputs.restarts = in.at("restarts").get<int>();

  const json& out = j.at("outputs");
  r.outputs.kappa = out.at("kappa").get<double>();
  r.outputs.kappa_recovered = out.at("kappa_recovered").get<double>();
  r.outputs.flux = out.at("flux").get<double>();
  r.outputs.action = out.at("action").get<double>();
  r.outputs.action_kappa = out.at("action_kappa").get<double>();
  r.outputs.residual = out.at("residual").get<double>();
  r.outputs.grad_norm = out.at("grad_norm").get<double>();
  r.outputs.iterations = out.at("iterations").get<int>();
  r.outputs.restart_index = out.at("restart_index").get<int>();
  r.outputs.converged = out.at("converged").get<bool>();

  const json& b = j.at("bounds");
  r.bounds.kappa_upper = b.at("kappa_upper").get<double>();
  r.bounds.kappa_lower = b.at("kappa_lower").get<double>();
  r.bounds.sigma = b.at("sigma").get<double>();
  r.bounds.winding_negative = b.at("winding_negative").get<bool>();
  r.bounds.small_flux_excluded = b.at("small_flux_excluded").get<bool>();
  r.bounds.verdict = b.at("verdict").get<std::string>();
  r.bounds.violations.clear();
  for (const auto& v : b.at("violations"))
    r.bounds.violations.push_back({v.at("code").get<std::string>(),
                                   v.at("message").get<std::string>(),
                                   v.at("advisory").get<bool>()});

  r.wall_seconds = j.at("timing").at("wall_seconds").get<double>();
  r.error = j.value("error", std::string{});
}

RecordInputs make_inputs(const RunConfig& cfg) {
  RecordInputs in;
  in.command = to_string(cfg.command);
  in.alpha = cfg.params.alpha;
  in.n = cfg.params.n;
  in.R = cfg.params.R;
  in.Q0 = cfg.Q0;
  in.kappa = cfg.kappa;
  in.basis = std::string(vortex::to_string(cfg.basis));
  in.N = cfg.N;
  in.cells = cfg.effective_cells();
  in.method = cfg.solver.method == vortex::DescentMethod::kSteepest ? "steepest" : "lbfgs";
  in.max_iters = cfg.solver.max_iters;
  in.grad_tol = cfg.solver.grad_tol;
  in.restarts = cfg.solver.restarts;
  return in;
}

RecordOutputs make_outputs(const vortex::SolveResult& res) {
  RecordOutputs out;
  out.kappa = res.kappa;
  out.kappa_recovered = res.kappa_recovered;
  out.flux = res.flux;
  out.action = res.action;
  out.action_kappa = res.action_kappa;
  out.residual = res.residual;
  out.grad_norm = res.grad_norm;
  out.iterations = res.iterations;
  out.restart_index = res.restart_index;
  out.converged = res.converged;
  return out;
}

RecordBounds make_bounds(const vortex::BoundsReport& rep,
                         const std::vector<vortex::BoundViolation>& violations) {
  RecordBounds b;
  b.kappa_upper = rep.kappa_upper;
  b.kappa_lower = rep.kappa_lower;
  b.sigma = rep.sigma;
  b.winding_negative = rep.winding_negative;
  b.small_flux_excluded = rep.small_flux_excluded;
  for (const auto& v : violations) b.violations.push_back({v.code, v.message, v.advisory});
  if (vortex::has_hard_violation(violations))
    b.verdict = "violation";
  else
    b.verdict = violations.empty() ? "ok" : "advisory";
  return b;
}

json bounds_to_json(const vortex::BoundsReport& rep) {
  return json{
      {"schema", kSchemaVersion},
      {"version", vortex::kVersion},
      {"alpha", rep.params.alpha},
      {"n", rep.params.n},
      {"R", rep.params.R},
      {"Q0", rep.Q0},
      {"kappa", rep.kappa},
      {"kappa_assumed", rep.kappa_assumed},
      {"r0", rep.r0},
      {"kappa_upper", rep.kappa_upper},
      {"kappa_lower", rep.kappa_lower},
      {"sigma", rep.sigma},
      {"winding_negative", rep.winding_negative},
      {"small_flux", rep.small_flux},
      {"small_flux_condition", rep.small_flux_condition},
      {"small_flux_excluded", rep.small_flux_excluded},
      {"R_indefinite", rep.R_indefinite},
      {"R_nehari", rep.R_nehari},
      {"kappa_interval", {rep.kappa_interval.first, rep.kappa_interval.second}},
  };
}

}  // namespace vortexsol
