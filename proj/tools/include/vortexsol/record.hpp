#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <vortex/bounds.hpp>
#include <vortex/optimizer.hpp>

#include "config.hpp"

namespace vortexsol {

inline constexpr int kSchemaVersion = 1;

struct RecordInputs {
  std::string command;
  double alpha = 0.0;
  int n = 0;
  double R = 0.0;
  std::optional<double> Q0;
  std::optional<double> kappa;
  std::string basis;
  int N = 0;
  int cells = 0;
  std::string method;
  int max_iters = 0;
  double grad_tol = 0.0;
  int restarts = 0;

  bool operator==(const RecordInputs&) const = default;
};

struct RecordOutputs {
  double kappa = 0.0;
  double kappa_recovered = 0.0;
  double flux = 0.0;
  double action = 0.0;
  double action_kappa = 0.0;
  double residual = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  int restart_index = -1;
  bool converged = false;

  bool operator==(const RecordOutputs&) const = default;
};

struct RecordViolation {
  std::string code;
  std::string message;
  bool advisory = false;

  bool operator==(const RecordViolation&) const = default;
};

struct RecordBounds {
  double kappa_upper = 0.0;
  double kappa_lower = 0.0;
  double sigma = 0.0;
  bool winding_negative = false;
  bool small_flux_excluded = false;
  std::vector<RecordViolation> violations;
  std::string verdict;  ///< "ok", "advisory" or "violation"

  bool operator==(const RecordBounds&) const = default;
};

/// One solve, serialized as JSON with a `schema` field.
struct ResultRecord {
  int schema = kSchemaVersion;
  std::string version;
  std::uint64_t seed = 0;
  RecordInputs inputs;
  RecordOutputs outputs;
  RecordBounds bounds;
  double wall_seconds = 0.0;
  std::string error;  ///< empty unless the solve failed

  bool operator==(const ResultRecord&) const = default;
};

void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);

RecordInputs make_inputs(const RunConfig& cfg);
RecordOutputs make_outputs(const vortex::SolveResult& res);
RecordBounds make_bounds(const vortex::BoundsReport& rep,
                         const std::vector<vortex::BoundViolation>& violations);

nlohmann::json bounds_to_json(const vortex::BoundsReport& rep);

/// Every double printed with 17 significant digits.
std::string format_double(double x);

}  // namespace vortexsol
