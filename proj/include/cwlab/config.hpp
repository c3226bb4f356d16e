#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cwlab {

struct PerturbationSpec {
  enum class Target { v, u };
  std::string kind = "gaussian";  // only gaussian is supported
  Target target = Target::v;
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
};

// Flat key = value run configuration. Unknown keys are hard errors; every
// value is range-checked with an error message naming the key.
struct RunConfig {
  double gamma = 5.0 / 3.0;
  double v_plus = 1.0;
  double u_plus = 0.0;
  double v_m = 0.9;
  double v_minus = 0.8;

  // Weight amplitude; defaults to sqrt(delta_S) when unset.
  std::optional<double> lambda_weight;

  // Domain; defaults to [-40/delta_S, 40/delta_S + lambda2(v_m) t_end].
  std::optional<double> xi_min;
  std::optional<double> xi_max;

  int n_cells = 1024;  // grid points
  double cfl = 0.4;
  double t_end = 100.0;
  double output_interval = 0.5;
  std::vector<double> snapshot_times;
  std::vector<PerturbationSpec> perturbations;
  std::uint64_t seed = 0;

  double strength_cap = 0.25;
  double amplitude_cap = 0.1;

  // sweep.<key> = v1,v2,... lists, consumed by the sweep driver only.
  std::map<std::string, std::vector<std::string>> sweep_lists;
};

// Parses flat `key = value` text ('#' starts a comment). Empty text gives the
// defaults. Throws ConfigError on unknown keys, parse failures or range
// violations.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

// Applies one `key=value` override (the CLI --set flag) on top of raw text
// semantics: later assignments win.
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

// Re-checks cross-field constraints (state ordering, caps); called by
// parse_config and after overrides.
void validate(const RunConfig& cfg);

}  // namespace cwlab
