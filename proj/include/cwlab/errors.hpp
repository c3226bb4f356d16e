#pragma once

#include <stdexcept>
#include <string>

namespace cwlab {

// Bad or inconsistent wave/run configuration (wrong state ordering,
// violated admissibility condition, invalid config key, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Traveling-wave profile construction failed (tails did not converge
// within the xi budget, loss of monotonicity, ...).
struct ProfileError : std::runtime_error {
  explicit ProfileError(const std::string& what) : std::runtime_error(what) {}
};

// The time integration produced an invalid state (non-positive or
// non-finite specific volume, volume bound violated).
struct BlowupError : std::runtime_error {
  explicit BlowupError(const std::string& what) : std::runtime_error(what) {}
};

// A single step was requested with an unstable dt.
struct StepError : std::runtime_error {
  explicit StepError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cwlab
