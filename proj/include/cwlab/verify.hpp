#pragma once

#include <string>
#include <vector>

#include "cwlab/config.hpp"

namespace cwlab {

struct CheckResult {
  std::string name;
  bool pass;
  double measured;
  std::string bound;  // human-readable constraint the measurement is held to
};

// Property-check bundle: exact identities, Poincare inequality, relative
// quantity asymptotics, profile shape and tails, Burgers derivative bounds,
// and the weight window. Deterministic given cfg.seed.
std::vector<CheckResult> verify_suite(const RunConfig& cfg);

std::string verify_report_csv(const std::vector<CheckResult>& results);

}  // namespace cwlab
