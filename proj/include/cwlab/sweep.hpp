#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwlab/config.hpp"

namespace cwlab {

struct SweepRunSummary {
  std::size_t index = 0;
  std::string subdir;
  std::vector<std::pair<std::string, std::string>> overrides;
  bool ok = false;
  std::string error;
  double final_sup = 0.0;       // max of the final sup_v / sup_u
  double final_abs_xdot = 0.0;
  double x_over_t = 0.0;
  double went_ratio = 0.0;      // went(t_end) / went(0)
  double max_xdot_over_sup = 0.0;
};

// Expands the cartesian product of the sweep.<key> lists of `base`, runs each
// combination independently (optionally in parallel), and returns one summary
// row per run in grid order. Individual failures are recorded and do not stop
// the sweep. With write_files, per-run outputs land in out_dir/run_<idx>/ and
// the summary in out_dir/sweep_summary.csv.
std::vector<SweepRunSummary> run_sweep(const RunConfig& base, const std::string& out_dir,
                                       bool write_files, unsigned jobs = 1);

std::string sweep_summary_csv(const std::vector<SweepRunSummary>& rows);

}  // namespace cwlab
