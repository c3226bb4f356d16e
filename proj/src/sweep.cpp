#include "cwlab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "cwlab/diagnostics.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/solver.hpp"

namespace cwlab {

namespace {

SweepRunSummary run_one(const RunConfig& base,
                        const std::vector<std::pair<std::string, std::string>>& overrides,
                        std::size_t index, const std::string& out_dir, bool write_files) {
  SweepRunSummary row;
  row.index = index;
  row.overrides = overrides;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "run_%03zu", index);
  row.subdir = buf;
  try {
    RunConfig cfg = base;
    cfg.sweep_lists.clear();
    for (const auto& [k, v] : overrides) apply_override(cfg, k, v);
    validate(cfg);
    RunIO io;
    if (write_files) {
      io.write_files = true;
      io.out_dir = (std::filesystem::path(out_dir) / row.subdir).string();
    }
    const RunResult res = run(cfg, io);
    const DiagnosticRecord& last = res.records.back();
    const DiagnosticRecord& first = res.records.front();
    row.ok = true;
    row.final_sup = std::max(last.sup_v, last.sup_u);
    row.final_abs_xdot = std::abs(last.Xdot);
    row.x_over_t = last.X_over_t;
    row.went_ratio = first.went > 0.0 ? last.went / first.went : 0.0;
    for (const DiagnosticRecord& r : res.records) {
      const double sup = std::max(r.sup_v, r.sup_u);
      if (sup > 1e-300)
        row.max_xdot_over_sup = std::max(row.max_xdot_over_sup, std::abs(r.Xdot) / sup);
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRunSummary> run_sweep(const RunConfig& base, const std::string& out_dir,
                                       bool write_files, unsigned jobs) {
  // cartesian product in key order (std::map keeps it deterministic)
  std::vector<std::pair<std::string, std::vector<std::string>>> axes(base.sweep_lists.begin(),
                                                                     base.sweep_lists.end());
  std::size_t total = 1;
  for (const auto& [k, vals] : axes) {
    if (vals.empty()) throw ConfigError("sweep: empty value list for key '" + k + "'");
    total *= vals.size();
  }

  std::vector<std::vector<std::pair<std::string, std::string>>> combos(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    std::vector<std::pair<std::string, std::string>> ov;
    for (const auto& [k, vals] : axes) {
      ov.emplace_back(k, vals[rem % vals.size()]);
      rem /= vals.size();
    }
    combos[idx] = std::move(ov);
  }

  std::vector<SweepRunSummary> rows(total);
  if (jobs <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i)
      rows[i] = run_one(base, combos[i], i, out_dir, write_files);
  } else {
    for (std::size_t start = 0; start < total; start += jobs) {
      const std::size_t stop = std::min(total, start + jobs);
      std::vector<std::future<SweepRunSummary>> futs;
      for (std::size_t i = start; i < stop; ++i)
        futs.push_back(std::async(std::launch::async, [&, i] {
          return run_one(base, combos[i], i, out_dir, write_files);
        }));
      for (std::size_t i = start; i < stop; ++i) rows[i] = futs[i - start].get();
    }
  }

  if (write_files) {
    std::filesystem::create_directories(out_dir);
    std::ofstream out(std::filesystem::path(out_dir) / "sweep_summary.csv");
    out << sweep_summary_csv(rows);
  }
  return rows;
}

std::string sweep_summary_csv(const std::vector<SweepRunSummary>& rows) {
  std::ostringstream os;
  os << "index,subdir,overrides,status,final_sup,final_abs_xdot,x_over_t,went_ratio,"
        "max_xdot_over_sup,error\n";
  for (const SweepRunSummary& r : rows) {
    std::string ov;
    for (const auto& [k, v] : r.overrides) {
      if (!ov.empty()) ov += ';';
      ov += k + "=" + v;
    }
    os << r.index << ',' << r.subdir << ",\"" << ov << "\"," << (r.ok ? "OK" : "FAILED") << ','
       << format_full(r.final_sup) << ',' << format_full(r.final_abs_xdot) << ','
       << format_full(r.x_over_t) << ',' << format_full(r.went_ratio) << ','
       << format_full(r.max_xdot_over_sup) << ",\"" << r.error << "\"\n";
  }
  return os.str();
}

}  // namespace cwlab
