#include "cwlab/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwlab/errors.hpp"
#include "cwlab/solver.hpp"
#include "cwlab/sweep.hpp"
#include "cwlab/verify.hpp"
#include "doctest.h"

using namespace cwlab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("empty config gives the defaults") {
  const RunConfig cfg = parse_config("");
  CHECK(cfg.gamma == doctest::Approx(5.0 / 3.0));
  CHECK(cfg.v_plus == 1.0);
  CHECK(cfg.v_m == 0.9);
  CHECK(cfg.v_minus == 0.8);
  CHECK(cfg.n_cells == 1024);
  CHECK(cfg.cfl == 0.4);
  CHECK(cfg.t_end == 100.0);
  CHECK(cfg.output_interval == 0.5);
  CHECK(!cfg.lambda_weight);
  CHECK(cfg.perturbations.empty());
}

TEST_CASE("comments, blank lines and overrides") {
  const RunConfig cfg = parse_config(
      "# a comment\n"
      "\n"
      "gamma = 1.4   # trailing comment\n"
      "v_m = 0.95\n"
      "gamma = 2.0\n");
  CHECK(cfg.gamma == 2.0);
  CHECK(cfg.v_m == 0.95);
}

TEST_CASE("validation errors name the key and the constraint") {
  CHECK_THROWS_WITH_AS(parse_config("gamma = 0.9\n"),
                       doctest::Contains("gamma must exceed 1"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("v_m = 1.1\nv_plus = 1.0\n"),
                       doctest::Contains("v_minus < v_m < v_plus"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("no_such_key = 1\n"), doctest::Contains("unknown key"),
                       ConfigError);
  CHECK_THROWS_AS(parse_config("n_cells = 4\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("cfl = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("gamma = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("gamma\n"), ConfigError);
}

TEST_CASE("perturbation blocks and lists") {
  const RunConfig cfg = parse_config(
      "perturbation.0.kind = gaussian\n"
      "perturbation.0.target = v\n"
      "perturbation.0.amplitude = 0.01\n"
      "perturbation.0.center = -3\n"
      "perturbation.0.width = 2.5\n"
      "perturbation.1.target = u\n"
      "perturbation.1.amplitude = -0.02\n"
      "snapshot_times = 1, 5, 25\n");
  REQUIRE(cfg.perturbations.size() == 2);
  CHECK(cfg.perturbations[0].target == PerturbationSpec::Target::v);
  CHECK(cfg.perturbations[0].amplitude == 0.01);
  CHECK(cfg.perturbations[0].center == -3.0);
  CHECK(cfg.perturbations[0].width == 2.5);
  CHECK(cfg.perturbations[1].target == PerturbationSpec::Target::u);
  REQUIRE(cfg.snapshot_times.size() == 3);
  CHECK(cfg.snapshot_times[2] == 25.0);

  CHECK_THROWS_AS(parse_config("perturbation.0.kind = square\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("perturbation.0.width = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("perturbation.0.amplitude = 0.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("perturbation.0.target = w\n"), ConfigError);
}

TEST_CASE("apply_override behaves like a config line") {
  RunConfig cfg = parse_config("");
  apply_override(cfg, "v_m", "0.95");
  apply_override(cfg, "perturbation.0.amplitude", "0.005");
  validate(cfg);
  CHECK(cfg.v_m == 0.95);
  CHECK(cfg.perturbations.at(0).amplitude == 0.005);
  CHECK_THROWS_AS(apply_override(cfg, "bogus", "1"), ConfigError);
}

TEST_CASE("sweep lists parse and reject unknown inner keys") {
  const RunConfig cfg = parse_config("sweep.n_cells = 512, 1024\nsweep.v_m = 0.9, 0.95\n");
  CHECK(cfg.sweep_lists.size() == 2);
  CHECK(cfg.sweep_lists.at("n_cells").size() == 2);
  CHECK_THROWS_AS(parse_config("sweep.bogus = 1,2\n"), ConfigError);
}

TEST_CASE("verify suite passes on the default configuration") {
  const RunConfig cfg = parse_config("");
  const std::vector<CheckResult> results = verify_suite(cfg);
  CHECK(results.size() >= 15);
  for (const CheckResult& r : results) {
    INFO(r.name);
    CHECK(r.pass);
  }
  // one report line per check plus the header
  const std::string report = verify_report_csv(results);
  const std::size_t lines = std::count(report.begin(), report.end(), '\n');
  CHECK(lines == results.size() + 1);
}

TEST_CASE("verify flags a weight window fault") {
  RunConfig cfg = parse_config("lambda_weight = 0.01\n");  // below delta_S of the baseline
  const std::vector<CheckResult> results = verify_suite(cfg);
  bool found = false;
  for (const CheckResult& r : results) {
    if (r.name == "weight_window") {
      found = true;
      CHECK(!r.pass);
      CHECK(r.bound.find("lambda must exceed the shock strength delta_S") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("a 2x2 sweep produces four summary rows") {
  RunConfig base = parse_config(
      "t_end = 0.5\n"
      "n_cells = 128\n"
      "xi_min = -30\n"
      "xi_max = 30\n"
      "v_m = 1.0\n"
      "v_minus = 1.0\n"
      "sweep.cfl = 0.3, 0.4\n"
      "sweep.n_cells = 128, 192\n");
  const auto rows = run_sweep(base, "", /*write_files=*/false, /*jobs=*/2);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    INFO(r.error);
    CHECK(r.ok);
  }
  const std::string csv = sweep_summary_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("a one-point sweep equals a direct run") {
  RunConfig base = parse_config(
      "t_end = 0.5\n"
      "n_cells = 128\n"
      "xi_min = -30\n"
      "xi_max = 30\n"
      "v_m = 1.0\n"
      "v_minus = 1.0\n"
      "perturbation.0.amplitude = 0.01\n"
      "perturbation.0.width = 2\n"
      "sweep.cfl = 0.4\n");
  const auto rows = run_sweep(base, "", false, 1);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].ok);

  RunConfig direct = base;
  direct.sweep_lists.clear();
  const RunResult res = run(direct);
  const DiagnosticRecord& last = res.records.back();
  CHECK(rows[0].final_sup == std::max(last.sup_v, last.sup_u));
  CHECK(rows[0].x_over_t == last.X_over_t);
}

TEST_CASE("sweep records individual failures and continues") {
  RunConfig base = parse_config(
      "t_end = 0.1\n"
      "n_cells = 128\n"
      "xi_min = -30\n"
      "xi_max = 30\n"
      "v_m = 1.0\n"
      "v_minus = 1.0\n"
      "sweep.gamma = 0.5, 1.4\n");  // first value is invalid
  const auto rows = run_sweep(base, "", false, 1);
  REQUIRE(rows.size() == 2);
  CHECK(!rows[0].ok);
  CHECK(rows[0].error.find("gamma") != std::string::npos);
  CHECK(rows[1].ok);
}

TEST_CASE("sweep summaries are reproducible") {
  RunConfig base = parse_config(
      "t_end = 0.25\n"
      "n_cells = 128\n"
      "xi_min = -30\n"
      "xi_max = 30\n"
      "v_m = 1.0\n"
      "v_minus = 1.0\n"
      "perturbation.0.amplitude = 0.01\n"
      "perturbation.0.width = 2\n"
      "sweep.cfl = 0.3, 0.4\n");
  const std::string a = sweep_summary_csv(run_sweep(base, "", false, 2));
  const std::string b = sweep_summary_csv(run_sweep(base, "", false, 1));
  CHECK(a == b);
}

TEST_CASE("degenerate shock strength disables the shift") {
  RunConfig rc = parse_config(
      "t_end = 0.5\n"
      "n_cells = 128\n"
      "xi_min = -30\n"
      "xi_max = 30\n"
      "v_m = 1.0\n"
      "v_minus = 0.95\n"  // pure rarefaction
      "perturbation.0.amplitude = 0.01\n"
      "perturbation.0.width = 2\n");
  const RunResult res = run(rc);
  for (const DiagnosticRecord& r : res.records) {
    CHECK(r.Xdot == 0.0);
    CHECK(r.X == 0.0);
    CHECK(r.G1 == 0.0);
  }
}

TEST_CASE("verify report has a fixed column count") {
  const std::vector<CheckResult> results = verify_suite(parse_config(""));
  std::istringstream is(verify_report_csv(results));
  std::string line;
  while (std::getline(is, line)) {
    std::size_t commas = 0;
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++commas;
    }
    CHECK(commas == 3);
  }
}

TEST_CASE("identical configs write byte-identical diagnostics files") {
  RunConfig cfg = parse_config(
      "t_end = 1\n"
      "n_cells = 256\n"
      "output_interval = 0.25\n"
      "perturbation.0.amplitude = 0.01\n"
      "perturbation.0.width = 3\n"
      "snapshot_times = 0.5\n");
  const auto dir = std::filesystem::temp_directory_path() / "cwlab_det_test";
  std::filesystem::remove_all(dir);
  RunIO a{(dir / "a").string(), true};
  RunIO b{(dir / "b").string(), true};
  run(cfg, a);
  run(cfg, b);
  const std::string da = slurp(dir / "a" / "diagnostics.csv");
  const std::string db = slurp(dir / "b" / "diagnostics.csv");
  CHECK(!da.empty());
  CHECK(da == db);
  CHECK(slurp(dir / "a" / "snapshot_t0.5.csv") == slurp(dir / "b" / "snapshot_t0.5.csv"));
  std::filesystem::remove_all(dir);
}
