#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cwlab/diagnostics.hpp"
#include "cwlab/errors.hpp"
#include "cwlab/solver.hpp"
#include "cwlab/sweep.hpp"
#include "cwlab/verify.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> sets;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--config", opts->config_path, "flat key = value configuration file");
  cmd->add_option("--out", opts->out_dir, "output directory")->capture_default_str();
  cmd->add_option("--set", opts->sets, "override, key=value (repeatable)");
}

cwlab::RunConfig make_config(const CommonOpts& opts) {
  cwlab::RunConfig cfg = opts.config_path.empty() ? cwlab::RunConfig{}
                                                  : cwlab::load_config_file(opts.config_path);
  for (const std::string& kv : opts.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw cwlab::ConfigError("--set expects key=value, got '" + kv + "'");
    cwlab::apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  cwlab::validate(cfg);
  return cfg;
}

void cmd_profile(const CommonOpts& opts) {
  const cwlab::RunConfig cfg = make_config(opts);
  const cwlab::RunSetup setup = cwlab::build_setup(cfg);

  double lo = setup.shock.xi_left();
  double hi = setup.shock.xi_right();
  if (cfg.xi_min) lo = *cfg.xi_min;
  if (cfg.xi_max) hi = *cfg.xi_max;
  if (!(hi > lo)) {
    lo = -10.0;
    hi = 10.0;
  }

  std::filesystem::create_directories(opts.out_dir);
  std::ofstream out(std::filesystem::path(opts.out_dir) / "profile.csv");
  out << "xi,v,u,h,v_xi,a\n";
  const int n = cfg.n_cells;
  for (int i = 0; i < n; ++i) {
    const double xi = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    const cwlab::ShockProfile::Point pt = setup.shock.eval(xi);
    const cwlab::WeightFunction::A aw = setup.weight.from_point(pt);
    out << cwlab::format_full(xi) << ',' << cwlab::format_full(pt.v) << ','
        << cwlab::format_full(pt.u) << ',' << cwlab::format_full(pt.h) << ','
        << cwlab::format_full(pt.v_xi) << ',' << cwlab::format_full(aw.a) << '\n';
  }
  std::cout << "wrote profile.csv (" << n << " rows)\n";
}

void cmd_rarefaction(const CommonOpts& opts) {
  const cwlab::RunConfig cfg = make_config(opts);
  const cwlab::RunSetup setup = cwlab::build_setup(cfg);

  std::vector<double> times = cfg.snapshot_times;
  if (times.empty()) times = {1.0, 10.0, 100.0};

  std::filesystem::create_directories(opts.out_dir);
  std::ofstream out(std::filesystem::path(opts.out_dir) / "rarefaction.csv");
  out << "t,x,w,w_x,v,u,v_x,u_x,v_exact,u_exact\n";
  const int n = cfg.n_cells;
  for (double t : times) {
    const double lo = setup.rare.w_minus() * (1.0 + t) - 20.0;
    const double hi = setup.rare.w_m() * (1.0 + t) + 20.0;
    for (int i = 0; i < n; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
      const cwlab::ApproxRarefaction::W w = setup.rare.burgers_w(1.0 + t, x);
      const cwlab::ApproxRarefaction::Point p = setup.rare.point_from_w(w);
      const cwlab::State ex = t > 0.0 ? cwlab::exact_rarefaction(t, x, setup.cfg)
                                      : cwlab::State{setup.cfg.v_minus, setup.cfg.u_minus};
      out << cwlab::format_full(t) << ',' << cwlab::format_full(x) << ','
          << cwlab::format_full(w.w) << ',' << cwlab::format_full(w.w_x) << ','
          << cwlab::format_full(p.v) << ',' << cwlab::format_full(p.u) << ','
          << cwlab::format_full(p.v_x) << ',' << cwlab::format_full(p.u_x) << ','
          << cwlab::format_full(ex.v) << ',' << cwlab::format_full(ex.u) << '\n';
    }
  }
  std::cout << "wrote rarefaction.csv\n";
}

void cmd_simulate(const CommonOpts& opts) {
  const cwlab::RunConfig cfg = make_config(opts);
  cwlab::RunIO io;
  io.out_dir = opts.out_dir;
  io.write_files = true;
  const cwlab::RunResult res = cwlab::run(cfg, io);
  const cwlab::DiagnosticRecord& last = res.records.back();
  std::cout << "initial perturbation H1 norm: " << res.perturb_h1_initial << '\n'
            << "records: " << res.records.size() << '\n'
            << "final t = " << last.t << ", X = " << last.X << ", sup_v = " << last.sup_v
            << ", sup_u = " << last.sup_u << '\n';
}

int cmd_verify(const CommonOpts& opts) {
  const cwlab::RunConfig cfg = make_config(opts);
  const std::vector<cwlab::CheckResult> results = cwlab::verify_suite(cfg);
  std::cout << cwlab::verify_report_csv(results);
  std::filesystem::create_directories(opts.out_dir);
  std::ofstream out(std::filesystem::path(opts.out_dir) / "verify_report.csv");
  out << cwlab::verify_report_csv(results);
  bool all = true;
  for (const cwlab::CheckResult& r : results) all = all && r.pass;
  return all ? 0 : 3;
}

int cmd_sweep(const CommonOpts& opts, unsigned jobs) {
  const cwlab::RunConfig cfg = make_config(opts);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto rows = cwlab::run_sweep(cfg, opts.out_dir, /*write_files=*/true, jobs);
  std::size_t failed = 0;
  for (const auto& r : rows)
    if (!r.ok) ++failed;
  std::cout << "sweep: " << rows.size() << " runs, " << failed << " failed\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite shock/rarefaction wave laboratory"};
  app.require_subcommand(1);
  app.footer(
      "Config keys (flat `key = value`, '#' comments; also usable with --set):\n"
      "  gamma (5/3)            adiabatic exponent, > 1\n"
      "  v_plus, u_plus (1, 0)  right end state\n"
      "  v_m (0.9)              intermediate volume; delta_S = p(v_m) - p(v_plus)\n"
      "  v_minus (0.8)          left volume; delta_R = v_m - v_minus\n"
      "  lambda_weight (sqrt(delta_S))  weight amplitude, must exceed delta_S\n"
      "  xi_min, xi_max         domain (default -40/delta_S, 40/delta_S + lambda2(v_m) t_end)\n"
      "  n_cells (1024)         grid points\n"
      "  cfl (0.4)              fraction of the stable step\n"
      "  t_end (100)            final time\n"
      "  output_interval (0.5)  diagnostics cadence\n"
      "  snapshot_times         comma list of snapshot times\n"
      "  perturbation.N.{kind,target,amplitude,center,width}\n"
      "                         gaussian bumps A exp(-(xi-c)^2/(2 w^2)) on v or u\n"
      "  seed (0)               seed for the randomized verify checks\n"
      "  strength_cap (0.25), amplitude_cap (0.1)  validation caps\n"
      "  sweep.<key> = v1, v2, ...  cartesian sweep lists (sweep subcommand)\n");

  CommonOpts profile_opts, rare_opts, sim_opts, verify_opts, sweep_opts;
  unsigned sweep_jobs = 0;

  add_common(app.add_subcommand("profile", "tabulate the viscous shock profile and weight"),
             &profile_opts);
  add_common(app.add_subcommand("rarefaction", "tabulate smooth vs exact rarefaction"),
             &rare_opts);
  add_common(app.add_subcommand("simulate", "integrate the perturbed composite wave"),
             &sim_opts);
  add_common(app.add_subcommand("verify", "run the property-check suite"), &verify_opts);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "expand sweep.<key> lists and run each");
  add_common(sweep_cmd, &sweep_opts);
  sweep_cmd->add_option("--jobs", sweep_jobs, "parallel runs (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("profile")) cmd_profile(profile_opts);
    else if (app.got_subcommand("rarefaction")) cmd_rarefaction(rare_opts);
    else if (app.got_subcommand("simulate")) cmd_simulate(sim_opts);
    else if (app.got_subcommand("verify")) return cmd_verify(verify_opts);
    else if (app.got_subcommand("sweep")) return cmd_sweep(sweep_opts, sweep_jobs);
  } catch (const cwlab::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const cwlab::BlowupError& e) {
    std::cerr << "numerical blow-up: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
