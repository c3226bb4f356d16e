#include "cwlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwlab/errors.hpp"

namespace cwlab {

Grid1D::Grid1D(double a, double b, int n_points) : xi_min(a), xi_max(b), n(n_points) {
  if (!(xi_min < 0.0 && 0.0 < xi_max))
    throw ConfigError("Grid1D: domain must satisfy xi_min < 0 < xi_max");
  if (n < 16) throw ConfigError("Grid1D: need at least 16 points");
}

std::vector<double> Grid1D::coords() const {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = xi(i);
  return x;
}

RunSetup build_setup(const RunConfig& rc) {
  validate(rc);
  const GasParams gas(rc.gamma);
  WaveConfig cfg = make_wave_config(gas, rc.v_plus, rc.u_plus, rc.v_m, rc.v_minus,
                                    rc.strength_cap);
  ShockProfile shock =
      cfg.delta_S > 0.0 ? ShockProfile::solve(cfg) : ShockProfile::constant(cfg);
  ApproxRarefaction rare(cfg);
  const double lambda = rc.lambda_weight ? *rc.lambda_weight : std::sqrt(cfg.delta_S);
  WeightFunction weight(shock, lambda);
  ShiftParams shift = shift_constant_M(cfg);

  const double half = cfg.delta_S > 0.0 ? 40.0 / cfg.delta_S : 40.0;
  const double xi_min = rc.xi_min ? *rc.xi_min : -half;
  const double xi_max = rc.xi_max ? *rc.xi_max : half + lambda2(cfg.v_m, gas) * rc.t_end;
  Grid1D grid(xi_min, xi_max, rc.n_cells);

  RunSetup setup{std::move(cfg), std::move(shock), std::move(rare), weight, shift, grid,
                 grid.coords(), rc.cfl};
  return setup;
}

InitialData initial_data(const RunSetup& setup, const std::vector<PerturbationSpec>& perts) {
  const std::size_t n = setup.xi.size();
  SimState s;
  s.t = 0.0;
  s.X = 0.0;
  // The same row evaluation as the shift quadrature and the diagnostics, so a
  // zero perturbation reproduces the background bit-exactly.
  const BackgroundRow row =
      background_row(0.0, 0.0, setup.xi, setup.shock, setup.rare, setup.weight);
  s.v = row.vbar;
  s.u = row.ubar;
  std::vector<double> dv(n, 0.0), du(n, 0.0);
  for (const PerturbationSpec& p : perts) {
    for (std::size_t i = 0; i < n; ++i) {
      const double z = (setup.xi[i] - p.center) / p.width;
      const double bump = p.amplitude * std::exp(-0.5 * z * z);
      if (p.target == PerturbationSpec::Target::v) dv[i] += bump;
      else du[i] += bump;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    s.v[i] += dv[i];
    s.u[i] += du[i];
    if (!(s.v[i] > 0.0))
      throw ConfigError("initial_data: perturbation drives v non-positive");
  }
  const double dxi = setup.grid.dxi();
  auto sq_l2 = [&](const std::vector<double>& f) {
    std::vector<double> s2(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) s2[i] = f[i] * f[i];
    return trapezoid(s2, dxi);
  };
  const double h1 = std::sqrt(sq_l2(dv) + sq_l2(du) + sq_l2(diff_row(dv, dxi)) +
                              sq_l2(diff_row(du, dxi)));
  return {std::move(s), h1};
}

void rhs(const SimState& s, const RunSetup& setup, Tendency& out) {
  const std::size_t n = s.v.size();
  out.dv.assign(n, 0.0);
  out.du.assign(n, 0.0);
  const double dxi = setup.grid.dxi();
  const double sigma = setup.cfg.sigma;
  const GasParams& gas = setup.cfg.gas;

  static thread_local std::vector<double> p;
  p.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(s.v[i] > 0.0)) throw BlowupError("rhs: non-positive specific volume on the grid");
    p[i] = pressure(s.v[i], gas);
  }
  const double inv2 = 1.0 / (2.0 * dxi);
  const double invh2 = 1.0 / (dxi * dxi);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double v_xi = (s.v[i + 1] - s.v[i - 1]) * inv2;
    const double u_xi = (s.u[i + 1] - s.u[i - 1]) * inv2;
    const double p_xi = (p[i + 1] - p[i - 1]) * inv2;
    const double vface_r = 0.5 * (s.v[i + 1] + s.v[i]);
    const double vface_l = 0.5 * (s.v[i] + s.v[i - 1]);
    const double visc =
        ((s.u[i + 1] - s.u[i]) / vface_r - (s.u[i] - s.u[i - 1]) / vface_l) * invh2;
    out.dv[i] = sigma * v_xi + u_xi;
    out.du[i] = sigma * u_xi - p_xi + visc;
  }
  out.dX = shift_rhs(s.t, s.X, s.v, setup.xi, setup.shock, setup.rare, setup.weight,
                     setup.shift)
               .xdot;
}

Tendency rhs(const SimState& s, const RunSetup& setup) {
  Tendency out;
  rhs(s, setup, out);
  return out;
}

double stable_dt(const SimState& s, const RunSetup& setup) {
  const double vmin = *std::min_element(s.v.begin(), s.v.end());
  if (!(vmin > 0.0)) throw BlowupError("stable_dt: non-positive specific volume");
  const double smax = setup.cfg.sigma + lambda2(vmin, setup.cfg.gas);
  const double dxi = setup.grid.dxi();
  return std::min(dxi / smax, 0.5 * dxi * dxi * vmin);
}

namespace {

void set_boundary(SimState& s, const RunSetup& setup, double t) {
  const std::size_t n = s.v.size();
  const CompositePoint cl = composite_wave(t, setup.xi.front(), s.X, setup.shock, setup.rare);
  const CompositePoint cr = composite_wave(t, setup.xi.back(), s.X, setup.shock, setup.rare);
  s.v[0] = cl.v;
  s.u[0] = cl.u;
  s.v[n - 1] = cr.v;
  s.u[n - 1] = cr.u;
}

void axpy_state(SimState& out, const SimState& base, const Tendency& k, double c) {
  const std::size_t n = base.v.size();
  out.t = base.t;
  out.X = base.X + c * k.dX;
  out.v.resize(n);
  out.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.v[i] = base.v[i] + c * k.dv[i];
    out.u[i] = base.u[i] + c * k.du[i];
  }
}

}  // namespace

void advance(SimState& s, const RunSetup& setup, double dt) {
  if (!(dt > 0.0)) throw StepError("advance: dt must be positive");
  const double bound = stable_dt(s, setup);
  if (dt > bound * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "advance: dt = " << dt << " exceeds the stable bound " << bound;
    throw StepError(os.str());
  }

  static thread_local Tendency k1, k2, k3, k4;
  static thread_local SimState stage;

  rhs(s, setup, k1);
  axpy_state(stage, s, k1, 0.5 * dt);
  stage.t = s.t + 0.5 * dt;
  set_boundary(stage, setup, stage.t);
  rhs(stage, setup, k2);

  axpy_state(stage, s, k2, 0.5 * dt);
  stage.t = s.t + 0.5 * dt;
  set_boundary(stage, setup, stage.t);
  rhs(stage, setup, k3);

  axpy_state(stage, s, k3, dt);
  stage.t = s.t + dt;
  set_boundary(stage, setup, stage.t);
  rhs(stage, setup, k4);

  const std::size_t n = s.v.size();
  for (std::size_t i = 0; i < n; ++i) {
    s.v[i] += dt / 6.0 * (k1.dv[i] + 2.0 * k2.dv[i] + 2.0 * k3.dv[i] + k4.dv[i]);
    s.u[i] += dt / 6.0 * (k1.du[i] + 2.0 * k2.du[i] + 2.0 * k3.du[i] + k4.du[i]);
  }
  s.X += dt / 6.0 * (k1.dX + 2.0 * k2.dX + 2.0 * k3.dX + k4.dX);
  s.t += dt;
  set_boundary(s, setup, s.t);
}

namespace {

std::string snapshot_name(double t) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "snapshot_t%g.csv", t);
  return buf;
}

void write_snapshot(const std::string& dir, const SimState& s, const RunSetup& setup) {
  const BackgroundRow row =
      background_row(s.t, s.X, setup.xi, setup.shock, setup.rare, setup.weight);
  const double dxi = setup.grid.dxi();
  const std::vector<double> h = effective_velocity(s.v, s.u, dxi);
  const std::vector<double> hbar = effective_velocity(row.vbar, row.ubar, dxi);
  std::ofstream out(std::filesystem::path(dir) / snapshot_name(s.t));
  out << "xi,v,u,h,vbar,ubar,hbar,a\n";
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    out << format_full(setup.xi[i]) << ',' << format_full(s.v[i]) << ',' << format_full(s.u[i])
        << ',' << format_full(h[i]) << ',' << format_full(row.vbar[i]) << ','
        << format_full(row.ubar[i]) << ',' << format_full(hbar[i]) << ','
        << format_full(row.a[i]) << '\n';
  }
}

struct MassTracker {
  bool primed = false;
  double t = 0.0, mass = 0.0, flux = 0.0;
};

DiagnosticRecord make_record(const SimState& s, const RunSetup& setup,
                             const BackgroundRow& row, MassTracker& mt) {
  const double dxi = setup.grid.dxi();
  DiagnosticRecord r;
  r.t = s.t;
  r.X = s.X;
  r.Xdot = shift_rhs(s.t, s.X, s.v, setup.xi, setup.shock, setup.rare, setup.weight,
                     setup.shift)
               .xdot;
  r.X_over_t = s.t > 0.0 ? s.X / s.t : 0.0;

  const std::size_t n = s.v.size();
  std::vector<double> dv(n), du(n);
  for (std::size_t i = 0; i < n; ++i) {
    dv[i] = s.v[i] - row.vbar[i];
    du[i] = s.u[i] - row.ubar[i];
  }
  auto sq_l2 = [&](const std::vector<double>& f) {
    std::vector<double> s2(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) s2[i] = f[i] * f[i];
    return trapezoid(s2, dxi);
  };
  const double l2v = sq_l2(dv);
  const double l2u = sq_l2(du);
  r.perturb_L2_v = std::sqrt(l2v);
  r.perturb_L2_u = std::sqrt(l2u);
  r.perturb_H1 =
      std::sqrt(l2v + l2u + sq_l2(diff_row(dv, dxi)) + sq_l2(diff_row(du, dxi)));
  for (std::size_t i = 0; i < n; ++i) {
    r.sup_v = std::max(r.sup_v, std::abs(dv[i]));
    r.sup_u = std::max(r.sup_u, std::abs(du[i]));
  }
  r.sup_exact =
      s.t > 0.0 ? sup_distance_to_exact(s.t, s.X, s.v, s.u, setup.xi, row, setup.cfg) : 0.0;
  r.went = weighted_relative_entropy(s.v, s.u, row, dxi, setup.cfg.gas);
  const StabilityFunctionals f =
      stability_functionals(s.v, s.u, row, dxi, setup.cfg, setup.weight.lambda());
  r.G_S = f.G_S;
  r.G_R = f.G_R;
  r.G1 = f.G1;
  r.D = f.D;
  r.D1 = f.D1;
  r.D2 = f.D2;
  const WaveErrorTerms werr = wave_error_terms(row, dxi, setup.cfg);
  r.F1_L2 = werr.F1_L2;
  r.F2_L2 = werr.F2_L2;
  r.F3_L2 = werr.F3_L2;

  // Mass balance between consecutive records: d/dt int v dxi vs the boundary
  // flux difference of sigma v + u.
  const double mass = trapezoid(s.v, dxi);
  const double flux = (setup.cfg.sigma * s.v.back() + s.u.back()) -
                      (setup.cfg.sigma * s.v.front() + s.u.front());
  if (mt.primed && s.t > mt.t) {
    r.mass_residual = (mass - mt.mass) / (s.t - mt.t) - 0.5 * (flux + mt.flux);
  }
  mt = {true, s.t, mass, flux};
  return r;
}

}  // namespace

RunResult run(const RunConfig& rc, const RunIO& io) {
  RunSetup setup = build_setup(rc);
  InitialData init = initial_data(setup, rc.perturbations);

  RunResult result;
  result.perturb_h1_initial = init.perturb_h1;
  SimState& s = init.state;

  std::ofstream diag;
  if (io.write_files) {
    std::filesystem::create_directories(io.out_dir);
    diag.open(std::filesystem::path(io.out_dir) / "diagnostics.csv");
    diag << diagnostic_csv_header() << '\n';
  }

  std::vector<double> snapshots = rc.snapshot_times;
  std::sort(snapshots.begin(), snapshots.end());
  snapshots.erase(std::unique(snapshots.begin(), snapshots.end()), snapshots.end());

  MassTracker mt;
  const double dxi = setup.grid.dxi();
  auto emit = [&](const SimState& state) {
    const BackgroundRow row =
        background_row(state.t, state.X, setup.xi, setup.shock, setup.rare, setup.weight);
    DiagnosticRecord r = make_record(state, setup, row, mt);
    result.records.push_back(r);
    result.interactions.push_back(wave_interaction_norms(row, dxi, setup.cfg));
    if (io.write_files) {
      diag << diagnostic_csv_line(r) << '\n';
      diag.flush();
    }
  };

  auto snapshot_due = [&](double t) {
    for (double ts : snapshots)
      if (std::abs(ts - t) <= 1e-9 * (1.0 + std::abs(ts))) return true;
    return false;
  };

  emit(s);
  if (io.write_files && snapshot_due(0.0)) write_snapshot(io.out_dir, s, setup);

  const double eps = 1e-12;
  try {
    double next_output = rc.output_interval;
    std::size_t next_snap = 0;
    while (next_snap < snapshots.size() && snapshots[next_snap] <= eps) ++next_snap;

    while (s.t < rc.t_end - eps) {
      double target = std::min(rc.t_end, next_output);
      if (next_snap < snapshots.size()) target = std::min(target, snapshots[next_snap]);
      const double dt = std::min(setup.cfl * stable_dt(s, setup), target - s.t);
      advance(s, setup, dt);

      // positivity and volume-band assertion after each accepted step
      for (double vi : s.v) {
        if (!std::isfinite(vi) || !(vi > 0.0))
          throw BlowupError("run: specific volume left the positive range");
        if (!(vi > setup.cfg.v_minus / 3.0 && vi < 3.0 * setup.cfg.v_plus))
          throw BlowupError("run: specific volume left (v_minus/3, 3 v_plus)");
      }
      for (double ui : s.u)
        if (!std::isfinite(ui)) throw BlowupError("run: velocity became non-finite");

      const bool at_target = s.t >= target - eps;
      if (at_target) {
        if (std::abs(s.t - next_output) <= eps) {
          emit(s);
          next_output += rc.output_interval;
        } else if (s.t >= rc.t_end - eps) {
          emit(s);
        }
        if (next_snap < snapshots.size() &&
            std::abs(s.t - snapshots[next_snap]) <= eps) {
          if (io.write_files) write_snapshot(io.out_dir, s, setup);
          ++next_snap;
        }
      }
    }
  } catch (const BlowupError&) {
    if (io.write_files) diag.flush();
    throw;
  }

  result.state = std::move(s);
  return result;
}

}  // namespace cwlab
