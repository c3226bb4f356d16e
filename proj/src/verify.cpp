#include "cwlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cwlab/diagnostics.hpp"
#include "cwlab/profiles.hpp"
#include "cwlab/shift.hpp"
#include "cwlab/solver.hpp"

namespace cwlab {

namespace {

struct LineFit {
  double slope, intercept;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  return {(n * sxy - sx * sy) / denom, (sy * sxx - sx * sxy) / denom};
}

double profile_tail_rate(const WaveConfig& cfg) {
  // linearization of the profile ODE at v_plus
  const PressureDerivs pd = pressure_derivs(cfg.v_plus, cfg.gas);
  return -(cfg.v_plus / cfg.sigma) * (cfg.sigma * cfg.sigma + pd.dp);
}

WaveConfig pure_shock_config(double gamma, double v_plus, double v_m) {
  return make_wave_config(GasParams(gamma), v_plus, 0.0, v_m, v_m, /*strength_cap=*/10.0);
}

}  // namespace

std::vector<CheckResult> verify_suite(const RunConfig& rc) {
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool pass, double measured, const std::string& bound) {
    out.push_back({name, pass, measured, bound});
  };

  const GasParams gas(rc.gamma);

  // --- exact identities -----------------------------------------------------
  {
    std::mt19937_64 rng(rc.seed + 1);
    std::uniform_real_distribution<double> zw(-10.0, 10.0), sg(0.5, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
      const double z = zw(rng), w = zw(rng), s = sg(rng);
      const double r = quadratic_identity_residual(z, w, s) / (1.0 + z * z + w * w);
      worst = std::max(worst, r);
    }
    add("quadratic_identity", worst < 1e-12, worst, "< 1e-12 relative");
  }
  {
    double worst = 0.0;
    for (double g : {1.4, 5.0 / 3.0, 2.0, 2.5}) {
      for (double vm : {0.5, 0.8, 0.9, 1.0, 1.2}) {
        const WaveConfig cfg = pure_shock_config(g, vm * 1.1, vm);
        const ShiftParams sp = shift_constant_M(cfg);
        worst = std::max(worst, std::abs(sp.M - sp.M_alt) / std::abs(sp.M));
      }
    }
    add("shift_gain_consistency", worst < 1e-13, worst, "< 1e-13 relative");
  }
  {
    std::mt19937_64 rng(rc.seed + 2);
    std::uniform_real_distribution<double> vu(0.3, 3.0), su(0.5, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const GasParams g(1.2 + 1.8 * (i % 10) / 10.0);
      const double vp = vu(rng);
      const double vm = vp * (0.6 + 0.39 * su(rng) / 2.0);
      const double up = vu(rng) - 1.5;
      const double sigma = shock_speed(vm, vp, g);
      const double um = s2_connect(vp, up, vm, g);
      const double r1 = std::abs(-sigma * (vp - vm) - (up - um));
      const double r2 = std::abs(-sigma * (up - um) + pressure(vp, g) - pressure(vm, g));
      worst = std::max(worst, std::max(r1, r2));
    }
    add("rankine_hugoniot", worst < 1e-12, worst, "< 1e-12");
  }

  // --- Poincare inequality ---------------------------------------------------
  {
    const std::size_t n = 10001;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<double>(i) / (n - 1);
    const PoincareResult pr = poincare_check(f);
    const double dev = std::max(std::abs(pr.lhs - 1.0 / 12.0), std::abs(pr.rhs - 1.0 / 12.0));
    add("poincare_linear_equality", dev < 1e-8, dev, "lhs = rhs = 1/12 within 1e-8");
  }
  {
    std::mt19937_64 rng(rc.seed + 3);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    const std::size_t n = 4097;
    double min_margin = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
      double c[10];
      for (double& ck : c) ck = coef(rng);
      std::vector<double> f(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double y = static_cast<double>(i) / (n - 1);
        double s = 0.0;
        for (int k = 0; k < 10; ++k) s += c[k] * std::sin((k + 1) * M_PI * y);
        f[i] = s;
      }
      min_margin = std::min(min_margin, poincare_check(f).margin);
    }
    add("poincare_random_margin", min_margin >= -1e-8, min_margin, ">= -1e-8");
  }

  // --- relative quantity asymptotics -----------------------------------------
  {
    double worst_p = 0.0, worst_q = 0.0;
    for (double g : {1.4, 5.0 / 3.0, 2.0}) {
      const GasParams gp(g);
      for (double w : {0.8, 1.0, 1.2}) {
        const double pw = pressure(w, gp);
        const double lim_p = (g + 1.0) / (2.0 * g * pw);
        const double lim_q = std::exp((-1.0 / g - 1.0) * std::log(pw)) / (2.0 * g);
        for (double v : {w - 1e-3, w + 1e-3}) {
          const double dp2 = std::pow(pressure(v, gp) - pw, 2);
          worst_p = std::max(worst_p, std::abs(relative_pressure(v, w, gp) / dp2 / lim_p - 1.0));
          worst_q = std::max(worst_q,
                             std::abs(relative_internal_energy(v, w, gp) / dp2 / lim_q - 1.0));
        }
      }
    }
    add("relative_pressure_ratio", worst_p < 0.01, worst_p, "within 1% of (g+1)/(2g p(w))");
    add("relative_energy_ratio", worst_q < 0.01, worst_q, "within 1% of p(w)^(-1/g-1)/(2g)");
  }
  {
    std::mt19937_64 rng(rc.seed + 4);
    std::uniform_real_distribution<double> vw(0.1, 10.0);
    double mn = 1e300;
    for (int i = 0; i < 10000; ++i) {
      const double v = vw(rng), w = vw(rng);
      mn = std::min(mn, std::min(relative_pressure(v, w, gas), relative_internal_energy(v, w, gas)));
    }
    add("relative_quantities_nonneg", mn >= -1e-12, mn, ">= 0 (up to roundoff)");
  }
  {
    // fitted constant of |v-w|^2 <= C min(Q(v|w), p(v|w)) on the sampled region
    std::mt19937_64 rng(rc.seed + 5);
    const double v_ref = 0.8;
    std::uniform_real_distribution<double> wv(0.02, 2.0 * v_ref), vv(0.02, 3.0 * v_ref);
    double c_obs = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double w = wv(rng), v = vv(rng);
      if (std::abs(v - w) < 1e-8) continue;
      const double d2 = (v - w) * (v - w);
      c_obs = std::max(c_obs, d2 / relative_internal_energy(v, w, gas));
      c_obs = std::max(c_obs, d2 / relative_pressure(v, w, gas));
    }
    add("relative_quantities_region_constant", std::isfinite(c_obs) && c_obs < 100.0, c_obs,
        "finite (< 100)");
  }

  // --- shock profile ----------------------------------------------------------
  {
    double min_dv = 1e300, min_vxi = 1e300, max_uxi = -1e300;
    double worst_end = 0.0, worst_rate = 0.0;
    bool rate_ok = true;
    for (double frac : {0.95, 0.9, 0.8}) {
      const WaveConfig cfg = pure_shock_config(rc.gamma, rc.v_plus, frac * rc.v_plus);
      const ShockProfile prof = ShockProfile::solve(cfg);
      const std::vector<double>& vals = prof.values();
      for (std::size_t k = 0; k + 1 < vals.size(); ++k)
        min_dv = std::min(min_dv, vals[k + 1] - vals[k]);
      for (double v : vals) {
        const ShockProfile::Point pt = prof.point_at(v);
        min_vxi = std::min(min_vxi, pt.v_xi);
        max_uxi = std::max(max_uxi, pt.u_xi);
      }
      worst_end = std::max(worst_end, std::abs(vals.front() - cfg.v_m));
      worst_end = std::max(worst_end, std::abs(vals.back() - cfg.v_plus));

      std::vector<double> xs, ys;
      for (std::size_t k = 0; k < vals.size(); ++k) {
        const double err = cfg.v_plus - vals[k];
        if (err > 1e-8 && err < 1e-4) {
          xs.push_back(prof.value_xi(k));
          ys.push_back(std::log(err));
        }
      }
      const double slope = fit_line(xs, ys).slope;
      const double ratio = slope / profile_tail_rate(cfg);
      worst_rate = std::max(worst_rate, std::max(ratio, 1.0 / ratio));
      rate_ok = rate_ok && ratio > 0.5 && ratio < 2.0;
    }
    add("profile_strict_monotone", min_dv > 0.0 && min_vxi > 0.0 && max_uxi < 0.0, min_dv,
        "v increasing, u decreasing at every node");
    add("profile_endpoints", worst_end < 1e-10, worst_end, "< 1e-10");
    add("profile_tail_rate", rate_ok, worst_rate, "within factor 2 of the linearized rate");
  }

  // --- Burgers bounds ---------------------------------------------------------
  {
    const WaveConfig cfg =
        make_wave_config(gas, rc.v_plus, rc.u_plus, rc.v_m, rc.v_minus, rc.strength_cap);
    const ApproxRarefaction rare(cfg);
    const double m = 0.5 * (rare.w_m() - rare.w_minus());
    double worst = 0.0, min_wx = 1e300;
    for (double s : {1.0, 1.5, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0}) {
      const double xc = 0.5 * (rare.w_m() + rare.w_minus()) * s;
      ApproxRarefaction::Cursor cur(rare);
      double sup = 0.0;
      for (int i = 0; i <= 4000; ++i) {
        const double x = xc - 40.0 + 80.0 * i / 4000.0;
        const ApproxRarefaction::W w = cur.next(s, x);
        sup = std::max(sup, w.w_x);
        min_wx = std::min(min_wx, w.w_x);
      }
      if (m > 0.0) worst = std::max(worst, sup / std::min(m, 1.0 / s));
    }
    add("burgers_slope_positive", min_wx >= 0.0, min_wx, ">= 0");
    add("burgers_slope_bound", worst <= 1.0 + 1e-6, worst,
        "sup w_x <= min((w_m - w_minus)/2, 1/s) (1 + 1e-6)");
  }
  {
    const WaveConfig cfg =
        make_wave_config(gas, rc.v_plus, rc.u_plus, rc.v_m, rc.v_minus, rc.strength_cap);
    const ApproxRarefaction rare(cfg);
    std::mt19937_64 rng(rc.seed + 6);
    std::uniform_real_distribution<double> tx(-20.0, 20.0), ts(0.5, 50.0);
    double worst = 0.0;
    const double hfd = 1e-5;
    for (int i = 0; i < 200; ++i) {
      const double s = ts(rng), x = tx(rng);
      const ApproxRarefaction::W w = rare.burgers_w(s, x);
      const double wt =
          (rare.burgers_w(s + hfd, x).w - rare.burgers_w(s - hfd, x).w) / (2.0 * hfd);
      worst = std::max(worst, std::abs(wt + w.w * w.w_x));
    }
    add("burgers_pde_residual", worst < 1e-5, worst, "|w_t + w w_x| < 1e-5");
  }

  // --- weight window ----------------------------------------------------------
  {
    const WaveConfig cfg =
        make_wave_config(gas, rc.v_plus, rc.u_plus, rc.v_m, rc.v_minus, rc.strength_cap);
    const double lambda = rc.lambda_weight ? *rc.lambda_weight : std::sqrt(cfg.delta_S);
    const double margin = lambda - cfg.delta_S;
    add("weight_window", cfg.delta_S <= 0.0 || margin > 0.0, margin,
        "weight amplitude lambda must exceed the shock strength delta_S");
  }

  // --- derivative identities ---------------------------------------------------
  {
    std::mt19937_64 rng(rc.seed + 7);
    std::uniform_real_distribution<double> vu(0.3, 3.0);
    double worst_q = 0.0, worst_a = 0.0;
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
      const double v = vu(rng);
      const double qd = (internal_energy(v + h, gas) - internal_energy(v - h, gas)) / (2.0 * h);
      worst_q = std::max(worst_q, std::abs(qd + pressure(v, gas)) / pressure(v, gas));
      const double ad = (lambda1_antiderivative(v + h, gas) - lambda1_antiderivative(v - h, gas)) /
                        (2.0 * h);
      worst_a = std::max(worst_a, std::abs(ad - lambda1(v, gas)) / std::abs(lambda1(v, gas)));
    }
    add("energy_derivative", worst_q < 1e-7, worst_q, "Q' = -p within 1e-7 relative");
    add("invariant_derivative", worst_a < 1e-7, worst_a, "A' = lambda1 within 1e-7 relative");
  }

  return out;
}

std::string verify_report_csv(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << "name,status,measured,bound\n";
  for (const CheckResult& r : results)
    os << r.name << ',' << (r.pass ? "PASS" : "FAIL") << ',' << format_full(r.measured) << ",\""
       << r.bound << "\"\n";
  return os.str();
}

}  // namespace cwlab
