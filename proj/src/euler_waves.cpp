#include "cwlab/euler_waves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

[[noreturn]] void config_fail(const std::string& msg) { throw ConfigError(msg); }

}  // namespace

double shock_speed(double v_m, double v_plus, const GasParams& g) {
  if (!(v_m > 0.0) || !(v_m < v_plus))
    config_fail("shock_speed: a 2-shock requires 0 < v_m < v_plus");
  return std::sqrt((pressure(v_m, g) - pressure(v_plus, g)) / (v_plus - v_m));
}

double s2_connect(double v_plus, double u_plus, double v_m, const GasParams& g) {
  if (!(v_m > 0.0) || !(v_m <= v_plus))
    config_fail("s2_connect: a 2-shock requires 0 < v_m <= v_plus");
  if (v_m == v_plus) return u_plus;
  return u_plus + shock_speed(v_m, v_plus, g) * (v_plus - v_m);
}

double r1_connect(double v_m, double u_m, double v_minus, const GasParams& g) {
  if (!(v_minus > 0.0) || !(v_minus <= v_m))
    config_fail("r1_connect: a 1-rarefaction requires 0 < v_minus <= v_m");
  return u_m + (lambda1_antiderivative(v_m, g) - lambda1_antiderivative(v_minus, g));
}

State exact_rarefaction(double t, double x, const WaveConfig& cfg) {
  if (!(t > 0.0)) throw std::domain_error("exact_rarefaction: the fan is self-similar, t > 0");
  const GasParams& g = cfg.gas;
  const double wl = lambda1(cfg.v_minus, g);
  const double wr = lambda1(cfg.v_m, g);
  const double s = x / t;
  if (s <= wl) return {cfg.v_minus, cfg.u_minus};
  if (s >= wr) return {cfg.v_m, cfg.u_m};
  // invert lambda1: v = (gamma / w^2)^(1/(gamma+1))
  const double v = std::exp(std::log(g.gamma / (s * s)) / (g.gamma + 1.0));
  const double u =
      cfg.u_m + lambda1_antiderivative(cfg.v_m, g) - lambda1_antiderivative(v, g);
  return {v, u};
}

State riemann_intermediate(double v_minus, double u_minus, double v_plus, double u_plus,
                           const GasParams& g) {
  if (!(v_minus > 0.0) || !(v_minus <= v_plus))
    config_fail("riemann_intermediate: requires 0 < v_minus <= v_plus");

  const double z_target = riemann_invariant_z1(v_minus, u_minus, g);
  // f(v) = z1(v, s2_connect(v)) - z_target; its root in [v_minus, v_plus] is v_m.
  auto f = [&](double v) {
    return riemann_invariant_z1(v, s2_connect(v_plus, u_plus, v, g), g) - z_target;
  };

  const double ztol = 1e-12 * (1.0 + std::abs(z_target));
  double fl = f(v_minus);
  double fr = f(v_plus);
  if (std::abs(fr) < ztol) return {v_plus, u_plus};            // pure rarefaction
  if (std::abs(fl) < ztol) return {v_minus, u_minus};          // pure shock
  if (fl * fr > 0.0) {
    std::ostringstream os;
    os << "riemann_intermediate: no R1+S2 intermediate state in (" << v_minus << ", " << v_plus
       << "); the " << (std::abs(fl) < std::abs(fr) ? "S2 curve from (v_plus,u_plus)"
                                                    : "R1 curve from (v_minus,u_minus)")
       << " does not reach the opposite state";
    config_fail(os.str());
  }

  double a = v_minus, b = v_plus;
  while (b - a > 1e-12) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) { a = b = m; break; }
    if (fl * fm < 0.0) { b = m; fr = fm; } else { a = m; fl = fm; }
  }
  const double v_m = 0.5 * (a + b);
  return {v_m, s2_connect(v_plus, u_plus, v_m, g)};
}

WaveConfig make_wave_config(const GasParams& g, double v_plus, double u_plus, double v_m,
                            double v_minus, double strength_cap) {
  if (!(v_minus > 0.0) || !(v_minus <= v_m) || !(v_m <= v_plus))
    config_fail("make_wave_config: states must satisfy 0 < v_minus <= v_m <= v_plus");

  WaveConfig cfg{g, v_plus, u_plus, v_m, 0.0, v_minus, 0.0, 0.0, 0.0, 0.0};
  cfg.u_m = s2_connect(v_plus, u_plus, v_m, g);
  cfg.u_minus = r1_connect(v_m, cfg.u_m, v_minus, g);
  cfg.delta_S = pressure(v_m, g) - pressure(v_plus, g);
  cfg.delta_R = v_m - v_minus;
  cfg.sigma = (v_m < v_plus) ? shock_speed(v_m, v_plus, g) : lambda2(v_plus, g);

  if (cfg.delta_S > 0.0) {
    // Lax entropy condition for the 2-shock.
    if (!(lambda2(v_plus, g) < cfg.sigma && cfg.sigma < lambda2(v_m, g)))
      config_fail("make_wave_config: Lax condition lambda2(v_plus) < sigma < lambda2(v_m) failed");
  }
  if (cfg.delta_S > strength_cap || cfg.delta_R > strength_cap) {
    std::ostringstream os;
    os << "make_wave_config: wave strength exceeds cap " << strength_cap << " (delta_S="
       << cfg.delta_S << ", delta_R=" << cfg.delta_R << ")";
    config_fail(os.str());
  }
  return cfg;
}

}  // namespace cwlab
