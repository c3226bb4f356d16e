#include "cwlab/shift.hpp"

#include <cmath>
#include <stdexcept>

namespace cwlab {

ShiftParams shift_constant_M(const WaveConfig& cfg) {
  const GasParams& g = cfg.gas;
  const double p_vm = pressure(cfg.v_m, g);
  const double sigma_m = std::sqrt(-pressure_derivs(cfg.v_m, g).dp);
  const double alpha_m = (g.gamma + 1.0) / (2.0 * g.gamma * sigma_m * p_vm);
  const double M1 = 5.0 * (g.gamma + 1.0) * sigma_m * sigma_m * sigma_m / (8.0 * g.gamma * p_vm);
  const double M2 = 1.25 * sigma_m * sigma_m * sigma_m * sigma_m * alpha_m;
  if (std::abs(M1 - M2) > 1e-13 * std::abs(M1))
    throw std::logic_error("shift_constant_M: the two closed forms for M disagree");
  return {M1, M2, cfg.delta_S, sigma_m, alpha_m};
}

ShiftRhs shift_rhs(double t, double X, std::span<const double> v, std::span<const double> xi,
                   const ShockProfile& shock, const ApproxRarefaction& rare,
                   const WeightFunction& weight, const ShiftParams& params) {
  if (!(params.delta_S > 0.0)) return {0.0, 0.0, 0.0};

  const WaveConfig& cfg = shock.config();
  const double sigma = cfg.sigma;
  const std::size_t n = v.size();

  ApproxRarefaction::Cursor rcur(rare);
  const double s_burgers = 1.0 + t;

  double I1 = 0.0, I2 = 0.0;
  double prev1 = 0.0, prev2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ShockProfile::Point sp = shock.eval(xi[i] - X);
    const WeightFunction::A aw = weight.from_point(sp);
    const ApproxRarefaction::W w = rcur.next(s_burgers, xi[i] + sigma * t);
    const double v_bar = rare.v_from_w(w.w) + sp.v - cfg.v_m;
    const double p_diff = pressure(v[i], cfg.gas) - pressure(v_bar, cfg.gas);
    const double f1 = aw.a / sigma * sp.h_xi * p_diff;
    const double f2 = aw.a * sp.p_xi * (v[i] - v_bar);
    if (i > 0) {
      const double dxi = xi[i] - xi[i - 1];
      I1 += 0.5 * dxi * (prev1 + f1);
      I2 += 0.5 * dxi * (prev2 + f2);
    }
    prev1 = f1;
    prev2 = f2;
  }
  return {-(params.M / params.delta_S) * (I1 - I2), I1, I2};
}

}  // namespace cwlab
