#include "cwlab/thermo.hpp"

#include <cmath>

namespace cwlab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw std::domain_error(std::string(what) + ": specific volume must be positive");
}

// v^a as exp(a ln v); keeps small relative error in the far tails.
double pow_log(double v, double a) { return std::exp(a * std::log(v)); }

}  // namespace

double pressure(double v, const GasParams& g) {
  require_positive(v, "pressure");
  return pow_log(v, -g.gamma);
}

PressureDerivs pressure_derivs(double v, const GasParams& g) {
  require_positive(v, "pressure_derivs");
  const double p = pow_log(v, -g.gamma);
  const double dp = -g.gamma * p / v;
  const double d2p = g.gamma * (g.gamma + 1.0) * p / (v * v);
  return {p, dp, d2p};
}

double internal_energy(double v, const GasParams& g) {
  require_positive(v, "internal_energy");
  return pow_log(v, 1.0 - g.gamma) / (g.gamma - 1.0);
}

Eigenvalues eigenvalues(double v, const GasParams& g) {
  require_positive(v, "eigenvalues");
  const double l2 = std::sqrt(g.gamma * pow_log(v, -g.gamma - 1.0));
  return {-l2, l2};
}

double lambda1(double v, const GasParams& g) { return eigenvalues(v, g).lambda1; }
double lambda2(double v, const GasParams& g) { return eigenvalues(v, g).lambda2; }

double lambda1_antiderivative(double v, const GasParams& g) {
  require_positive(v, "lambda1_antiderivative");
  return 2.0 * std::sqrt(g.gamma) / (g.gamma - 1.0) * pow_log(v, -(g.gamma - 1.0) / 2.0);
}

double riemann_invariant_z1(double v, double u, const GasParams& g) {
  return u + lambda1_antiderivative(v, g);
}

double relative_pressure(double v, double w, const GasParams& g) {
  require_positive(v, "relative_pressure");
  require_positive(w, "relative_pressure");
  const PressureDerivs pw = pressure_derivs(w, g);
  return pressure(v, g) - pw.p - pw.dp * (v - w);
}

double relative_internal_energy(double v, double w, const GasParams& g) {
  require_positive(v, "relative_internal_energy");
  require_positive(w, "relative_internal_energy");
  // Q'(w) = -p(w)
  return internal_energy(v, g) - internal_energy(w, g) + pressure(w, g) * (v - w);
}

double relative_entropy(double v, double h, double vb, double hb, const GasParams& g) {
  const double dh = h - hb;
  return 0.5 * dh * dh + relative_internal_energy(v, vb, g);
}

}  // namespace cwlab
