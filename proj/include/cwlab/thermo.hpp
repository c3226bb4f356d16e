#pragma once

#include <stdexcept>

namespace cwlab {

// Gamma-law gas, p(v) = v^(-gamma) on specific volume v > 0.
// The pressure constant and the viscosity are normalized to 1.
struct GasParams {
  double gamma;

  explicit GasParams(double gamma_) : gamma(gamma_) {
    if (!(gamma > 1.0)) throw std::domain_error("GasParams: gamma must exceed 1");
  }
};

struct PressureDerivs {
  double p;    // v^(-gamma)
  double dp;   // -gamma v^(-gamma-1)
  double d2p;  // gamma (gamma+1) v^(-gamma-2)
};

// p(v) evaluated in the log domain for accuracy at extreme v.
double pressure(double v, const GasParams& g);
PressureDerivs pressure_derivs(double v, const GasParams& g);

// Internal energy Q(v) = v^(1-gamma)/(gamma-1), so Q'(v) = -p(v).
double internal_energy(double v, const GasParams& g);

struct Eigenvalues {
  double lambda1;  // -sqrt(-p'(v)) < 0
  double lambda2;  // +sqrt(-p'(v)) > 0
};

Eigenvalues eigenvalues(double v, const GasParams& g);
double lambda1(double v, const GasParams& g);
double lambda2(double v, const GasParams& g);

// Antiderivative A(v) of lambda1: A(v) = (2 sqrt(gamma)/(gamma-1)) v^(-(gamma-1)/2).
double lambda1_antiderivative(double v, const GasParams& g);

// 1-Riemann invariant z1(v,u) = u + A(v), constant along 1-rarefactions.
double riemann_invariant_z1(double v, double u, const GasParams& g);

// Relative quantities F(v|w) = F(v) - F(w) - F'(w)(v-w); both are >= 0 by
// convexity and vanish only at v = w.
double relative_pressure(double v, double w, const GasParams& g);
double relative_internal_energy(double v, double w, const GasParams& g);

// Relative entropy in the effective variables U = (v,h):
// eta(U|Ub) = |h - hb|^2 / 2 + Q(v|vb).
double relative_entropy(double v, double h, double vb, double hb, const GasParams& g);

}  // namespace cwlab
