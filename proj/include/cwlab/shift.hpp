#pragma once

#include <span>

#include "cwlab/profiles.hpp"

namespace cwlab {

// Constants of the shift ODE. The gain M has two equivalent closed forms,
//   M = 5 (gamma+1) sigma_m^3 / (8 gamma p(v_m))   and   M = (5/4) sigma_m^4 alpha_m,
// with sigma_m = sqrt(-p'(v_m)) and alpha_m = (gamma+1)/(2 gamma sigma_m p(v_m));
// the constructor checks their agreement.
struct ShiftParams {
  double M;      // 5 (gamma+1) sigma_m^3 / (8 gamma p(v_m))
  double M_alt;  // (5/4) sigma_m^4 alpha_m
  double delta_S;
  double sigma_m;
  double alpha_m;
};

ShiftParams shift_constant_M(const WaveConfig& cfg);

// Right-hand side of the shift ODE evaluated on a grid snapshot:
//   Xdot = -(M/delta_S) [ I1 - I2 ],
//   I1 = int (a(xi-X)/sigma) d/dxi h^S(xi-X) (p(v) - p(vbar)) dxi,
//   I2 = int a(xi-X) d/dxi p(v^S(xi-X)) (v - vbar) dxi,
// where vbar is the shifted composite background. Trapezoid quadrature on the
// solver grid; profile derivative factors are exact from the profile ODE.
// Returns 0 for the degenerate delta_S = 0 background.
struct ShiftRhs {
  double xdot;
  double I1, I2;
};

ShiftRhs shift_rhs(double t, double X, std::span<const double> v, std::span<const double> xi,
                   const ShockProfile& shock, const ApproxRarefaction& rare,
                   const WeightFunction& weight, const ShiftParams& params);

}  // namespace cwlab
