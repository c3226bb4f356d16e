#pragma once

#include <span>
#include <string>
#include <vector>

#include "cwlab/profiles.hpp"
#include "cwlab/shift.hpp"

namespace cwlab {

// Effective velocity h = u - (ln v)_xi with the solver stencils (central
// differences inside, second-order one-sided at the ends).
std::vector<double> effective_velocity(std::span<const double> v, std::span<const double> u,
                                       double dxi);

// First derivative row with the same stencils.
std::vector<double> diff_row(std::span<const double> f, double dxi);
// Second derivative row (central inside, one-sided at the ends).
std::vector<double> diff2_row(std::span<const double> f, double dxi);

double trapezoid(std::span<const double> f, double dxi);

// Shock (at xi - X), rarefaction (at (t, xi + sigma t)), composite and weight
// values tabulated over the grid; the common input of the functionals below.
struct BackgroundRow {
  std::vector<double> vS, uS, hS, vS_xi, uS_xi, hS_xi, pS, pS_xi;
  std::vector<double> vR, uR, vR_x, uR_x;
  std::vector<double> vbar, ubar;
  std::vector<double> a;
};

BackgroundRow background_row(double t, double X, std::span<const double> xi,
                             const ShockProfile& shock, const ApproxRarefaction& rare,
                             const WeightFunction& weight);

// Weighted relative entropy int a(xi - X) (|h - hbar|^2/2 + Q(v|vbar)) dxi in
// the effective variables; hbar is computed from the composite (vbar, ubar)
// with the same stencil as h so that the zero perturbation gives exactly zero.
double weighted_relative_entropy(std::span<const double> v, std::span<const double> u,
                                 const BackgroundRow& row, double dxi, const GasParams& g);

struct StabilityFunctionals {
  double G_S;  // int |v^S_xi| |v - vbar|^2
  double G_R;  // int |u^R_xi| |v - vbar|^2
  double G1;   // (lambda/delta_S) int |v^S_xi| |h - hbar - (p(v)-p(vbar))/sigma|^2
  double D;    // int |d/dxi (p(v) - p(vbar))|^2
  double D1;   // int |(u - ubar)_xi|^2
  double D2;   // int |(u - ubar)_xixi|^2
};

StabilityFunctionals stability_functionals(std::span<const double> v, std::span<const double> u,
                                           const BackgroundRow& row, double dxi,
                                           const WaveConfig& cfg, double lambda);

// Superposition residuals: F1 and F3 are the viscous mismatches, F2 the
// pressure mismatch. Background-only quantities; inner expressions are exact
// and a single difference stencil is applied on top.
struct WaveErrorTerms {
  std::vector<double> F1, F2, F3;
  double F1_L2, F2_L2, F3_L2;
};

WaveErrorTerms wave_error_terms(const BackgroundRow& row, double dxi, const WaveConfig& cfg);

// L1/L2 products measuring the shock/rarefaction overlap.
struct InteractionNorms {
  double vSxi_vR_L1;   // || v^S_xi (v^R - v_m) ||_L1
  double vSxi_vR_L2;   // || v^S_xi (v^R - v_m) ||_L2
  double vRx_vSxi_L1;  // || v^R_x v^S_xi ||_L1
  double vRx_vSxi_L2;  // || v^R_x v^S_xi ||_L2
  double vRx_vS_L2;    // || v^R_x (v^S - v_m) ||_L2
};

InteractionNorms wave_interaction_norms(const BackgroundRow& row, double dxi,
                                        const WaveConfig& cfg);

// Weighted Poincare inequality on [0,1]:
//   int |f - mean f|^2 <= (1/2) int y(1-y) |f'|^2.
// Inputs are samples on a uniform grid with at least 3 points.
struct PoincareResult {
  double lhs, rhs, margin;
};

PoincareResult poincare_check(std::span<const double> f);

// Residual of the completed square -(s/2) z^2 + w z = -(s/2)(z - w/s)^2 + w^2/(2s).
double quadratic_identity_residual(double z, double w, double sigma);

// Sup distance between the grid fields and the exact-rarefaction composite
// v^r(x/t) + v^S(x - sigma t - X) - v_m (and the same in u). Requires t > 0.
double sup_distance_to_exact(double t, double X, std::span<const double> v,
                             std::span<const double> u, std::span<const double> xi,
                             const BackgroundRow& row, const WaveConfig& cfg);

// One diagnostics output row; the CSV columns follow the field order.
struct DiagnosticRecord {
  double t = 0.0;
  double X = 0.0;
  double Xdot = 0.0;
  double X_over_t = 0.0;
  double perturb_L2_v = 0.0;
  double perturb_L2_u = 0.0;
  double perturb_H1 = 0.0;
  double sup_v = 0.0;
  double sup_u = 0.0;
  double sup_exact = 0.0;
  double went = 0.0;
  double G_S = 0.0;
  double G_R = 0.0;
  double G1 = 0.0;
  double D = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
  double F1_L2 = 0.0;
  double F2_L2 = 0.0;
  double F3_L2 = 0.0;
  double mass_residual = 0.0;
};

std::string diagnostic_csv_header();
std::string diagnostic_csv_line(const DiagnosticRecord& r);

// Full-precision decimal formatting (17 significant digits).
std::string format_full(double x);

}  // namespace cwlab
