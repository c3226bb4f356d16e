#pragma once

#include "cwlab/thermo.hpp"

namespace cwlab {

// Composite-wave configuration: a 1-rarefaction from (v_minus,u_minus) to the
// intermediate state (v_m,u_m), followed by a 2-shock from (v_m,u_m) to
// (v_plus,u_plus). Requires 0 < v_minus <= v_m <= v_plus.
struct WaveConfig {
  GasParams gas;
  double v_plus, u_plus;
  double v_m, u_m;
  double v_minus, u_minus;
  double sigma;    // 2-shock speed (lambda2(v_m) in the degenerate delta_S = 0 case)
  double delta_S;  // shock strength |p(v_plus) - p(v_m)|
  double delta_R;  // rarefaction strength |v_m - v_minus|
};

struct State {
  double v, u;
};

// Speed of the 2-shock connecting v_m (left) to v_plus (right),
// sigma = sqrt(-(p(v_plus)-p(v_m))/(v_plus-v_m)) > 0.
double shock_speed(double v_m, double v_plus, const GasParams& g);

// Velocity of the left state of a 2-shock with right state (v_plus,u_plus):
// u_m = u_plus + sigma (v_plus - v_m), from the Rankine-Hugoniot conditions.
double s2_connect(double v_plus, double u_plus, double v_m, const GasParams& g);

// Velocity of the left state of a 1-rarefaction with right state (v_m,u_m):
// constancy of the 1-Riemann invariant, u_minus = u_m + A(v_m) - A(v_minus).
double r1_connect(double v_m, double u_m, double v_minus, const GasParams& g);

// Self-similar 1-rarefaction fan between (v_minus,u_minus) and (v_m,u_m),
// evaluated at x/t. Requires t > 0.
State exact_rarefaction(double t, double x, const WaveConfig& cfg);

// Intermediate state of the R1 + S2 Riemann solution: the unique (v_m,u_m)
// with (v_minus,u_minus) on R1(v_m,u_m) and (v_m,u_m) on S2(v_plus,u_plus).
State riemann_intermediate(double v_minus, double u_minus, double v_plus, double u_plus,
                           const GasParams& g);

// Forward construction from (gamma, v_plus, u_plus, v_m, v_minus): derives
// u_m, u_minus, sigma and the strengths, and validates the Lax condition and
// the strength cap. Degenerate single-wave cases (v_m = v_plus or
// v_minus = v_m) are allowed.
WaveConfig make_wave_config(const GasParams& g, double v_plus, double u_plus, double v_m,
                            double v_minus, double strength_cap = 0.25);

}  // namespace cwlab
