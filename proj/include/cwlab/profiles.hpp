#pragma once

#include <vector>

#include "cwlab/euler_waves.hpp"

namespace cwlab {

// Monotone viscous 2-shock profile (v^S, u^S)(xi) connecting v_m at -inf to
// v_plus at +inf, normalized so that v^S(0) = (v_m + v_plus)/2. The profile
// solves the first-order reduction
//   v' = -(v/sigma) [ sigma^2 (v - v_m) + p(v) - p(v_m) ],
// obtained by integrating the traveling-wave system from -inf, and
//   u^S = u_m - sigma (v^S - v_m),   h^S = u^S - (ln v^S)_xi.
class ShockProfile {
 public:
  struct Point {
    double v, u, h;
    double p;                 // p(v^S)
    double v_xi, u_xi, h_xi;  // exact from the profile ODE
    double p_xi;              // d/dxi p(v^S)
    double v_xixi;            // from differentiating the ODE
    double lnv_xixi;          // (ln v^S)''
  };

  // Integrates the profile outward from xi = 0 with fixed-step RK4 (step
  // delta_S/50) until both tails are within tol of the end states; gives up
  // at |xi| = 50/delta_S. Requires delta_S > 0.
  static ShockProfile solve(const WaveConfig& cfg, double tol = 1e-10);

  // Degenerate profile for delta_S = 0: constant (v_m, u_m).
  static ShockProfile constant(const WaveConfig& cfg);

  // Total on real xi: cubic Hermite interpolation inside the tabulated range,
  // constant end-state extension (zero derivatives) outside. Derivatives come
  // from the ODE right-hand side, not from differencing.
  Point eval(double xi) const;

  const WaveConfig& config() const { return cfg_; }
  double xi_left() const { return xi0_; }
  double xi_right() const { return xi0_ + step_ * static_cast<double>(values_.size() - 1); }
  double step() const { return step_; }
  const std::vector<double>& values() const { return values_; }
  double value_xi(std::size_t k) const { return xi0_ + step_ * static_cast<double>(k); }

  // ODE right-hand side at a profile value v, and the full point it implies.
  double rhs_v(double v) const;
  Point point_at(double v) const;

 private:
  ShockProfile(WaveConfig cfg, std::vector<double> values, double xi0, double step);

  WaveConfig cfg_;
  std::vector<double> values_;  // v^S at xi0 + k*step (empty if degenerate)
  std::vector<double> slopes_;  // nodal v' * step, for Hermite evaluation
  double xi0_ = 0.0;
  double step_ = 1.0;
  double p_vm_ = 0.0;
};

// Smooth approximate 1-rarefaction built from the Burgers equation with
// monotone tanh data between w_minus = lambda1(v_minus) and w_m = lambda1(v_m);
// the wave is evaluated at Burgers time s = 1 + t.
class ApproxRarefaction {
 public:
  explicit ApproxRarefaction(const WaveConfig& cfg);

  struct W {
    double w, w_x;
  };

  // Smooth Burgers solution: solves x = x0 + w0(x0) s for the characteristic
  // foot point (monotone, unique for s >= 0) and returns
  // w = w0(x0), w_x = w0'(x0)/(1 + s w0'(x0)).
  W burgers_w(double s, double x) const;

  struct Point {
    double v, u;
    double v_x, u_x;  // both > 0
  };

  // Approximate rarefaction at physical time t >= 0 and position x:
  // lambda1(v) = w(1+t, x), u from 1-Riemann-invariant constancy, and
  //   u_x = (2 v /(gamma+1)) w_x,   v_x = v^((gamma+1)/2) u_x / sqrt(gamma).
  Point eval(double t, double x) const;
  Point point_from_w(const W& w) const;

  // Volume alone from a Burgers value, v = (gamma/w^2)^(1/(gamma+1)).
  double v_from_w(double w) const;

  // Incremental row evaluation: x must be non-decreasing between calls, so the
  // previous characteristic root warm-starts the next solve.
  class Cursor {
   public:
    explicit Cursor(const ApproxRarefaction& r) : r_(&r) {}
    W next(double s, double x);

   private:
    const ApproxRarefaction* r_;
    double x0_ = 0.0;
    bool primed_ = false;
  };

  double w_minus() const { return w_minus_; }
  double w_m() const { return w_m_; }
  const WaveConfig& config() const { return cfg_; }

 private:
  friend class Cursor;
  double w0(double x0) const;
  double dw0(double x0) const;
  double solve_x0(double s, double x, double guess, bool have_guess) const;

  WaveConfig cfg_;
  double w_minus_, w_m_;
  double wc_, wm_half_;  // tanh data midpoint and half-amplitude
  double z1_;            // conserved Riemann invariant
};

// Composite background in the shock frame:
//   v(t,xi) = v^R(t, xi + sigma t) + v^S(xi - X) - v_m   (same shape for u),
//   h(t,xi) = u^R(t, xi + sigma t) + h^S(xi - X) - u_m.
struct CompositePoint {
  double v, u, h;
  double v_xi, u_xi, h_xi;
};

CompositePoint composite_wave(double t, double xi, double X, const ShockProfile& shock,
                              const ApproxRarefaction& rare);

// Monotone weight a(xi) = 1 + (lambda/delta_S)(p(v_m) - p(v^S(xi))), increasing
// from 1 to 1 + lambda across the shock layer. Requires lambda > delta_S
// (identically 1 for the degenerate delta_S = 0 profile).
class WeightFunction {
 public:
  WeightFunction(const ShockProfile& shock, double lambda);

  struct A {
    double a, da;
  };

  A eval(const ShockProfile& shock, double xi) const;
  A from_point(const ShockProfile::Point& pt) const;
  double lambda() const { return lambda_; }

 private:
  double lambda_;
  double delta_S_;
  double p_vm_;
};

}  // namespace cwlab
