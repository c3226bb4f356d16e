#include "cwlab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

// g(v) = sigma^2 (v - v_m) + p(v) - p(v_m); negative strictly between the end
// states by convexity of p, zero at both.
double chord_defect(double v, const WaveConfig& cfg, double p_vm) {
  return cfg.sigma * cfg.sigma * (v - cfg.v_m) + pressure(v, cfg.gas) - p_vm;
}

}  // namespace

ShockProfile::ShockProfile(WaveConfig cfg, std::vector<double> values, double xi0, double step)
    : cfg_(std::move(cfg)), values_(std::move(values)), xi0_(xi0), step_(step) {
  p_vm_ = pressure(cfg_.v_m, cfg_.gas);
  slopes_.reserve(values_.size());
  for (double v : values_) slopes_.push_back(rhs_v(v) * step_);
}

double ShockProfile::rhs_v(double v) const {
  return -(v / cfg_.sigma) * chord_defect(v, cfg_, p_vm_);
}

ShockProfile ShockProfile::solve(const WaveConfig& cfg, double tol) {
  if (!(cfg.delta_S > 0.0))
    throw ConfigError("ShockProfile::solve: requires delta_S > 0 (use constant() otherwise)");

  const double h = cfg.delta_S / 50.0;
  const double xi_budget = 50.0 / cfg.delta_S;
  const double v0 = 0.5 * (cfg.v_m + cfg.v_plus);
  const double p_vm = pressure(cfg.v_m, cfg.gas);

  auto rhs = [&](double v) { return -(v / cfg.sigma) * chord_defect(v, cfg, p_vm); };
  auto rk4_step = [&](double v, double dir) {
    const double k1 = rhs(v);
    const double k2 = rhs(v + 0.5 * dir * h * k1);
    const double k3 = rhs(v + 0.5 * dir * h * k2);
    const double k4 = rhs(v + dir * h * k3);
    return v + dir * h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  auto integrate_tail = [&](double dir, double v_end) {
    std::vector<double> vals;
    double v = v0;
    double xi = 0.0;
    while (std::abs(v - v_end) >= tol) {
      if (std::abs(xi) > xi_budget) {
        std::ostringstream os;
        os << "ShockProfile::solve: tail toward v = " << v_end
           << " not within tolerance by |xi| = " << xi_budget;
        throw ProfileError(os.str());
      }
      v = rk4_step(v, dir);
      xi += dir * h;
      const bool interior = v > cfg.v_m + tol && v < cfg.v_plus - tol;
      if (interior && !(chord_defect(v, cfg, p_vm) < 0.0))
        throw ConfigError("ShockProfile::solve: chord defect not negative in the interior");
      vals.push_back(v);
    }
    return vals;
  };

  const std::vector<double> right = integrate_tail(+1.0, cfg.v_plus);
  const std::vector<double> left = integrate_tail(-1.0, cfg.v_m);

  std::vector<double> values;
  values.reserve(left.size() + right.size() + 1);
  for (auto it = left.rbegin(); it != left.rend(); ++it) values.push_back(*it);
  values.push_back(v0);
  for (double v : right) values.push_back(v);

  const double xi0 = -h * static_cast<double>(left.size());
  return ShockProfile(cfg, std::move(values), xi0, h);
}

ShockProfile ShockProfile::constant(const WaveConfig& cfg) {
  return ShockProfile(cfg, {}, 0.0, 1.0);
}

ShockProfile::Point ShockProfile::point_at(double v) const {
  const WaveConfig& c = cfg_;
  Point pt{};
  pt.v = v;
  pt.u = c.u_m - c.sigma * (v - c.v_m);
  const PressureDerivs pd = pressure_derivs(v, c.gas);
  pt.p = pd.p;
  const double gv = c.sigma * c.sigma * (v - c.v_m) + pd.p - p_vm_;
  pt.v_xi = -(v / c.sigma) * gv;
  pt.u_xi = -c.sigma * pt.v_xi;
  pt.h = pt.u - pt.v_xi / v;
  pt.p_xi = pd.dp * pt.v_xi;
  pt.h_xi = pt.p_xi / c.sigma;  // from the traveling-wave system in (v,h)
  // v'' = v' d/dv [ -(v/sigma)(sigma^2 (v-v_m) + p - p(v_m)) ]
  pt.v_xixi = pt.v_xi * (-(gv + v * (c.sigma * c.sigma + pd.dp)) / c.sigma);
  pt.lnv_xixi = pt.v_xixi / v - (pt.v_xi / v) * (pt.v_xi / v);
  return pt;
}

ShockProfile::Point ShockProfile::eval(double xi) const {
  const std::size_t n = values_.size();
  if (n == 0 || xi <= xi0_) {
    Point pt{};
    pt.v = cfg_.v_m;
    pt.u = cfg_.u_m;
    pt.h = cfg_.u_m;
    pt.p = p_vm_;
    return pt;
  }
  const double xr = xi0_ + step_ * static_cast<double>(n - 1);
  if (xi >= xr) {
    Point pt{};
    pt.v = cfg_.v_plus;
    pt.u = cfg_.u_plus;
    pt.h = cfg_.u_plus;
    pt.p = pressure(cfg_.v_plus, cfg_.gas);
    return pt;
  }
  const double s = (xi - xi0_) / step_;
  std::size_t k = static_cast<std::size_t>(s);
  if (k >= n - 1) k = n - 2;
  const double th = s - static_cast<double>(k);
  // cubic Hermite with exact nodal derivatives
  const double t2 = th * th;
  const double t3 = t2 * th;
  const double v = (2.0 * t3 - 3.0 * t2 + 1.0) * values_[k] + (t3 - 2.0 * t2 + th) * slopes_[k] +
                   (-2.0 * t3 + 3.0 * t2) * values_[k + 1] + (t3 - t2) * slopes_[k + 1];
  return point_at(v);
}

ApproxRarefaction::ApproxRarefaction(const WaveConfig& cfg)
    : cfg_(cfg),
      w_minus_(lambda1(cfg.v_minus, cfg.gas)),
      w_m_(lambda1(cfg.v_m, cfg.gas)),
      wc_(0.5 * (w_m_ + w_minus_)),
      wm_half_(0.5 * (w_m_ - w_minus_)),
      z1_(riemann_invariant_z1(cfg.v_m, cfg.u_m, cfg.gas)) {}

double ApproxRarefaction::w0(double x0) const { return wc_ + wm_half_ * std::tanh(x0); }

double ApproxRarefaction::dw0(double x0) const {
  const double c = std::cosh(x0);
  return wm_half_ / (c * c);
}

double ApproxRarefaction::solve_x0(double s, double x, double guess, bool have_guess) const {
  // phi(x0) = x0 + w0(x0) s - x is strictly increasing with phi' >= 1.
  double lo = x - w_m_ * s;
  double hi = x - w_minus_ * s;
  auto phi = [&](double x0) { return x0 + w0(x0) * s - x; };

  double x0 = have_guess ? std::clamp(guess, lo, hi) : 0.5 * (lo + hi);
  for (int it = 0; it < 80; ++it) {
    const double f = phi(x0);
    if (f > 0.0) hi = x0; else lo = x0;
    const double step = f / (1.0 + s * dw0(x0));
    double next = x0 - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    if (std::abs(next - x0) < 1e-14 * (1.0 + std::abs(x0))) return next;
    x0 = next;
  }
  return x0;
}

ApproxRarefaction::W ApproxRarefaction::burgers_w(double s, double x) const {
  if (wm_half_ <= 0.0) return {w_m_, 0.0};  // degenerate delta_R = 0
  const double x0 = solve_x0(s, x, 0.0, false);
  const double d = dw0(x0);
  return {w0(x0), d / (1.0 + s * d)};
}

ApproxRarefaction::W ApproxRarefaction::Cursor::next(double s, double x) {
  if (r_->wm_half_ <= 0.0) return {r_->w_m_, 0.0};
  x0_ = r_->solve_x0(s, x, x0_, primed_);
  primed_ = true;
  const double d = r_->dw0(x0_);
  return {r_->w0(x0_), d / (1.0 + s * d)};
}

double ApproxRarefaction::v_from_w(double w) const {
  if (wm_half_ <= 0.0) return cfg_.v_m;
  const GasParams& g = cfg_.gas;
  return std::exp(std::log(g.gamma / (w * w)) / (g.gamma + 1.0));
}

ApproxRarefaction::Point ApproxRarefaction::point_from_w(const W& w) const {
  const GasParams& g = cfg_.gas;
  Point pt{};
  if (wm_half_ <= 0.0) {
    pt.v = cfg_.v_m;
    pt.u = cfg_.u_m;
    return pt;
  }
  pt.v = std::exp(std::log(g.gamma / (w.w * w.w)) / (g.gamma + 1.0));
  pt.u = z1_ - lambda1_antiderivative(pt.v, g);
  pt.u_x = 2.0 * pt.v / (g.gamma + 1.0) * w.w_x;
  pt.v_x = std::exp(0.5 * (g.gamma + 1.0) * std::log(pt.v)) * pt.u_x / std::sqrt(g.gamma);
  return pt;
}

ApproxRarefaction::Point ApproxRarefaction::eval(double t, double x) const {
  if (!(t >= 0.0)) throw std::domain_error("ApproxRarefaction::eval: t must be >= 0");
  return point_from_w(burgers_w(1.0 + t, x));
}

CompositePoint composite_wave(double t, double xi, double X, const ShockProfile& shock,
                              const ApproxRarefaction& rare) {
  const WaveConfig& cfg = shock.config();
  const ApproxRarefaction::Point r = rare.eval(t, xi + cfg.sigma * t);
  const ShockProfile::Point s = shock.eval(xi - X);
  CompositePoint c{};
  c.v = r.v + s.v - cfg.v_m;
  c.u = r.u + s.u - cfg.u_m;
  c.h = r.u + s.h - cfg.u_m;
  c.v_xi = r.v_x + s.v_xi;
  c.u_xi = r.u_x + s.u_xi;
  c.h_xi = r.u_x + s.h_xi;
  if (!(c.v > 0.0)) throw std::runtime_error("composite_wave: non-positive specific volume");
  return c;
}

WeightFunction::WeightFunction(const ShockProfile& shock, double lambda)
    : lambda_(lambda),
      delta_S_(shock.config().delta_S),
      p_vm_(pressure(shock.config().v_m, shock.config().gas)) {
  if (delta_S_ > 0.0 && !(lambda > delta_S_)) {
    std::ostringstream os;
    os << "WeightFunction: weight amplitude lambda = " << lambda
       << " must exceed the shock strength delta_S = " << delta_S_;
    throw ConfigError(os.str());
  }
}

WeightFunction::A WeightFunction::from_point(const ShockProfile::Point& pt) const {
  if (!(delta_S_ > 0.0)) return {1.0, 0.0};
  return {1.0 + lambda_ / delta_S_ * (p_vm_ - pt.p), -lambda_ / delta_S_ * pt.p_xi};
}

WeightFunction::A WeightFunction::eval(const ShockProfile& shock, double xi) const {
  return from_point(shock.eval(xi));
}

}  // namespace cwlab
