#include "cwlab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cwlab {

std::vector<double> diff_row(std::span<const double> f, double dxi) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 3) return d;
  const double inv2 = 1.0 / (2.0 * dxi);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2;
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2;
  return d;
}

std::vector<double> diff2_row(std::span<const double> f, double dxi) {
  const std::size_t n = f.size();
  std::vector<double> d(n, 0.0);
  if (n < 4) return d;
  const double inv = 1.0 / (dxi * dxi);
  d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * inv;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * inv;
  d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * inv;
  return d;
}

std::vector<double> effective_velocity(std::span<const double> v, std::span<const double> u,
                                       double dxi) {
  std::vector<double> lnv(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) lnv[i] = std::log(v[i]);
  std::vector<double> h = diff_row(lnv, dxi);
  for (std::size_t i = 0; i < v.size(); ++i) h[i] = u[i] - h[i];
  return h;
}

double trapezoid(std::span<const double> f, double dxi) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * dxi;
}

BackgroundRow background_row(double t, double X, std::span<const double> xi,
                             const ShockProfile& shock, const ApproxRarefaction& rare,
                             const WeightFunction& weight) {
  const WaveConfig& cfg = shock.config();
  const std::size_t n = xi.size();
  BackgroundRow row;
  for (auto* p : {&row.vS, &row.uS, &row.hS, &row.vS_xi, &row.uS_xi, &row.hS_xi, &row.pS,
                  &row.pS_xi, &row.vR, &row.uR, &row.vR_x, &row.uR_x, &row.vbar, &row.ubar,
                  &row.a})
    p->resize(n);

  ApproxRarefaction::Cursor rcur(rare);
  const double s_burgers = 1.0 + t;
  for (std::size_t i = 0; i < n; ++i) {
    const ShockProfile::Point sp = shock.eval(xi[i] - X);
    const WeightFunction::A aw = weight.from_point(sp);
    const ApproxRarefaction::W w = rcur.next(s_burgers, xi[i] + cfg.sigma * t);
    const ApproxRarefaction::Point rp = rare.point_from_w(w);
    row.vS[i] = sp.v;
    row.uS[i] = sp.u;
    row.hS[i] = sp.h;
    row.vS_xi[i] = sp.v_xi;
    row.uS_xi[i] = sp.u_xi;
    row.hS_xi[i] = sp.h_xi;
    row.pS[i] = sp.p;
    row.pS_xi[i] = sp.p_xi;
    row.vR[i] = rp.v;
    row.uR[i] = rp.u;
    row.vR_x[i] = rp.v_x;
    row.uR_x[i] = rp.u_x;
    row.vbar[i] = rp.v + sp.v - cfg.v_m;
    row.ubar[i] = rp.u + sp.u - cfg.u_m;
    row.a[i] = aw.a;
  }
  return row;
}

double weighted_relative_entropy(std::span<const double> v, std::span<const double> u,
                                 const BackgroundRow& row, double dxi, const GasParams& g) {
  const std::vector<double> h = effective_velocity(v, u, dxi);
  const std::vector<double> hbar = effective_velocity(row.vbar, row.ubar, dxi);
  std::vector<double> f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double dh = h[i] - hbar[i];
    f[i] = row.a[i] * (0.5 * dh * dh + relative_internal_energy(v[i], row.vbar[i], g));
  }
  return trapezoid(f, dxi);
}

StabilityFunctionals stability_functionals(std::span<const double> v, std::span<const double> u,
                                           const BackgroundRow& row, double dxi,
                                           const WaveConfig& cfg, double lambda) {
  const std::size_t n = v.size();
  std::vector<double> pv(n), pdiff(n), udiff(n), gs(n), gr(n), g1(n);
  for (std::size_t i = 0; i < n; ++i) {
    pv[i] = pressure(v[i], cfg.gas);
    pdiff[i] = pv[i] - pressure(row.vbar[i], cfg.gas);
    udiff[i] = u[i] - row.ubar[i];
    const double dv = v[i] - row.vbar[i];
    gs[i] = std::abs(row.vS_xi[i]) * dv * dv;
    gr[i] = std::abs(row.uR_x[i]) * dv * dv;
  }
  const std::vector<double> h = effective_velocity(v, u, dxi);
  const std::vector<double> hbar = effective_velocity(row.vbar, row.ubar, dxi);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = h[i] - hbar[i] - pdiff[i] / cfg.sigma;
    g1[i] = std::abs(row.vS_xi[i]) * q * q;
  }
  const std::vector<double> dpd = diff_row(pdiff, dxi);
  const std::vector<double> dud = diff_row(udiff, dxi);
  const std::vector<double> d2ud = diff2_row(udiff, dxi);

  std::vector<double> d(n), d1(n), d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = dpd[i] * dpd[i];
    d1[i] = dud[i] * dud[i];
    d2[i] = d2ud[i] * d2ud[i];
  }
  StabilityFunctionals out{};
  out.G_S = trapezoid(gs, dxi);
  out.G_R = trapezoid(gr, dxi);
  out.G1 = cfg.delta_S > 0.0 ? lambda / cfg.delta_S * trapezoid(g1, dxi) : 0.0;
  out.D = trapezoid(d, dxi);
  out.D1 = trapezoid(d1, dxi);
  out.D2 = trapezoid(d2, dxi);
  return out;
}

WaveErrorTerms wave_error_terms(const BackgroundRow& row, double dxi, const WaveConfig& cfg) {
  const std::size_t n = row.vbar.size();
  std::vector<double> visc_inner(n), press_inner(n), log_inner(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ubar_xi = row.uR_x[i] + row.uS_xi[i];
    visc_inner[i] = row.uS_xi[i] / row.vS[i] - ubar_xi / row.vbar[i];
    press_inner[i] =
        pressure(row.vbar[i], cfg.gas) - pressure(row.vR[i], cfg.gas) - row.pS[i];
    log_inner[i] = std::log(row.vS[i]) - std::log(row.vbar[i]);
  }
  WaveErrorTerms out;
  out.F1 = diff_row(visc_inner, dxi);
  out.F2 = diff_row(press_inner, dxi);
  out.F3 = diff2_row(log_inner, dxi);
  auto l2 = [&](const std::vector<double>& f) {
    std::vector<double> sq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
    return std::sqrt(trapezoid(sq, dxi));
  };
  out.F1_L2 = l2(out.F1);
  out.F2_L2 = l2(out.F2);
  out.F3_L2 = l2(out.F3);
  return out;
}

InteractionNorms wave_interaction_norms(const BackgroundRow& row, double dxi,
                                        const WaveConfig& cfg) {
  const std::size_t n = row.vbar.size();
  std::vector<double> a1(n), a2(n), a3(n), s1(n), s2(n), s3(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t1 = row.vS_xi[i] * (row.vR[i] - cfg.v_m);
    const double t2 = row.vR_x[i] * row.vS_xi[i];
    const double t3 = row.vR_x[i] * (row.vS[i] - cfg.v_m);
    a1[i] = std::abs(t1);
    a2[i] = std::abs(t2);
    a3[i] = std::abs(t3);
    s1[i] = t1 * t1;
    s2[i] = t2 * t2;
    s3[i] = t3 * t3;
  }
  InteractionNorms out{};
  out.vSxi_vR_L1 = trapezoid(a1, dxi);
  out.vSxi_vR_L2 = std::sqrt(trapezoid(s1, dxi));
  out.vRx_vSxi_L1 = trapezoid(a2, dxi);
  out.vRx_vSxi_L2 = std::sqrt(trapezoid(s2, dxi));
  out.vRx_vS_L2 = std::sqrt(trapezoid(s3, dxi));
  return out;
}

PoincareResult poincare_check(std::span<const double> f) {
  const std::size_t n = f.size();
  if (n < 3) throw std::domain_error("poincare_check: need at least 3 samples");
  const double dy = 1.0 / static_cast<double>(n - 1);
  const double mean = trapezoid(f, dy);
  std::vector<double> dev(n), wgrad(n);
  const std::vector<double> df = diff_row(f, dy);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = static_cast<double>(i) * dy;
    const double d = f[i] - mean;
    dev[i] = d * d;
    wgrad[i] = y * (1.0 - y) * df[i] * df[i];
  }
  PoincareResult out{};
  out.lhs = trapezoid(dev, dy);
  out.rhs = 0.5 * trapezoid(wgrad, dy);
  out.margin = out.rhs - out.lhs;
  return out;
}

double quadratic_identity_residual(double z, double w, double sigma) {
  if (!(sigma > 0.0))
    throw std::domain_error("quadratic_identity_residual: sigma must be positive");
  const double lhs = -0.5 * sigma * z * z + w * z;
  const double zc = z - w / sigma;
  const double rhs = -0.5 * sigma * zc * zc + w * w / (2.0 * sigma);
  return std::abs(lhs - rhs);
}

double sup_distance_to_exact(double t, double X, std::span<const double> v,
                             std::span<const double> u, std::span<const double> xi,
                             const BackgroundRow& row, const WaveConfig& cfg) {
  if (!(t > 0.0)) throw std::domain_error("sup_distance_to_exact: exact fan needs t > 0");
  double sup = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const State er = exact_rarefaction(t, xi[i] + cfg.sigma * t, cfg);
    const double cv = er.v + row.vS[i] - cfg.v_m;
    const double cu = er.u + row.uS[i] - cfg.u_m;
    sup = std::max(sup, std::max(std::abs(v[i] - cv), std::abs(u[i] - cu)));
  }
  return sup;
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string diagnostic_csv_header() {
  return "t,X,Xdot,X_over_t,perturb_L2_v,perturb_L2_u,perturb_H1,sup_v,sup_u,sup_exact,"
         "went,G_S,G_R,G1,D,D1,D2,F1_L2,F2_L2,F3_L2,mass_residual";
}

std::string diagnostic_csv_line(const DiagnosticRecord& r) {
  const double vals[] = {r.t,    r.X,  r.Xdot, r.X_over_t, r.perturb_L2_v, r.perturb_L2_u,
                         r.perturb_H1, r.sup_v, r.sup_u, r.sup_exact, r.went, r.G_S,
                         r.G_R,  r.G1, r.D,    r.D1,       r.D2,           r.F1_L2,
                         r.F2_L2, r.F3_L2, r.mass_residual};
  std::string line;
  for (std::size_t i = 0; i < std::size(vals); ++i) {
    if (i) line += ",";
    line += format_full(vals[i]);
  }
  return line;
}

}  // namespace cwlab
