#include "cwlab/solver.hpp"

#include <cmath>

#include "cwlab/errors.hpp"
#include "doctest.h"

using namespace cwlab;

namespace {

RunConfig trivial_config() {
  RunConfig rc;
  rc.v_m = 1.0;
  rc.v_minus = 1.0;
  rc.xi_min = -20.0;
  rc.xi_max = 20.0;
  rc.n_cells = 257;
  rc.t_end = 1.0;
  return rc;
}

RunConfig baseline_config() {
  RunConfig rc;  // defaults are the baseline wave
  return rc;
}

PerturbationSpec gaussian(PerturbationSpec::Target target, double amp, double center,
                          double width) {
  PerturbationSpec p;
  p.target = target;
  p.amplitude = amp;
  p.center = center;
  p.width = width;
  return p;
}

double l2_diff(const std::vector<double>& a, const std::vector<double>& b, double dxi) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s * dxi);
}

}  // namespace

TEST_CASE("initial data: zero perturbation reproduces the background exactly") {
  RunConfig rc = baseline_config();
  rc.n_cells = 512;
  rc.t_end = 1.0;
  const RunSetup setup = build_setup(rc);
  const InitialData init = initial_data(setup, {});
  CHECK(init.perturb_h1 == 0.0);
  const BackgroundRow row =
      background_row(0.0, 0.0, setup.xi, setup.shock, setup.rare, setup.weight);
  for (std::size_t i = 0; i < setup.xi.size(); ++i) {
    CHECK(init.state.v[i] == row.vbar[i]);
    CHECK(init.state.u[i] == row.ubar[i]);
  }
}

TEST_CASE("initial data: gaussian H1 norm against the closed form") {
  RunConfig rc = trivial_config();
  rc.xi_min = -60.0;
  rc.xi_max = 60.0;
  rc.n_cells = 4097;
  const RunSetup setup = build_setup(rc);
  const double amp = 0.01, width = 5.0;
  const InitialData init =
      initial_data(setup, {gaussian(PerturbationSpec::Target::v, amp, 0.0, width)});
  // ||g||_L2^2 = A^2 w sqrt(pi), ||g'||_L2^2 = A^2 sqrt(pi)/(2w)
  const double h1 =
      amp * std::sqrt(std::sqrt(M_PI) * (width + 0.5 / width));
  CHECK(init.perturb_h1 == doctest::Approx(h1).epsilon(1e-5));
}

TEST_CASE("initial data: perturbation leaves the far field untouched") {
  RunConfig rc = baseline_config();
  rc.n_cells = 1024;
  rc.t_end = 1.0;
  const RunSetup setup = build_setup(rc);
  const InitialData plain = initial_data(setup, {});
  const InitialData pert =
      initial_data(setup, {gaussian(PerturbationSpec::Target::v, 0.01, 0.0, 5.0)});
  const std::size_t last = setup.xi.size() - 1;
  CHECK(std::abs(pert.state.v[last] - plain.state.v[last]) < 1e-12);
  CHECK(std::abs(pert.state.v[0] - plain.state.v[0]) < 1e-12);
}

TEST_CASE("initial data rejects non-positive volumes") {
  RunConfig rc = trivial_config();
  rc.amplitude_cap = 2.0;
  const RunSetup setup = build_setup(rc);
  CHECK_THROWS_AS(initial_data(setup, {gaussian(PerturbationSpec::Target::v, -1.5, 0.0, 3.0)}),
                  ConfigError);
}

TEST_CASE("rhs vanishes on a constant equilibrium state") {
  const RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  const InitialData init = initial_data(setup, {});
  const Tendency k = rhs(init.state, setup);
  for (std::size_t i = 0; i < init.state.v.size(); ++i) {
    CHECK(k.dv[i] == 0.0);
    CHECK(k.du[i] == 0.0);
  }
  CHECK(k.dX == 0.0);
}

TEST_CASE("rhs matches the analytic derivative on a manufactured sine field") {
  auto interior_error = [](int n) {
    RunConfig rc = trivial_config();
    rc.n_cells = n;
    const RunSetup setup = build_setup(rc);
    SimState s;
    s.t = 0.0;
    s.X = 0.0;
    const double k = 0.5;
    s.v.resize(setup.xi.size());
    s.u.assign(setup.xi.size(), 0.0);
    for (std::size_t i = 0; i < setup.xi.size(); ++i)
      s.v[i] = 1.0 + 0.01 * std::sin(k * setup.xi[i]);
    const Tendency ten = rhs(s, setup);
    double err = 0.0;
    const double sigma = setup.cfg.sigma;
    for (std::size_t i = 1; i + 1 < setup.xi.size(); ++i) {
      const double vx = 0.01 * k * std::cos(k * setup.xi[i]);
      const double pd = pressure_derivs(s.v[i], setup.cfg.gas).dp;
      err = std::max(err, std::abs(ten.dv[i] - sigma * vx));
      err = std::max(err, std::abs(ten.du[i] - (sigma * 0.0 - pd * vx)));
    }
    return err;
  };
  const double e1 = interior_error(257);
  const double e2 = interior_error(513);
  CHECK(e1 / e2 > std::pow(2.0, 1.9));
}

TEST_CASE("transport term is exact on linear data") {
  RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  SimState s;
  s.t = 0.0;
  s.X = 0.0;
  const std::size_t n = setup.xi.size();
  s.v.resize(n);
  s.u.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) s.v[i] = 2.0 + 0.05 * setup.xi[i];
  const Tendency ten = rhs(s, setup);
  for (std::size_t i = 1; i + 1 < n; ++i)
    CHECK(std::abs(ten.dv[i] - setup.cfg.sigma * 0.05) < 1e-12);
}

TEST_CASE("advance keeps an equilibrium state unchanged") {
  const RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  InitialData init = initial_data(setup, {});
  const std::vector<double> v0 = init.state.v;
  advance(init.state, setup, 0.5 * setup.cfl * stable_dt(init.state, setup));
  for (std::size_t i = 0; i < v0.size(); ++i)
    CHECK(std::abs(init.state.v[i] - v0[i]) < 1e-15);
  CHECK(init.state.X == 0.0);
}

TEST_CASE("advance rejects an unstable step") {
  const RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  InitialData init = initial_data(setup, {});
  CHECK_THROWS_AS(advance(init.state, setup, 10.0 * stable_dt(init.state, setup)), StepError);
}

TEST_CASE("stable step combines the transport and diffusion limits") {
  const RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  const InitialData init = initial_data(setup, {});
  const double dxi = setup.grid.dxi();
  const double smax = setup.cfg.sigma + lambda2(1.0, setup.cfg.gas);
  CHECK(stable_dt(init.state, setup) ==
        doctest::Approx(std::min(dxi / smax, 0.5 * dxi * dxi)).epsilon(1e-12));
}

TEST_CASE("time integration self-converges at fourth order") {
  RunConfig rc = trivial_config();
  const RunSetup setup = build_setup(rc);
  auto integrate = [&](double dt, int steps) {
    InitialData init = initial_data(
        setup, {gaussian(PerturbationSpec::Target::v, 0.01, 0.0, 2.0),
                gaussian(PerturbationSpec::Target::u, 0.01, 1.0, 2.0)});
    for (int i = 0; i < steps; ++i) advance(init.state, setup, dt);
    return init.state;
  };
  const double dt = 0.01;
  const SimState s1 = integrate(dt, 50);
  const SimState s2 = integrate(dt / 2.0, 100);
  const SimState s3 = integrate(dt / 4.0, 200);
  const double dxi = setup.grid.dxi();
  const double e1 = l2_diff(s1.v, s2.v, dxi) + l2_diff(s1.u, s2.u, dxi);
  const double e2 = l2_diff(s2.v, s3.v, dxi) + l2_diff(s2.u, s3.u, dxi);
  const double order = std::log2(e1 / e2);
  CHECK(order >= 3.5);
}

TEST_CASE("shift stays put over the first step of an unperturbed run") {
  RunConfig rc = baseline_config();
  rc.n_cells = 1024;
  rc.t_end = 1.0;
  const RunSetup setup = build_setup(rc);
  InitialData init = initial_data(setup, {});
  advance(init.state, setup, setup.cfl * stable_dt(init.state, setup));
  // the later stages see O(dt) of background residual, so X moves at O(dt^2)
  CHECK(std::abs(init.state.X) < 1e-7);
}

TEST_CASE("run with t_end = 0 emits the initial record only") {
  RunConfig rc = trivial_config();
  rc.t_end = 0.0;
  const RunResult res = run(rc);
  CHECK(res.records.size() == 1);
  CHECK(res.records[0].t == 0.0);
  CHECK(res.records[0].went == 0.0);
}

TEST_CASE("identical configs give identical records") {
  RunConfig rc = trivial_config();
  rc.t_end = 0.5;
  rc.perturbations = {gaussian(PerturbationSpec::Target::v, 0.01, 0.0, 2.0)};
  const RunResult a = run(rc);
  const RunResult b = run(rc);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i)
    CHECK(diagnostic_csv_line(a.records[i]) == diagnostic_csv_line(b.records[i]));
}

TEST_CASE("volume band violation ends the run with a blow-up error") {
  RunConfig rc = baseline_config();
  rc.n_cells = 512;
  rc.t_end = 5.0;
  rc.amplitude_cap = 5.0;
  rc.perturbations = {gaussian(PerturbationSpec::Target::v, 2.5, 0.0, 3.0)};
  CHECK_THROWS_AS(run(rc), BlowupError);
}

TEST_CASE("unperturbed baseline stays near the composite (regression)") {
  RunConfig rc = baseline_config();
  rc.n_cells = 1024;
  rc.t_end = 50.0;
  rc.output_interval = 5.0;
  const RunResult res = run(rc);
  double max_sup = 0.0;
  for (const DiagnosticRecord& r : res.records)
    max_sup = std::max(max_sup, std::max(r.sup_v, r.sup_u));
  // Only the wave-interaction error drives the fields off the background; the
  // measured level is ~3.6e-2, dominated by the smooth rarefaction lagging
  // the solution near the fan corners. Frozen as a regression bound.
  CHECK(max_sup < 4.5e-2);
}
