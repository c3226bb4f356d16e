#include "cwlab/thermo.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace cwlab;

namespace {
const GasParams g53(5.0 / 3.0);
}

TEST_CASE("gas params reject gamma <= 1") {
  CHECK_THROWS_AS(GasParams(1.0), std::domain_error);
  CHECK_THROWS_AS(GasParams(0.9), std::domain_error);
}

TEST_CASE("pressure and derivatives at unit volume") {
  const PressureDerivs pd = pressure_derivs(1.0, g53);
  CHECK(pd.p == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pd.dp == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
  CHECK(pd.d2p == doctest::Approx(40.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("pressure against extended-precision evaluation") {
  const PressureDerivs pd = pressure_derivs(0.9, g53);
  CHECK(pd.p == doctest::Approx(static_cast<double>(oracle::pressure(0.9L, 5.0L / 3.0L)))
                    .epsilon(1e-14));
  CHECK(pd.dp == doctest::Approx(static_cast<double>(oracle::dpressure(0.9L, 5.0L / 3.0L)))
                     .epsilon(1e-14));
  CHECK(pd.p == doctest::Approx(1.19196).epsilon(1e-5));
  CHECK(pd.dp == doctest::Approx(-2.20734).epsilon(1e-4));
  CHECK_THROWS_AS(pressure(0.0, g53), std::domain_error);
  CHECK_THROWS_AS(pressure(-1.0, g53), std::domain_error);
}

TEST_CASE("internal energy closed values and derivative") {
  CHECK(internal_energy(1.0, g53) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(internal_energy(1.0, GasParams(2.0)) == doctest::Approx(1.0).epsilon(1e-15));
  const double h = 1e-6;
  const double fd = (internal_energy(1.0 + h, g53) - internal_energy(1.0 - h, g53)) / (2.0 * h);
  CHECK(fd == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("eigenvalues") {
  const Eigenvalues ev1 = eigenvalues(1.0, g53);
  CHECK(ev1.lambda2 == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
  const Eigenvalues ev = eigenvalues(0.9, g53);
  CHECK(ev.lambda2 ==
        doctest::Approx(static_cast<double>(oracle::lambda2(0.9L, 5.0L / 3.0L))).epsilon(1e-14));
  CHECK(ev.lambda2 == doctest::Approx(1.48572).epsilon(1e-5));
  CHECK(ev.lambda1 + ev.lambda2 == 0.0);
  CHECK_THROWS_AS(eigenvalues(0.0, g53), std::domain_error);
}

TEST_CASE("riemann invariant and its antiderivative property") {
  CHECK(riemann_invariant_z1(1.0, 0.0, g53) ==
        doctest::Approx(3.0 * std::sqrt(5.0 / 3.0)).epsilon(1e-14));
  CHECK(riemann_invariant_z1(0.9, 0.138551, g53) ==
        doctest::Approx(static_cast<double>(0.138551L + oracle::inv_A(0.9L, 5.0L / 3.0L)))
            .epsilon(1e-12));
  // dA/dv = lambda1 by finite differences
  const double h = 1e-6;
  const double fd =
      (lambda1_antiderivative(1.0 + h, g53) - lambda1_antiderivative(1.0 - h, g53)) / (2.0 * h);
  CHECK(std::abs(fd - lambda1(1.0, g53)) < 1e-8);
}

TEST_CASE("relative pressure basics") {
  CHECK(relative_pressure(1.0, 1.0, g53) == 0.0);
  const double direct = pressure(1.1, g53) - 1.0 + 5.0 / 3.0 * 0.1;
  CHECK(relative_pressure(1.1, 1.0, g53) == doctest::Approx(direct).epsilon(1e-14));
  // Taylor remainder quadrature cross-check
  const long double quad = oracle::relative_by_quadrature(
      [](long double s) { return 5.0L / 3.0L * (5.0L / 3.0L + 1.0L) * oracle::pow_ld(s, -5.0L / 3.0L - 2.0L); },
      1.1L, 1.0L);
  CHECK(relative_pressure(1.1, 1.0, g53) ==
        doctest::Approx(static_cast<double>(quad)).epsilon(1e-10));
}

TEST_CASE("relative pressure quadratic-ratio limit") {
  // p(v|w)/|p(v)-p(w)|^2 -> (gamma+1)/(2 gamma p(w)) = 0.8 at w = 1
  for (double v : {1.0 - 1e-3, 1.0 + 1e-3}) {
    const double dp = pressure(v, g53) - 1.0;
    const double ratio = relative_pressure(v, 1.0, g53) / (dp * dp);
    CHECK(ratio == doctest::Approx(0.8).epsilon(0.01));
  }
}

TEST_CASE("relative internal energy basics and ratio limit") {
  CHECK(relative_internal_energy(0.9, 0.9, g53) == 0.0);
  const double q = relative_internal_energy(1.01, 1.0, g53);
  CHECK(q == doctest::Approx(0.5 * 5.0 / 3.0 * 1e-4).epsilon(0.02));
  const long double quad = oracle::relative_by_quadrature(
      [](long double s) { return 5.0L / 3.0L * oracle::pow_ld(s, -5.0L / 3.0L - 1.0L); }, 1.01L,
      1.0L);
  CHECK(q == doctest::Approx(static_cast<double>(quad)).epsilon(1e-9));
  // Q(v|w)/|p(v)-p(w)|^2 -> p(w)^(-1/gamma-1)/(2 gamma) = 0.3 at w = 1
  for (double v : {1.0 - 1e-3, 1.0 + 1e-3}) {
    const double dp = pressure(v, g53) - 1.0;
    CHECK(relative_internal_energy(v, 1.0, g53) / (dp * dp) ==
          doctest::Approx(0.3).epsilon(0.01));
  }
}

TEST_CASE("relative quantities nonnegative over random pairs") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  double min_p = 1e300, min_q = 1e300;
  for (int i = 0; i < 10000; ++i) {
    const double v = dist(rng), w = dist(rng);
    min_p = std::min(min_p, relative_pressure(v, w, g53));
    min_q = std::min(min_q, relative_internal_energy(v, w, g53));
  }
  CHECK(min_p >= -1e-12);
  CHECK(min_q >= -1e-12);
}

TEST_CASE("region-constant bound |v-w|^2 <= C min(p(v|w), Q(v|w))") {
  std::mt19937_64 rng(77);
  const double v_ref = 0.8;
  std::uniform_real_distribution<double> wd(0.02, 2.0 * v_ref), vd(0.02, 3.0 * v_ref);
  double c_obs = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double w = wd(rng), v = vd(rng);
    if (std::abs(v - w) < 1e-8) continue;
    const double d2 = (v - w) * (v - w);
    c_obs = std::max(c_obs, d2 / relative_pressure(v, w, g53));
    c_obs = std::max(c_obs, d2 / relative_internal_energy(v, w, g53));
  }
  CHECK(std::isfinite(c_obs));
  CHECK(c_obs < 100.0);
}

TEST_CASE("relative entropy") {
  CHECK(relative_entropy(1.0, 0.0, 1.0, 0.0, g53) == 0.0);
  CHECK(relative_entropy(1.0, 0.1, 1.0, 0.0, g53) == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(relative_entropy(1.01, 0.0, 1.0, 0.0, g53) ==
        doctest::Approx(relative_internal_energy(1.01, 1.0, g53)).epsilon(1e-15));
}
