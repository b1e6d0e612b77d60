#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "descat/catenoid.hpp"
#include "descat/diffgeo.hpp"
#include "descat/lorentz.hpp"
#include "descat/singular.hpp"

using namespace descat;

namespace {

constexpr double kPi = std::numbers::pi;

// Round sphere t = t0 inside S^3_1; closed-form H = |t0| / sqrt(1 + t0^2).
SurfaceFn sphere_slice(double t0) {
  const double rad = std::sqrt(1.0 + t0 * t0);
  return [t0, rad](double u, double v) {
    return Point4{t0, rad * std::sin(u) * std::cos(v),
                  rad * std::sin(u) * std::sin(v), rad * std::cos(u)};
  };
}

// Hyperboloid slice z = z0 inside H^3_1(-1); |H| = |z0| / sqrt(1 + z0^2).
SurfaceFn hyperbolic_slice(double z0) {
  const double rad = std::sqrt(1.0 + z0 * z0);
  return [z0, rad](double u, double v) {
    return Point4{rad * std::sinh(u), rad * std::cosh(u) * std::cos(v),
                  rad * std::cosh(u) * std::sin(v), z0};
  };
}

SurfaceFn wrap(const SurfaceSpec& spec) {
  return [spec](double u, double v) { return surface_point(spec, u, v); };
}

}  // namespace

TEST_CASE("slice oracles with closed-form mean curvature") {
  const auto s = sphere_slice(0.75);
  const auto f = fundamental_forms(s, Signature::DeSitter, 1.1, 0.4);
  CHECK(f.H == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(f.detI > 0.0);

  const auto hs = hyperbolic_slice(0.75);
  const auto g = fundamental_forms(hs, Signature::AntiDeSitter, 0.3, 1.2);
  CHECK(std::abs(g.H) == doctest::Approx(0.6).epsilon(1e-6));
  CHECK(g.detI < 0.0);  // timelike
}

TEST_CASE("normal is orthogonal to the tangent plane and unit") {
  const SurfaceSpec spec{Family::TypeI, 2};
  const auto f = fundamental_forms(wrap(spec), Signature::DeSitter, 1.3, 0.7);
  const Point4 p = surface_point(spec, 1.3, 0.7);
  CHECK(std::abs(minkowski_inner(f.normal, p, Signature::DeSitter)) <= 1e-8);
  CHECK(minkowski_inner(f.normal, f.normal, Signature::DeSitter) ==
        doctest::Approx(-1.0).epsilon(1e-9));

  const double h = 1e-5;
  const Point4 fu = (1.0 / (2 * h)) * (surface_point(spec, 1.3 + h, 0.7) -
                                       surface_point(spec, 1.3 - h, 0.7));
  // Normal solved against its own (coarser) difference stencil, so allow the
  // truncation gap between the two tangent estimates.
  CHECK(std::abs(minkowski_inner(f.normal, fu, Signature::DeSitter)) <= 1e-6);
}

TEST_CASE("both families have constant mean curvature one") {
  for (Family fam : {Family::TypeI, Family::TypeII})
    for (int m : {2, 3, 5}) {
      const SurfaceSpec spec{fam, m};
      for (double r : {0.6, 1.1, 1.9})
        for (int i = 0; i < 8; ++i) {
          const double theta = 2.0 * kPi * i / 8.0 + 0.05;
          if (std::abs(singular_residual(spec, r, theta)) < 0.3)
            continue;  // stay away from the degenerate locus
          const auto f =
              fundamental_forms(wrap(spec), Signature::DeSitter, r, theta);
          CHECK(f.H == doctest::Approx(1.0).epsilon(1e-4));
        }
    }
}

TEST_CASE("AdS cousin has |H| = 1") {
  for (int m : {2, 3}) {
    const SurfaceSpec spec{Family::AdS, m};
    for (double s : {-1.0, 0.2, 0.9})
      for (double theta : {0.07, 1.1, 2.3}) {
        if (std::abs(std::cos(m * theta)) < 0.3) continue;
        const auto f =
            fundamental_forms(wrap(spec), Signature::AntiDeSitter, s, theta);
        CHECK(std::abs(f.H) == doctest::Approx(1.0).epsilon(1e-3));
      }
  }
}

TEST_CASE("Richardson step-halving confirms convergence order") {
  // Steps chosen where h^2 truncation still dominates rounding, so halving
  // shrinks the successive differences by about 4.
  const SurfaceSpec spec{Family::TypeI, 3};
  const auto fn = wrap(spec);
  for (double r : {0.8, 1.5})
    for (double theta : {0.3, 2.1}) {
      const double h1 =
          fundamental_forms(fn, Signature::DeSitter, r, theta, 1e-3).H;
      const double h2 =
          fundamental_forms(fn, Signature::DeSitter, r, theta, 5e-4).H;
      const double h3 =
          fundamental_forms(fn, Signature::DeSitter, r, theta, 2.5e-4).H;
      CHECK(std::abs(h1 - h2) <= 10.0 * std::abs(h2 - h3) + 1e-9);
    }
}

TEST_CASE("singular points are rejected, h range is validated") {
  const SurfaceSpec spec{Family::TypeII, 2};
  const auto fn = wrap(spec);
  // cos(2 theta) = 0 at theta = pi/4: metric degenerates on the ray.
  CHECK_THROWS_AS(
      (void)fundamental_forms(fn, Signature::DeSitter, 1.0, kPi / 4.0),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)fundamental_forms(fn, Signature::DeSitter, 1.0, 0.3, 1e-8),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)fundamental_forms(fn, Signature::DeSitter, 1.0, 0.3, 1e-2),
      std::invalid_argument);
}

TEST_CASE("metric determinant matches the forms at regular points") {
  const SurfaceSpec spec{Family::TypeI, 2};
  const auto fn = wrap(spec);
  for (double r : {0.7, 1.4})
    for (double theta : {0.2, 1.9}) {
      const auto f = fundamental_forms(fn, Signature::DeSitter, r, theta, 1e-4);
      const double d =
          metric_determinant(fn, Signature::DeSitter, r, theta, 1e-4);
      CHECK(d == doctest::Approx(f.detI).epsilon(1e-8));
    }
}
