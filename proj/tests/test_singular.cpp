#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "descat/catenoid.hpp"
#include "descat/lorentz.hpp"
#include "descat/singular.hpp"
#include "descat/trochoid.hpp"

using namespace descat;

namespace {

constexpr double kPi = std::numbers::pi;
const SurfaceSpec kOne{Family::TypeI, 2};
const SurfaceSpec kTwo{Family::TypeII, 2};

}  // namespace

TEST_CASE("singular residual values and guards") {
  CHECK(singular_residual(kOne, std::sqrt(2.0), kPi / 2.0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(singular_residual(kOne, 1.0, 0.0) == doctest::Approx(3.0));
  CHECK(singular_residual(kTwo, 5.0, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)singular_residual(kOne, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)singular_residual(kTwo, -1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(
      (void)singular_residual(SurfaceSpec{Family::AdS, 2}, 1.0, 0.0),
      std::invalid_argument);
}

TEST_CASE("region classification on the type-I domain") {
  CHECK(classify_region(2, 2.0, 0.0) == RegionLabel::APlus);
  CHECK(classify_region(2, 0.1, kPi / 2.0) == RegionLabel::BPlus);
  CHECK(classify_region(2, -0.1, 0.0) == RegionLabel::AMinus);
  CHECK(classify_region(2, std::sqrt(2.0), kPi / 2.0) ==
        RegionLabel::Singular);
  CHECK_THROWS_AS((void)classify_region(2, 0.0, 0.0), std::domain_error);

  // Large |r| always lands in A on either sheet.
  for (int m = 2; m <= 5; ++m)
    for (double theta : {0.0, 0.9, 2.7}) {
      CHECK(classify_region(m, 5.0, theta) == RegionLabel::APlus);
      CHECK(classify_region(m, -5.0, theta) == RegionLabel::AMinus);
    }
}

TEST_CASE("cone points match the closed form and sit at t = z = 0") {
  for (int m = 2; m <= 6; ++m)
    for (int k = 0; k < 2 * m; ++k) {
      const Point4 p = cone_point(m, k);
      const double a = alpha_k(m, k);
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      CHECK(p.t == 0.0);
      CHECK(p.z == 0.0);
      CHECK(std::abs(p.x + sign * std::sin(a)) <= 1e-15);
      CHECK(std::abs(p.y - sign * std::cos(a)) <= 1e-15);
      CHECK(std::abs(minkowski_inner(p, p, Signature::DeSitter) - 1.0) <=
            1e-14);

      // The whole ray collapses there.
      for (double r : {0.2, 1.0, 4.0})
        CHECK(max_coord_dist(components_II(m, r, a), p) <= 1e-12);
    }
}

TEST_CASE("null lines attached to the singular images") {
  for (int m : {2, 3}) {
    for (int k = 0; k < 2 * m; ++k) {
      const auto lines_i = light_lines(SurfaceSpec{Family::TypeI, m}, k);
      REQUIRE(lines_i.size() == 1);
      const auto& li = lines_i[0];
      const Vec2 g = gamma(m, alpha_k(m, k));
      CHECK(li.base.t == 0.0);
      CHECK(std::abs(li.base.x - g.x) <= 1e-15);
      CHECK(std::abs(li.base.y - g.y) <= 1e-15);
      CHECK(li.base.z == 0.0);
      CHECK(li.direction.t == 1.0);
      CHECK(li.direction.z == -1.0);

      const auto lines_ii = light_lines(SurfaceSpec{Family::TypeII, m}, k);
      REQUIRE(lines_ii.size() == 2);

      const auto ext = extension_lines(m, k);
      REQUIRE(ext.size() == 2);
      CHECK(max_coord_dist(ext[0].base, cone_point(m, k)) == 0.0);
      CHECK(max_coord_dist(ext[1].base, cone_point(m, k)) == 0.0);

      for (const auto& group : {lines_i, lines_ii, ext})
        for (const auto& line : group) {
          // Null direction, and the whole line stays on the quadric.
          CHECK(std::abs(minkowski_inner(line.direction, line.direction,
                                         Signature::DeSitter)) <= 1e-15);
          for (double t : {-2.0, 0.5, 3.0}) {
            const Point4 p = line.at(t);
            CHECK(std::abs(minkowski_inner(p, p, Signature::DeSitter) - 1.0) <=
                  1e-12);
          }
        }
    }
  }
}

TEST_CASE("declared limit table") {
  CHECK(limit_table(SurfaceSpec{Family::TypeI, 2}, LimitScenario::APlus).tag ==
        IdealTag::PMinus);
  CHECK(limit_table(SurfaceSpec{Family::TypeI, 3}, LimitScenario::AMinus).tag ==
        IdealTag::PMinus);
  CHECK(limit_table(SurfaceSpec{Family::TypeI, 3}, LimitScenario::RMinusInfty)
            .tag == IdealTag::NMinus);
  CHECK(limit_table(SurfaceSpec{Family::TypeI, 2}, LimitScenario::RMinusInfty)
            .tag == IdealTag::PPlus);
  CHECK(limit_table(kTwo, LimitScenario::RInftyCosPos).tag == IdealTag::NMinus);
  CHECK(limit_table(kTwo, LimitScenario::RZeroCosNeg).tag == IdealTag::PMinus);

  CHECK_THROWS_AS(
      (void)limit_table(SurfaceSpec{Family::AdS, 2}, LimitScenario::APlus),
      std::invalid_argument);
  CHECK_THROWS_AS((void)limit_table(kOne, LimitScenario::RZeroCosPos),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)limit_table(kTwo, LimitScenario::BMinus),
                  std::invalid_argument);
}

TEST_CASE("empirical limit of a concrete divergent sequence") {
  const auto seq = [](long long j) {
    return DomainPoint{static_cast<double>(j), 0.0};
  };
  const SequenceLimit lim = limit_of_sequence(kOne, seq, 1000000);
  REQUIRE(lim.status == SequenceLimit::Status::ConvergedToIdeal);
  CHECK(*lim.ideal == IdealTag::NMinus);
  CHECK(lim.mismatch <= 1e-3);
}

TEST_CASE("bounded sequences are reported as bounded") {
  const auto seq = [](long long j) {
    return DomainPoint{1.0 + 0.1 * std::sin(0.1 * j), 0.3};
  };
  CHECK(limit_of_sequence(kOne, seq).status ==
        SequenceLimit::Status::Bounded);
}

TEST_CASE("scenario sequences stay inside their region") {
  for (int m : {2, 3}) {
    const SurfaceSpec spec{Family::TypeI, m};
    const auto expect = [&](LimitScenario sc) -> RegionLabel {
      switch (sc) {
        case LimitScenario::RPlusInfty:
        case LimitScenario::APlus:
          return RegionLabel::APlus;
        case LimitScenario::RMinusInfty:
        case LimitScenario::AMinus:
          return RegionLabel::AMinus;
        case LimitScenario::BPlus:
          return RegionLabel::BPlus;
        default:
          return RegionLabel::BMinus;
      }
    };
    for (LimitScenario sc :
         {LimitScenario::RPlusInfty, LimitScenario::RMinusInfty,
          LimitScenario::APlus, LimitScenario::AMinus, LimitScenario::BPlus,
          LimitScenario::BMinus}) {
      const auto seq = scenario_sequence(spec, sc, 99);
      // r -> +-inf leaves B eventually, so only check indices where the
      // region claim is meaningful for every scenario.
      for (long long j : {100LL, 10000LL, 1000000LL}) {
        const DomainPoint d = seq(j);
        CHECK(classify_region(m, d.r, d.theta) == expect(sc));
      }
    }
  }
}

TEST_CASE("fitted trochoid scale is -1, stable across m") {
  const double c2 = trochoid_scale(2);
  CHECK(c2 == doctest::Approx(-1.0).epsilon(1e-10));
  for (int m = 3; m <= 5; ++m)
    CHECK(std::abs(trochoid_scale(m) - c2) <= 1e-10);
}

TEST_CASE("extension residual vanishes on the surface and not off it") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> logr(std::log(0.1), std::log(5.0));
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  for (int m : {2, 3}) {
    const SurfaceSpec spec{Family::TypeII, m};
    for (int i = 0; i < 50; ++i) {
      const Point4 p = components_II(m, std::exp(logr(rng)), ang(rng));
      CHECK(extension_residual(spec, p) <= 1e-9);
    }
    Point4 off = components_II(m, 1.3, 0.2);
    off.t += 0.05;
    CHECK(extension_residual(spec, off) > 1e-3);
  }
}
