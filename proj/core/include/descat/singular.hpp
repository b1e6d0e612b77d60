#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "descat/catenoid.hpp"
#include "descat/projection.hpp"

namespace descat {

// ===== Singular sets and domain regions =====

// r^m + 2 cos m0 for type I (both sheets), cos m0 for type II. Zero exactly
// on the singular set, where the induced metric degenerates (|g| = 1).
double singular_residual(const SurfaceSpec& spec, double r, double theta);

// Decomposition of the type-I domain: with e = sgn(r),
//   A = { e^m (r^m + 2 cos m0) > 0 },  B = { ... < 0 },
// split by sheet (+ for r > 0, - for r < 0). A contains neighborhoods of
// r = +-inf.
enum class RegionLabel { APlus, AMinus, BPlus, BMinus, Singular };

const char* region_name(RegionLabel label);

RegionLabel classify_region(int m, double r, double theta,
                            double singular_tol = 1e-12);

// ===== Cone points and attached null lines =====

// f^II_m collapses each ray sigma_k to (-1)^k (0, -sin a_k, cos a_k, 0).
Point4 cone_point(int m, int k);

struct LightLine {
  Point4 base;       // the t = 0 point
  Point4 direction;  // null vector
  Point4 at(double t) const { return base + t * direction; }
};

// Type I: one line {(t, gamma_m(a_k), -t)} per k. Type II: the two nulls
// {(t, -sin a_k, cos a_k, +-t)}, quoted with the printed base; note the
// printed base agrees with cone_point(m,k) only up to the (-1)^k factor, so
// for odd m and odd k these printed lines sit across the extension set from
// the cone point (see extension_lines for the cone-anchored pair).
std::vector<LightLine> light_lines(const SurfaceSpec& spec, int k);

// The two null lines through cone_point(m,k) itself; these are the ones
// contained in the type-II extension set for every m and are what the
// figures draw.
std::vector<LightLine> extension_lines(int m, int k);

// ===== Limit classification at the ideal boundary =====

enum class LimitScenario {
  // Type I, theorem table.
  RPlusInfty,
  RMinusInfty,
  APlus,
  AMinus,
  BPlus,
  BMinus,
  // Type II, split by end and by the sign of cos m0 on the sector.
  RInftyCosPos,
  RInftyCosNeg,
  RZeroCosPos,
  RZeroCosNeg,
};

const char* scenario_name(LimitScenario sc);

// Declared ideal limit for a divergence scenario. Type I follows the
// theorem's table (with the odd/even split for r -> -inf and the region
// labels); type II's four entries are derived from the component signs:
// x3/x0 -> +1 as r -> inf, -> -1 as r -> 0, and sgn x0 = -sgn(cos m0).
IdealPoint limit_table(const SurfaceSpec& spec, LimitScenario sc);

// Empirical version: evaluates the surface along a domain sequence, demands
// |x0| grow monotonically along a geometric ladder of probe indices up to
// tail_index, projects the tail through the hollowball map, and matches
// against the four ideal points.
struct SequenceLimit {
  enum class Status { ConvergedToIdeal, Bounded, NoMatch };
  Status status = Status::Bounded;
  std::optional<IdealTag> ideal;
  HollowballPoint tail_projection{};
  double mismatch = 0.0;  // distance to the matched/nearest ideal point
  double tail_x0 = 0.0;
};

SequenceLimit limit_of_sequence(
    const SurfaceSpec& spec,
    const std::function<DomainPoint(long long)>& seq,
    long long tail_index = 1000000, double tol = 1e-3);

// Randomized divergent sequence staying inside the named scenario's region:
// linear blow-up / harmonic decay in r with a safely bounded theta wobble
// (full wander for the r -> +-inf ends, where the region eats every angle).
std::function<DomainPoint(long long)> scenario_sequence(const SurfaceSpec& spec,
                                                        LimitScenario sc,
                                                        std::uint64_t seed);

// ===== The extension set C^II_m =====

// Scale constant c in (x1,x2) = c * gamma_m(theta), resolved by a
// least-squares fit over a theta grid rather than hard-coded; the quoted
// source text and its own cone-point formula disagree on it (-2 vs -1).
double trochoid_scale(int m);

// Distance-like residual of p against the two membership conditions
//   (x,y) = c gamma_m(theta),  t^2 - z^2 = ((m^2-1)/(2m))^2 cos^2 m0:
// min over sampled theta of the max of the two deviations, with one
// golden-section refinement pass around the best sample. ~0 on C^II_m.
double extension_residual(const SurfaceSpec& spec, const Point4& p,
                          int theta_samples = 720);

}  // namespace descat
