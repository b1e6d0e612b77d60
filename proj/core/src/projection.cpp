#include "descat/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace descat {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

void require_on_quadric(const Point4& p, Signature sig, double tol,
                        const char* who) {
  const double target = space_form_sign(sig);
  const double scale = std::max(1.0, euclidean_norm_sq(p));
  if (std::abs(minkowski_inner(p, p, sig) - target) > tol * scale) {
    throw std::domain_error(std::string(who) + ": point not on the quadric");
  }
}

}  // namespace

double HollowballPoint::norm() const { return std::sqrt(x * x + y * y + z * z); }

IdealPoint ideal_point(IdealTag tag) {
  const double in = kSqrt2 - 1.0;
  const double out = kSqrt2 + 1.0;
  switch (tag) {
    case IdealTag::PPlus: return {tag, {0.0, 0.0, in}};
    case IdealTag::PMinus: return {tag, {0.0, 0.0, -in}};
    case IdealTag::NPlus: return {tag, {0.0, 0.0, out}};
    default: return {tag, {0.0, 0.0, -out}};
  }
}

std::array<IdealPoint, 4> ideal_points() {
  return {ideal_point(IdealTag::PPlus), ideal_point(IdealTag::PMinus),
          ideal_point(IdealTag::NPlus), ideal_point(IdealTag::NMinus)};
}

const char* ideal_name(IdealTag tag) {
  switch (tag) {
    case IdealTag::PPlus: return "p+";
    case IdealTag::PMinus: return "p-";
    case IdealTag::NPlus: return "n+";
    default: return "n-";
  }
}

HollowballPoint hollowball_project(const Point4& p, double tol) {
  require_on_quadric(p, Signature::DeSitter, tol, "hollowball_project");
  // t + sqrt(2t^2+1) > 0 for every real t; no cancellation for t < 0 worth
  // rewriting at the magnitudes we project.
  const double delta = p.t + std::sqrt(2.0 * p.t * p.t + 1.0);
  return {p.x / delta, p.y / delta, p.z / delta};
}

TorusPoint solid_torus_project(const Point4& p, double tol) {
  require_on_quadric(p, Signature::AntiDeSitter, tol, "solid_torus_project");
  const double rho = std::hypot(p.x, p.y);
  if (rho <= 1e-12) {
    throw std::domain_error("solid_torus_project: rho = sqrt(x^2+y^2) ~ 0");
  }
  const double stretch = 1.0 + p.t / rho;
  return {stretch * p.x / rho, stretch * p.y / rho, p.z / rho};
}

bool in_solid_torus(const TorusPoint& q) {
  const double ring = std::hypot(q.u, q.v) - 1.0;
  return ring * ring + q.w * q.w < 1.0;
}

}  // namespace descat
