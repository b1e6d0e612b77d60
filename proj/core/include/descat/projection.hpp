#pragma once

#include <array>

#include "descat/lorentz.hpp"

namespace descat {

// ===== Hollowball model of S^3_1 =====
//
// Pi(t,x,y,z) = (x,y,z)/delta with delta = t + sqrt(2t^2 + 1); maps S^3_1
// diffeomorphically onto the open shell sqrt(2)-1 < |xi| < sqrt(2)+1. The
// two boundary spheres are the ideal boundaries: points of closed surfaces
// escaping to the ends accumulate there.

struct HollowballPoint {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
};

// Ideal boundary points reachable as limits: p+- on the inner sphere
// |xi| = sqrt(2)-1, n+- on the outer sphere |xi| = sqrt(2)+1.
enum class IdealTag { PPlus, PMinus, NPlus, NMinus };

struct IdealPoint {
  IdealTag tag = IdealTag::PPlus;
  std::array<double, 3> coords{};
};

IdealPoint ideal_point(IdealTag tag);
std::array<IdealPoint, 4> ideal_points();
const char* ideal_name(IdealTag tag);

// delta uses the on-surface identity sqrt(2t^2+1), so the input must satisfy
// <p,p> = 1. The check is scale-aware (tol * max(1, |p|_euclid^2)): for
// points far out on the ends the residual of the quadric equation cannot be
// resolved below the rounding of its leading terms.
HollowballPoint hollowball_project(const Point4& p, double tol = 1e-8);

// ===== Solid-torus model of H^3_1(-1) =====
//
// Pi-check(t,x,y,z) = (1/rho)((1 + t/rho) x, (1 + t/rho) y, z) with
// rho = sqrt(x^2 + y^2); image is the open solid torus
// {(sqrt(u^2+v^2) - 1)^2 + w^2 < 1}.

struct TorusPoint {
  double u = 0.0, v = 0.0, w = 0.0;
};

TorusPoint solid_torus_project(const Point4& p, double tol = 1e-8);

bool in_solid_torus(const TorusPoint& q);

}  // namespace descat
