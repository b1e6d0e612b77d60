#pragma once

#include <functional>

#include "descat/lorentz.hpp"

namespace descat {

using SurfaceFn = std::function<Point4(double, double)>;

struct FundamentalForms {
  double E = 0.0, F = 0.0, G = 0.0;  // first form
  double L = 0.0, M = 0.0, N = 0.0;  // second form against the unit normal
  double H = 0.0;                    // mean curvature, orientation with H >= 0
  double detI = 0.0;                 // EG - F^2 (negative for timelike surfaces)
  Point4 normal{};                   // the oriented unit normal used
};

// Finite-difference fundamental forms for a surface inside the unit quadric
// of the given signature. Central differences with step h for f_u, f_v and
// the three second derivatives; the unit normal solves
//   <nu, f> = <nu, f_u> = <nu, f_v> = 0
// exactly (generalized cross product via cofactors), normalized to
// <nu,nu> = -1 (spacelike surface in S^3_1) or +1 (timelike surface in
// H^3_1(-1)). Second derivatives are projected off the position vector
// (space-form Gauss formula) before forming L, M, N, and
//   H = (G L - 2 F M + E N) / (2 (E G - F^2)),
// with the sign of nu flipped if needed so that H >= 0.
//
// Throws "singular point" when |EG - F^2| falls below 1e-10 and a rank
// error when the normal system is degenerate.
//
// The default h balances the h^2 truncation term against second-difference
// rounding, which grows like eps/h^2; steps much below 1e-4 lose digits in
// L, M, N faster than they gain them.
FundamentalForms fundamental_forms(const SurfaceFn& surface, Signature sig,
                                   double u, double v, double h = 1e-4);

// EG - F^2 from first differences only; no regularity requirement.
double metric_determinant(const SurfaceFn& surface, Signature sig, double u,
                          double v, double h = 1e-5);

}  // namespace descat
