#pragma once

#include "descat/lorentz.hpp"

namespace descat {

// The two exceptional catenoid families in S^3_1 plus the associated
// anti-de Sitter family obtained from type II by s -> is, r = e^s.
enum class Family { TypeI, TypeII, AdS };

struct SurfaceSpec {
  Family family = Family::TypeI;
  int m = 2;  // integer parameter of the family, m >= 2
};

// Throws unless m >= 2 (and, where required, family in {I, II}).
void validate(const SurfaceSpec& spec);

// Ambient quadric for the family: S^3_1 for I/II, H^3_1(-1) for AdS.
Signature ambient_signature(Family family);

const char* family_name(Family family);  // "I", "II", "ads"

struct DomainPoint {
  double r = 1.0;      // radial coordinate (family I admits r < 0; AdS: s)
  double theta = 0.0;  // angular coordinate
};

// ===== Holomorphic frames =====
//
// Both families are F e3 F* for an SL(2,C)-valued frame F(z) built from
// z^m and the scalar prefactor z^{-(m+1)/2}. The half-integer power uses the
// principal branch (cut along the negative real axis). Crossing the cut
// flips F by at most a sign, which cancels in the conjugation, so the
// surface itself is branch-independent; only the frame is two-valued.
Mat2C frame(const SurfaceSpec& spec, complexd z);

// F split as scalar * core with scalar = z^{-(m+1)/2} / (2 sqrt(m)) resp.
// / (2 sqrt(2m)) and core holding the polynomial entries. Determinants and
// conjugations evaluated through the factors stay well conditioned: the
// assembled matrix has entries ~ |z|^{-(m+1)/2} while det F and F e3 F* are
// O(1), so going through the scaled entries loses ~ |z|^{-(m+1)} eps to
// cancellation near the ends.
struct FrameFactors {
  Mat2C core;
  complexd scalar;
};
FrameFactors frame_factors(const SurfaceSpec& spec, complexd z);

// det F evaluated as det(core) * scalar^2 with scalar^2 in closed form
// (the principal half-power squares to the plain integer power). Equals 1
// up to rounding of order eps, uniformly on 0 < |z|.
complexd frame_det(const SurfaceSpec& spec, complexd z);

// f = F e3 F*, converted back to (t,x,y,z). Defined for z != 0. Evaluated
// through the factored frame for the same conditioning reason.
Point4 surface_from_frame(const SurfaceSpec& spec, complexd z);

// ===== Closed-form components =====

// Type I in split coordinates, valid on both sheets r > 0 and r < 0:
//   x0 +- x3 = ((m^2-1)/(4m)) r^{+-1} (2 cos m0 - ((m-+1)/(m+-1)) r^m)
//   x1 + i x2 = ((m-1)^2 e^{i(m+1)0} + (m+1)^2 e^{-i(m-1)0}
//                - (m^2-1) r^m e^{i0}) / (4m)
Point4 components_I(int m, double r, double theta);

// Type II, r > 0:
//   x0 = ((1-m^2)/(4m)) (r + 1/r) cos m0
//   x3 = ((1-m^2)/(4m)) (r - 1/r) cos m0
//   x1 = -((m^2+1) cos m0 cos 0 + 2m sin m0 sin 0) / (2m)
//   x2 = -((m^2+1) cos m0 sin 0 - 2m sin m0 cos 0) / (2m)
Point4 components_II(int m, double r, double theta);

// ===== Blow-up chart for the type-I extension =====
//
// Coordinates (r, s) with s = cos(m0)/r; the angle is recovered per branch k
// as 0 = (k pi + acos((-1)^k r s)) / m, which maps (-1,1) onto the k-th
// monotonicity interval of cos. The chart is analytic across r = 0, where it
// takes the value (tau, gamma_m(alpha_k), -tau) with tau = ((m^2-1)/(4m)) s.
double blowup_theta(int m, int k, double rs);
Point4 blowup_chart(int m, int k, double r, double s);

// Secondary Gauss map: z^m + 1 (type I), (z^m - 1)/(z^m + 1) (type II).
// |g| = 1 exactly on the singular set.
complexd secondary_gauss(const SurfaceSpec& spec, complexd z);

// ===== Anti-de Sitter family =====
//
// (x0, x3) = ((1-m^2)/(2m)) cos m0 (cos s, sin s), (x1, x2) as type II.
// Takes values in H^3_1(-1); doubly periodic, hence compact image.
Point4 ads_surface(int m, double s, double theta);

// Uniform evaluator used by meshing and the finite-difference verifier:
// (u,v) = (r,theta) for families I/II and (s,theta) for AdS.
Point4 surface_point(const SurfaceSpec& spec, double u, double v);

}  // namespace descat
