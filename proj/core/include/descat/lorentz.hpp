#pragma once

#include <complex>
#include <cstddef>

namespace descat {

using complexd = std::complex<double>;

// ===== Ambient signatures =====
//
// Both quadrics live in R^4 with coordinates (t, x, y, z) but carry different
// inner products:
//   DeSitter      <p,q> = -t_p t_q + x_p x_q + y_p y_q + z_p z_q,   S^3_1    = { <p,p> = +1 }
//   AntiDeSitter  <p,q> = +t_p t_q - x_p x_q - y_p y_q + z_p z_q,   H^3_1(-1) = { <p,p> = -1 }
enum class Signature { DeSitter, AntiDeSitter };

struct Point4 {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t i) const {
    switch (i) {
      case 0: return t;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }

  friend Point4 operator+(const Point4& a, const Point4& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point4 operator-(const Point4& a, const Point4& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point4 operator*(double s, const Point4& p) {
    return {s * p.t, s * p.x, s * p.y, s * p.z};
  }
  friend Point4 operator-(const Point4& p) { return {-p.t, -p.x, -p.y, -p.z}; }
};

double minkowski_inner(const Point4& a, const Point4& b, Signature sig);

// Plain Euclidean |p|^2, used for scale-aware tolerance decisions.
double euclidean_norm_sq(const Point4& p);

// The value <p,p> takes on the quadric: +1 for S^3_1, -1 for H^3_1(-1).
double space_form_sign(Signature sig);

// Absolute check |<p,p> - sign| <= tol.
bool in_space_form(const Point4& p, Signature sig, double tol = 1e-10);

// Maximum deviation of a coordinate between two points.
double max_coord_dist(const Point4& a, const Point4& b);

// ===== Herm(2) model =====
//
//   (t,x,y,z)  <->  [[t+z, x+iy], [x-iy, t-z]],   det X = -<p,p> in (-+++).
// SL(2,C) acts by X -> a X a*, and S^3_1 = { a e3 a* : a in SL(2,C) } with
// e3 = diag(1,-1).

struct Mat2C {
  complexd a{}, b{}, c{}, d{};  // row-major [[a, b], [c, d]]

  // Products and determinants run compensated (exact fma splits + Neumaier
  // sums): frame entries grow like |z|^(-(m+1)/2) toward the ends while det
  // and conjugation results stay O(1), so plain arithmetic loses the result
  // to cancellation of the large intermediates.
  friend Mat2C operator*(const Mat2C& p, const Mat2C& q);
  friend Mat2C operator*(complexd s, const Mat2C& p) {
    return {s * p.a, s * p.b, s * p.c, s * p.d};
  }
  friend Mat2C operator-(const Mat2C& p, const Mat2C& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
  }

  Mat2C adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  complexd det() const;
  double max_abs() const;

  static Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2C e3() { return {1.0, 0.0, 0.0, -1.0}; }
};

Mat2C to_herm(const Point4& p);

// Inverse of to_herm. Requires X Hermitian within tol (max entry deviation
// from X*); the near-Hermitian input is symmetrized before extraction.
Point4 from_herm(const Mat2C& X, double tol = 1e-12);

// a X a*; preserves Hermiticity, scales det by |det a|^2.
Mat2C conjugate_action(const Mat2C& a, const Mat2C& X);

// ===== Isometric involutions =====

// iota: (t,x,y,z) -> (-t,x,y,-z). Swaps the two half-hyperbolas t^2 - z^2 =
// const and relates the even-m negative-r sheet to the positive one.
Point4 involution_iota(const Point4& p);

// alpha_k = (2k+1)pi/(2m), the singular ray angles. Valid for 0 <= k <= 2m-1.
double alpha_k(int m, int k);

// Reflection of the (x,y)-plane across the axis spanned by
// (-sin alpha_k, cos alpha_k), fixing t and z:
//   (t,x,y,z) -> (t, -cos(2a) x - sin(2a) y, -sin(2a) x + cos(2a) y, z).
// This is the isometric involution that fixes the two null lines
// {(t, -sin alpha_k, cos alpha_k, +-t)} pointwise and maps the type-II
// extension set to itself for every m. (The overall sign of the (x,y) block
// is forced by the line-fixing property; the opposite sign would swap the
// k-th and (k+m)-th lines instead.)
Point4 rotation_involution(int k, int m, const Point4& p);

}  // namespace descat
