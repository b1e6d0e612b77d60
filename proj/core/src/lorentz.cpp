#include "descat/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "compensated.hpp"

namespace descat {

double minkowski_inner(const Point4& a, const Point4& b, Signature sig) {
  const double spatial = a.x * b.x + a.y * b.y;
  if (sig == Signature::DeSitter) {
    return -a.t * b.t + spatial + a.z * b.z;
  }
  return a.t * b.t - spatial + a.z * b.z;
}

double euclidean_norm_sq(const Point4& p) {
  return p.t * p.t + p.x * p.x + p.y * p.y + p.z * p.z;
}

double space_form_sign(Signature sig) {
  return sig == Signature::DeSitter ? 1.0 : -1.0;
}

bool in_space_form(const Point4& p, Signature sig, double tol) {
  return std::abs(minkowski_inner(p, p, sig) - space_form_sign(sig)) <= tol;
}

double max_coord_dist(const Point4& a, const Point4& b) {
  return std::max(std::max(std::abs(a.t - b.t), std::abs(a.x - b.x)),
                  std::max(std::abs(a.y - b.y), std::abs(a.z - b.z)));
}

double Mat2C::max_abs() const {
  return std::max(std::max(std::abs(a), std::abs(b)),
                  std::max(std::abs(c), std::abs(d)));
}

using detail::fused_pair;

Mat2C operator*(const Mat2C& p, const Mat2C& q) {
  return {fused_pair(p.a, q.a, p.b, q.c), fused_pair(p.a, q.b, p.b, q.d),
          fused_pair(p.c, q.a, p.d, q.c), fused_pair(p.c, q.b, p.d, q.d)};
}

complexd Mat2C::det() const { return fused_pair(a, d, -b, c); }

Mat2C to_herm(const Point4& p) {
  return {complexd(p.t + p.z, 0.0), complexd(p.x, p.y),
          complexd(p.x, -p.y), complexd(p.t - p.z, 0.0)};
}

Point4 from_herm(const Mat2C& X, double tol) {
  const double dev = (X - X.adjoint()).max_abs();
  if (dev > tol) {
    throw std::invalid_argument("from_herm: matrix not Hermitian (deviation " +
                                std::to_string(dev) + ")");
  }
  // Symmetrize, then read the coordinates off the entries.
  const double a11 = X.a.real();
  const double a22 = X.d.real();
  const complexd a12 = 0.5 * (X.b + std::conj(X.c));
  return {0.5 * (a11 + a22), a12.real(), a12.imag(), 0.5 * (a11 - a22)};
}

Mat2C conjugate_action(const Mat2C& a, const Mat2C& X) {
  return a * X * a.adjoint();
}

Point4 involution_iota(const Point4& p) { return {-p.t, p.x, p.y, -p.z}; }

double alpha_k(int m, int k) {
  if (m < 2) throw std::invalid_argument("alpha_k: need m >= 2");
  if (k < 0 || k > 2 * m - 1) {
    throw std::invalid_argument("alpha_k: k out of range [0, 2m-1]");
  }
  return (2.0 * k + 1.0) * std::numbers::pi / (2.0 * m);
}

Point4 rotation_involution(int k, int m, const Point4& p) {
  const double a2 = 2.0 * alpha_k(m, k);
  const double c = std::cos(a2), s = std::sin(a2);
  return {p.t, -c * p.x - s * p.y, -s * p.x + c * p.y, p.z};
}

}  // namespace descat
