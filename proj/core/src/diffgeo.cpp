#include "descat/diffgeo.hpp"

#include <cmath>
#include <stdexcept>

namespace descat {

namespace {

struct Derivs {
  Point4 f, fu, fv, fuu, fuv, fvv;
};

Derivs central_differences(const SurfaceFn& s, double u, double v, double h) {
  const Point4 f = s(u, v);
  const Point4 pu = s(u + h, v), mu = s(u - h, v);
  const Point4 pv = s(u, v + h), mv = s(u, v - h);
  const Point4 pp = s(u + h, v + h), pm = s(u + h, v - h);
  const Point4 mp = s(u - h, v + h), mm = s(u - h, v - h);

  Derivs d;
  d.f = f;
  d.fu = (1.0 / (2.0 * h)) * (pu - mu);
  d.fv = (1.0 / (2.0 * h)) * (pv - mv);
  d.fuu = (1.0 / (h * h)) * ((pu - f) - (f - mu));
  d.fvv = (1.0 / (h * h)) * ((pv - f) - (f - mv));
  d.fuv = (1.0 / (4.0 * h * h)) * ((pp - pm) - (mp - mm));
  return d;
}

double det3(double a00, double a01, double a02, double a10, double a11,
            double a12, double a20, double a21, double a22) {
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

// Solves <X, w> = det[f; fu; fv; w] for all w: the signature-orthogonal
// complement of the three rows, computed exactly through cofactors.
Point4 normal_direction(const Point4& f, const Point4& fu, const Point4& fv,
                        Signature sig) {
  const double r[3][4] = {{f.t, f.x, f.y, f.z},
                          {fu.t, fu.x, fu.y, fu.z},
                          {fv.t, fv.x, fv.y, fv.z}};
  double cof[4];
  for (int j = 0; j < 4; ++j) {
    int c[3], n = 0;
    for (int col = 0; col < 4; ++col) {
      if (col != j) c[n++] = col;
    }
    const double minor =
        det3(r[0][c[0]], r[0][c[1]], r[0][c[2]], r[1][c[0]], r[1][c[1]],
             r[1][c[2]], r[2][c[0]], r[2][c[1]], r[2][c[2]]);
    cof[j] = ((j % 2 == 0) ? -1.0 : 1.0) * minor;
  }
  // X = eta^{-1} cof, with eta the signature matrix (its own inverse).
  if (sig == Signature::DeSitter) {
    return {-cof[0], cof[1], cof[2], cof[3]};
  }
  return {cof[0], -cof[1], -cof[2], cof[3]};
}

}  // namespace

FundamentalForms fundamental_forms(const SurfaceFn& surface, Signature sig,
                                   double u, double v, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw std::invalid_argument("fundamental_forms: h outside [1e-7, 1e-3]");
  }
  const Derivs d = central_differences(surface, u, v, h);

  FundamentalForms out;
  out.E = minkowski_inner(d.fu, d.fu, sig);
  out.F = minkowski_inner(d.fu, d.fv, sig);
  out.G = minkowski_inner(d.fv, d.fv, sig);
  out.detI = out.E * out.G - out.F * out.F;
  if (std::abs(out.detI) <= 1e-10) {
    throw std::domain_error("fundamental_forms: singular point");
  }

  Point4 nu = normal_direction(d.f, d.fu, d.fv, sig);
  const double nn = minkowski_inner(nu, nu, sig);
  const double row_scale = std::sqrt(euclidean_norm_sq(d.f)) *
                           std::sqrt(euclidean_norm_sq(d.fu)) *
                           std::sqrt(euclidean_norm_sq(d.fv));
  if (std::abs(nn) <= 1e-20 * row_scale * row_scale) {
    throw std::domain_error("fundamental_forms: normal system rank-deficient");
  }
  const double want = sig == Signature::DeSitter ? -1.0 : 1.0;
  if (nn * want <= 0.0) {
    throw std::domain_error(
        "fundamental_forms: normal has wrong causal character (surface not "
        "spacelike/timelike here)");
  }
  nu = (1.0 / std::sqrt(std::abs(nn))) * nu;

  // Space-form Gauss formula: remove the position component of the second
  // derivatives before pairing with the normal. <f,f> is used instead of the
  // exact +-1 so the projection stays consistent with the sampled point.
  const double ff = minkowski_inner(d.f, d.f, sig);
  const auto covariant = [&](const Point4& fab) {
    return fab - (minkowski_inner(fab, d.f, sig) / ff) * d.f;
  };
  out.L = minkowski_inner(covariant(d.fuu), nu, sig);
  out.M = minkowski_inner(covariant(d.fuv), nu, sig);
  out.N = minkowski_inner(covariant(d.fvv), nu, sig);

  out.H = (out.G * out.L - 2.0 * out.F * out.M + out.E * out.N) /
          (2.0 * out.detI);
  if (out.H < 0.0) {
    out.H = -out.H;
    out.L = -out.L;
    out.M = -out.M;
    out.N = -out.N;
    nu = -nu;
  }
  out.normal = nu;
  return out;
}

double metric_determinant(const SurfaceFn& surface, Signature sig, double u,
                          double v, double h) {
  const Point4 fu =
      (1.0 / (2.0 * h)) * (surface(u + h, v) - surface(u - h, v));
  const Point4 fv =
      (1.0 / (2.0 * h)) * (surface(u, v + h) - surface(u, v - h));
  const double E = minkowski_inner(fu, fu, sig);
  const double F = minkowski_inner(fu, fv, sig);
  const double G = minkowski_inner(fv, fv, sig);
  return E * G - F * F;
}

}  // namespace descat
