#include "descat/catenoid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "compensated.hpp"

namespace descat {

namespace {

using detail::Accum;

// r^n for integer n >= 0; keeps negative bases exact.
double ipow(double r, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= r;
  return acc;
}

complexd zpow_int(complexd z, int n) {
  complexd acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}

// Every frame entry is z^{0,1} (alpha z^m + beta) with small integer
// coefficients; the top row carries the extra z. denom is the squared
// modulus of the scalar prefactor times |z|^{m+1}.
struct CoreCoeffs {
  double aa, ab;  // top left:     z (aa z^m + ab)
  double ba, bb;  // top right:    z (ba z^m + bb)
  double ca, cb;  // bottom left:     ca z^m + cb
  double da, db;  // bottom right:    da z^m + db
  double denom;   // 4m for family I, 8m for family II
};

CoreCoeffs core_coeffs(const SurfaceSpec& spec) {
  const double m = spec.m;
  if (spec.family == Family::TypeI) {
    return {0.0, m + 1.0, m - 1.0, -(m + 1.0),
            0.0, m - 1.0, m + 1.0, -(m - 1.0), 4.0 * m};
  }
  if (spec.family == Family::TypeII) {
    return {1.0 - m, m + 1.0, m - 1.0, m + 1.0,
            -(m + 1.0), m - 1.0, m + 1.0, m - 1.0, 8.0 * m};
  }
  throw std::invalid_argument("frame: defined for families I and II only");
}

// alpha z^m + beta kept as value plus exact rounding remainder (fma product
// tail, branch-free two-sum tail). det(core) and core e3 core* both cancel
// the O(1) entry parts down to O(z^m), so dropping these remainders costs
// ~eps / |z|^m relative error near the ends.
struct EntryDD {
  complexd hi, lo;
};

EntryDD entry_dd(double alpha, double beta, complexd zm) {
  const double pr = alpha * zm.real();
  const double er = std::fma(alpha, zm.real(), -pr);
  const double pi = alpha * zm.imag();
  const double ei = std::fma(alpha, zm.imag(), -pi);
  const double s = pr + beta;
  const double t = s - pr;
  const double e = (pr - (s - t)) + (beta - t);
  return {{s, pi}, {er + e, ei}};
}

// u v - w x over the split entries, remainder cross terms included.
complexd det_dd(const EntryDD& u, const EntryDD& v, const EntryDD& w,
                const EntryDD& x) {
  Accum re, im;
  const auto add_mul = [&](complexd p, complexd q, double sign) {
    re.add_product(sign * p.real(), q.real());
    re.add_product(-sign * p.imag(), q.imag());
    im.add_product(sign * p.real(), q.imag());
    im.add_product(sign * p.imag(), q.real());
  };
  add_mul(u.hi, v.hi, 1.0);
  add_mul(u.hi, v.lo, 1.0);
  add_mul(u.lo, v.hi, 1.0);
  add_mul(w.hi, x.hi, -1.0);
  add_mul(w.hi, x.lo, -1.0);
  add_mul(w.lo, x.hi, -1.0);
  return {re.value(), im.value()};
}

// u conj(v) - w conj(x), same treatment.
complexd cross_dd(const EntryDD& u, const EntryDD& v, const EntryDD& w,
                  const EntryDD& x) {
  Accum re, im;
  const auto add_mul_conj = [&](complexd p, complexd q, double sign) {
    re.add_product(sign * p.real(), q.real());
    re.add_product(sign * p.imag(), q.imag());
    im.add_product(sign * p.imag(), q.real());
    im.add_product(-sign * p.real(), q.imag());
  };
  add_mul_conj(u.hi, v.hi, 1.0);
  add_mul_conj(u.hi, v.lo, 1.0);
  add_mul_conj(u.lo, v.hi, 1.0);
  add_mul_conj(w.hi, x.hi, -1.0);
  add_mul_conj(w.hi, x.lo, -1.0);
  add_mul_conj(w.lo, x.hi, -1.0);
  return {re.value(), im.value()};
}

}  // namespace

void validate(const SurfaceSpec& spec) {
  if (spec.m < 2) throw std::invalid_argument("SurfaceSpec: need m >= 2");
}

Signature ambient_signature(Family family) {
  return family == Family::AdS ? Signature::AntiDeSitter
                               : Signature::DeSitter;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::TypeI: return "I";
    case Family::TypeII: return "II";
    case Family::AdS: return "ads";
  }
  return "?";
}

FrameFactors frame_factors(const SurfaceSpec& spec, complexd z) {
  validate(spec);
  if (z == complexd(0.0, 0.0)) {
    throw std::domain_error("frame: z = 0 is outside the domain");
  }
  const CoreCoeffs cc = core_coeffs(spec);
  const complexd zm = zpow_int(z, spec.m);
  // Principal branch of z^{-(m+1)/2}; see header for why the cut is benign.
  const complexd scale = std::pow(z, complexd(-0.5 * (spec.m + 1), 0.0));
  return {Mat2C{z * (cc.aa * zm + cc.ab), z * (cc.ba * zm + cc.bb),
                cc.ca * zm + cc.cb, cc.da * zm + cc.db},
          scale / std::sqrt(cc.denom)};
}

Mat2C frame(const SurfaceSpec& spec, complexd z) {
  const FrameFactors f = frame_factors(spec, z);
  return f.scalar * f.core;
}

complexd frame_det(const SurfaceSpec& spec, complexd z) {
  validate(spec);
  if (z == complexd(0.0, 0.0)) {
    throw std::domain_error("frame: z = 0 is outside the domain");
  }
  const CoreCoeffs cc = core_coeffs(spec);
  const complexd zm = zpow_int(z, spec.m);
  const EntryDD wa = entry_dd(cc.aa, cc.ab, zm);
  const EntryDD wb = entry_dd(cc.ba, cc.bb, zm);
  const EntryDD wc = entry_dd(cc.ca, cc.cb, zm);
  const EntryDD wd = entry_dd(cc.da, cc.db, zm);
  // det F = scalar^2 z (wa wd - wb wc); scalar^2 = z^{-(m+1)} / denom in
  // closed form (the principal half-power squares to the plain power), so
  // the only cancellation runs through the split entries.
  return z * det_dd(wa, wd, wb, wc) / (zpow_int(z, spec.m + 1) * cc.denom);
}

Point4 surface_from_frame(const SurfaceSpec& spec, complexd z) {
  validate(spec);
  if (z == complexd(0.0, 0.0)) {
    throw std::domain_error("frame: z = 0 is outside the domain");
  }
  const CoreCoeffs cc = core_coeffs(spec);
  const complexd zm = zpow_int(z, spec.m);
  const EntryDD wa = entry_dd(cc.aa, cc.ab, zm);
  const EntryDD wb = entry_dd(cc.ba, cc.bb, zm);
  const EntryDD wc = entry_dd(cc.ca, cc.cb, zm);
  const EntryDD wd = entry_dd(cc.da, cc.db, zm);

  // F e3 F* in Herm(2) is [[t+z, x+iy], [x-iy, t-z]]; with the scalar and
  // the top-row z factored out,
  //   t + x3 = |scalar|^2 |z|^2 (|wa|^2 - |wb|^2)
  //   t - x3 = |scalar|^2       (|wc|^2 - |wd|^2)
  //   x1 + i x2 = |scalar|^2 z  (wa conj(wc) - wb conj(wd)).
  const double s2 = 1.0 / (ipow(std::abs(z), spec.m + 1) * cc.denom);
  const double top = s2 * std::norm(z) * cross_dd(wa, wa, wb, wb).real();
  const double bot = s2 * cross_dd(wc, wc, wd, wd).real();
  const complexd xy = s2 * z * cross_dd(wa, wc, wb, wd);
  return {0.5 * (top + bot), xy.real(), xy.imag(), 0.5 * (top - bot)};
}

Point4 components_I(int m, double r, double theta) {
  if (m < 2) throw std::invalid_argument("components_I: need m >= 2");
  if (r == 0.0) throw std::domain_error("components_I: r = 0 not in domain");
  const double cm = (m * m - 1.0) / (4.0 * m);
  const double rm = ipow(r, m);
  const double two_cos = 2.0 * std::cos(m * theta);

  const double x0p3 = cm * r * (two_cos - (m - 1.0) / (m + 1.0) * rm);
  const double x0m3 = cm / r * (two_cos - (m + 1.0) / (m - 1.0) * rm);

  const complexd w =
      ((m - 1.0) * (m - 1.0) * std::polar(1.0, (m + 1.0) * theta) +
       (m + 1.0) * (m + 1.0) * std::polar(1.0, -(m - 1.0) * theta) -
       (m * m - 1.0) * rm * std::polar(1.0, theta)) /
      (4.0 * m);

  return {0.5 * (x0p3 + x0m3), w.real(), w.imag(), 0.5 * (x0p3 - x0m3)};
}

Point4 components_II(int m, double r, double theta) {
  if (m < 2) throw std::invalid_argument("components_II: need m >= 2");
  if (r <= 0.0) throw std::domain_error("components_II: need r > 0");
  const double c = (1.0 - m * m) / (4.0 * m);
  const double cmt = std::cos(m * theta);
  const double smt = std::sin(m * theta);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);

  return {c * (r + 1.0 / r) * cmt,
          -((m * m + 1.0) * cmt * ct + 2.0 * m * smt * st) / (2.0 * m),
          -((m * m + 1.0) * cmt * st - 2.0 * m * smt * ct) / (2.0 * m),
          c * (r - 1.0 / r) * cmt};
}

double blowup_theta(int m, int k, double rs) {
  if (std::abs(rs) >= 1.0) {
    throw std::domain_error("blowup chart: need |r*s| < 1");
  }
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return (k * std::numbers::pi + std::acos(sign * rs)) / m;
}

Point4 blowup_chart(int m, int k, double r, double s) {
  alpha_k(m, k);  // range-checks m and k
  const double theta = blowup_theta(m, k, r * s);
  const double cm = (m * m - 1.0) / (4.0 * m);
  const double rm = ipow(r, m);

  // Same split components as components_I after substituting
  // 2 cos m0 = 2 r s; the 1/r in x0 - x3 cancels analytically, which is what
  // lets the chart cross r = 0.
  const double x0p3 = cm * r * (2.0 * r * s - (m - 1.0) / (m + 1.0) * rm);
  const double x0m3 = cm * (2.0 * s - (m + 1.0) / (m - 1.0) * ipow(r, m - 1));

  const double w = m * theta;  // lives on the k-th branch of acos
  const complexd xy = std::polar(1.0, theta) *
                      ((m - 1.0) * (m - 1.0) * std::polar(1.0, w) +
                       (m + 1.0) * (m + 1.0) * std::polar(1.0, -w) -
                       complexd((m * m - 1.0) * rm, 0.0)) /
                      (4.0 * m);

  return {0.5 * (x0p3 + x0m3), xy.real(), xy.imag(), 0.5 * (x0p3 - x0m3)};
}

complexd secondary_gauss(const SurfaceSpec& spec, complexd z) {
  validate(spec);
  const complexd zm = zpow_int(z, spec.m);
  if (spec.family == Family::TypeI) return zm + 1.0;
  if (spec.family == Family::TypeII) return (zm - 1.0) / (zm + 1.0);
  throw std::invalid_argument("secondary_gauss: families I and II only");
}

Point4 ads_surface(int m, double s, double theta) {
  if (m < 2) throw std::invalid_argument("ads_surface: need m >= 2");
  const double c = (1.0 - m * m) / (2.0 * m) * std::cos(m * theta);
  // (x1, x2) agree with type II; they do not involve r at all.
  const Point4 planar = components_II(m, 1.0, theta);
  return {c * std::cos(s), planar.x, planar.y, c * std::sin(s)};
}

Point4 surface_point(const SurfaceSpec& spec, double u, double v) {
  switch (spec.family) {
    case Family::TypeI: return components_I(spec.m, u, v);
    case Family::TypeII: return components_II(spec.m, u, v);
    default: return ads_surface(spec.m, u, v);
  }
}

}  // namespace descat
