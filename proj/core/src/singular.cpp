#include "descat/singular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "descat/trochoid.hpp"

namespace descat {

namespace {

double ipow(double r, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= r;
  return acc;
}

IdealPoint pick(IdealTag tag) { return ideal_point(tag); }

}  // namespace

double singular_residual(const SurfaceSpec& spec, double r, double theta) {
  validate(spec);
  if (spec.family == Family::TypeI) {
    if (r == 0.0) throw std::domain_error("singular_residual: r = 0 (type I)");
    return ipow(r, spec.m) + 2.0 * std::cos(spec.m * theta);
  }
  if (spec.family == Family::TypeII) {
    if (r <= 0.0) throw std::domain_error("singular_residual: need r > 0");
    return std::cos(spec.m * theta);
  }
  throw std::invalid_argument("singular_residual: families I and II only");
}

const char* region_name(RegionLabel label) {
  switch (label) {
    case RegionLabel::APlus: return "A+";
    case RegionLabel::AMinus: return "A-";
    case RegionLabel::BPlus: return "B+";
    case RegionLabel::BMinus: return "B-";
    default: return "Sing";
  }
}

RegionLabel classify_region(int m, double r, double theta,
                            double singular_tol) {
  if (m < 2) throw std::invalid_argument("classify_region: need m >= 2");
  if (r == 0.0) throw std::domain_error("classify_region: r = 0 not in domain");
  const double res = ipow(r, m) + 2.0 * std::cos(m * theta);
  if (std::abs(res) <= singular_tol) return RegionLabel::Singular;
  const double eps_m = (r < 0.0 && m % 2 != 0) ? -1.0 : 1.0;  // sgn(r)^m
  const bool a_side = eps_m * res > 0.0;
  if (r > 0.0) return a_side ? RegionLabel::APlus : RegionLabel::BPlus;
  return a_side ? RegionLabel::AMinus : RegionLabel::BMinus;
}

Point4 cone_point(int m, int k) {
  const double a = alpha_k(m, k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return {0.0, -sign * std::sin(a), sign * std::cos(a), 0.0};
}

std::vector<LightLine> light_lines(const SurfaceSpec& spec, int k) {
  validate(spec);
  const double a = alpha_k(spec.m, k);
  if (spec.family == Family::TypeI) {
    const Vec2 g = gamma(spec.m, a);
    return {{{0.0, g.x, g.y, 0.0}, {1.0, 0.0, 0.0, -1.0}}};
  }
  if (spec.family == Family::TypeII) {
    const Point4 base{0.0, -std::sin(a), std::cos(a), 0.0};
    return {{base, {1.0, 0.0, 0.0, 1.0}}, {base, {1.0, 0.0, 0.0, -1.0}}};
  }
  throw std::invalid_argument("light_lines: families I and II only");
}

std::vector<LightLine> extension_lines(int m, int k) {
  const Point4 base = cone_point(m, k);
  return {{base, {1.0, 0.0, 0.0, 1.0}}, {base, {1.0, 0.0, 0.0, -1.0}}};
}

const char* scenario_name(LimitScenario sc) {
  switch (sc) {
    case LimitScenario::RPlusInfty: return "r->+inf";
    case LimitScenario::RMinusInfty: return "r->-inf";
    case LimitScenario::APlus: return "r->0 in A+";
    case LimitScenario::AMinus: return "r->0 in A-";
    case LimitScenario::BPlus: return "r->0 in B+";
    case LimitScenario::BMinus: return "r->0 in B-";
    case LimitScenario::RInftyCosPos: return "r->inf, cos m0 > 0";
    case LimitScenario::RInftyCosNeg: return "r->inf, cos m0 < 0";
    case LimitScenario::RZeroCosPos: return "r->0, cos m0 > 0";
    default: return "r->0, cos m0 < 0";
  }
}

IdealPoint limit_table(const SurfaceSpec& spec, LimitScenario sc) {
  validate(spec);
  const bool even = spec.m % 2 == 0;
  if (spec.family == Family::TypeI) {
    switch (sc) {
      case LimitScenario::RPlusInfty: return pick(IdealTag::NMinus);
      case LimitScenario::RMinusInfty:
        return pick(even ? IdealTag::PPlus : IdealTag::NMinus);
      case LimitScenario::APlus: return pick(IdealTag::PMinus);
      case LimitScenario::AMinus:
        return pick(even ? IdealTag::NPlus : IdealTag::PMinus);
      case LimitScenario::BPlus: return pick(IdealTag::NPlus);
      case LimitScenario::BMinus:
        return pick(even ? IdealTag::PMinus : IdealTag::NPlus);
      default:
        throw std::invalid_argument(
            "limit_table: scenario not defined for type I");
    }
  }
  if (spec.family == Family::TypeII) {
    // x0 = ((1-m^2)/4m)(r + 1/r) cos m0 diverges at both ends with
    // sgn x0 = -sgn(cos m0), while x3/x0 -> +1 (r -> inf) or -1 (r -> 0).
    switch (sc) {
      case LimitScenario::RInftyCosPos: return pick(IdealTag::NMinus);
      case LimitScenario::RInftyCosNeg: return pick(IdealTag::PPlus);
      case LimitScenario::RZeroCosPos: return pick(IdealTag::NPlus);
      case LimitScenario::RZeroCosNeg: return pick(IdealTag::PMinus);
      default:
        throw std::invalid_argument(
            "limit_table: scenario not defined for type II");
    }
  }
  throw std::invalid_argument("limit_table: families I and II only");
}

SequenceLimit limit_of_sequence(
    const SurfaceSpec& spec,
    const std::function<DomainPoint(long long)>& seq, long long tail_index,
    double tol) {
  validate(spec);
  if (tail_index < 10) {
    throw std::invalid_argument("limit_of_sequence: tail index too small");
  }

  // Geometric ladder of probe indices ending at the tail.
  std::vector<long long> probes;
  for (long long j = tail_index; j >= 10 && probes.size() < 6; j /= 10) {
    probes.push_back(j);
  }
  std::reverse(probes.begin(), probes.end());

  SequenceLimit out;
  double prev = 0.0;
  bool monotone = true;
  Point4 tail_point{};
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const DomainPoint d = seq(probes[i]);
    tail_point = surface_point(spec, d.r, d.theta);
    const double mag = std::abs(tail_point.t);
    if (i > 0 && mag <= prev) monotone = false;
    prev = mag;
  }
  out.tail_x0 = tail_point.t;
  if (!monotone || std::abs(tail_point.t) < 1e2) {
    out.status = SequenceLimit::Status::Bounded;
    return out;
  }

  out.tail_projection = hollowball_project(tail_point);
  double best = std::numeric_limits<double>::infinity();
  for (const IdealPoint& ip : ideal_points()) {
    const double dx = out.tail_projection.x - ip.coords[0];
    const double dy = out.tail_projection.y - ip.coords[1];
    const double dz = out.tail_projection.z - ip.coords[2];
    const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (dist < best) {
      best = dist;
      out.ideal = ip.tag;
    }
  }
  out.mismatch = best;
  out.status = best <= tol ? SequenceLimit::Status::ConvergedToIdeal
                           : SequenceLimit::Status::NoMatch;
  if (out.status == SequenceLimit::Status::NoMatch) out.ideal.reset();
  return out;
}

std::function<DomainPoint(long long)> scenario_sequence(const SurfaceSpec& spec,
                                                        LimitScenario sc,
                                                        std::uint64_t seed) {
  validate(spec);
  // Table-checked compatibility; limit_table also rejects bad combinations.
  limit_table(spec, sc);
  const int m = spec.m;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.5, 2.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  const double a = amp(rng);
  const double phase = ang(rng);

  const bool to_infinity = sc == LimitScenario::RPlusInfty ||
                           sc == LimitScenario::RMinusInfty ||
                           sc == LimitScenario::RInftyCosPos ||
                           sc == LimitScenario::RInftyCosNeg;
  double r_sign = 1.0;
  if (sc == LimitScenario::RMinusInfty || sc == LimitScenario::AMinus ||
      sc == LimitScenario::BMinus)
    r_sign = -1.0;

  // Sign that cos(m theta) must keep for the sequence to stay inside the
  // scenario's region near r = 0. The r -> +-inf ends are unconstrained.
  int cos_sign = 0;
  const bool even = m % 2 == 0;
  switch (sc) {
    case LimitScenario::APlus: cos_sign = 1; break;
    case LimitScenario::BPlus: cos_sign = -1; break;
    case LimitScenario::AMinus: cos_sign = even ? 1 : -1; break;
    case LimitScenario::BMinus: cos_sign = even ? -1 : 1; break;
    case LimitScenario::RZeroCosPos:
    case LimitScenario::RInftyCosPos: cos_sign = 1; break;
    case LimitScenario::RZeroCosNeg:
    case LimitScenario::RInftyCosNeg: cos_sign = -1; break;
    default: break;
  }
  const bool free_angle =
      sc == LimitScenario::RPlusInfty || sc == LimitScenario::RMinusInfty;

  double theta0 = 0.0;
  if (!free_angle) {
    do {
      theta0 = ang(rng);
    } while (cos_sign * std::cos(m * theta0) < 0.3);
  }
  const double wobble = 0.1 / m;  // keeps |cos m theta| >= 0.2 along the run

  return [=](long long n) {
    const double t = static_cast<double>(n);
    DomainPoint d;
    d.r = to_infinity ? r_sign * a * t : r_sign * a / t;
    if (free_angle) {
      // Equidistributed full wander; the region swallows every angle here.
      const double golden = 0.6180339887498949;
      d.theta = phase + 2.0 * std::numbers::pi *
                            (t * golden - std::floor(t * golden));
    } else {
      d.theta = theta0 + wobble * std::sin(t + phase);
    }
    return d;
  };
}

double trochoid_scale(int m) {
  if (m < 2) throw std::invalid_argument("trochoid_scale: need m >= 2");
  // Least squares over a theta grid for (x1,x2) = c * gamma_m(theta). The
  // (x1,x2) pair of components_II is r-independent, so any r works.
  const int n = 720;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / n;
    const Point4 p = components_II(m, 1.0, theta);
    const Vec2 g = gamma(m, theta);
    num += p.x * g.x + p.y * g.y;
    den += g.x * g.x + g.y * g.y;
  }
  return num / den;
}

double extension_residual(const SurfaceSpec& spec, const Point4& p,
                          int theta_samples) {
  validate(spec);
  if (spec.family != Family::TypeII) {
    throw std::invalid_argument(
        "extension_residual: membership set defined for type II only");
  }
  if (theta_samples < 360) {
    throw std::invalid_argument("extension_residual: need >= 360 samples");
  }
  const int m = spec.m;
  const double c = trochoid_scale(m);
  const double hyp = (m * m - 1.0) / (2.0 * m);
  const double tz = p.t * p.t - p.z * p.z;

  const auto residual_at = [&](double theta) {
    const Vec2 g = gamma(m, theta);
    const double cmt = std::cos(m * theta);
    const double d_curve =
        std::hypot(p.x - c * g.x, p.y - c * g.y);
    const double d_hyp = std::abs(tz - hyp * hyp * cmt * cmt);
    return std::max(d_curve, d_hyp);
  };

  const double step = 2.0 * std::numbers::pi / theta_samples;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (int i = 0; i < theta_samples; ++i) {
    const double theta = i * step;
    const double v = residual_at(theta);
    if (v < best) {
      best = v;
      best_theta = theta;
    }
  }

  // One golden-section pass over the bracketing cell.
  const double gr = 0.6180339887498949;
  double lo = best_theta - step, hi = best_theta + step;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = residual_at(x1), f2 = residual_at(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = residual_at(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = residual_at(x2);
    }
  }
  return std::min(best, std::min(f1, f2));
}

}  // namespace descat
