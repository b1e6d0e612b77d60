#include "descat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "descat/diffgeo.hpp"
#include "descat/lorentz.hpp"
#include "descat/projection.hpp"
#include "descat/singular.hpp"

#include "json.hpp"

namespace descat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The sampling window |r| in [0.05, 2] keeps |x0| small enough that the
// absolute 1e-10 quadric tolerance is meaningful in double precision; the
// identities themselves are exact.
double draw_log_r(std::mt19937_64& rng, double lo = 0.05, double hi = 2.0) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

double quadric_residual(const Point4& p, Signature sig) {
  return minkowski_inner(p, p, sig) - space_form_sign(sig);
}

CheckResult check_membership(const SurfaceSpec& spec, const VerifyOptions& o) {
  CheckResult c{"membership", false, 0.0, 1e-10, o.membership_samples, ""};
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  const Signature sig = ambient_signature(spec.family);
  for (int i = 0; i < o.membership_samples; ++i) {
    double u;
    if (spec.family == Family::AdS) {
      u = ang(rng);
    } else {
      u = draw_log_r(rng);
      if (spec.family == Family::TypeI && i % 2 == 1) u = -u;  // mirrored sheet
    }
    const double theta = ang(rng);
    const Point4 p = surface_point(spec, u, theta);
    c.max_error = std::max(c.max_error, std::abs(quadric_residual(p, sig)));
  }
  c.passed = c.max_error <= c.tolerance;
  return c;
}

CheckResult check_det_frame(const SurfaceSpec& spec, const VerifyOptions& o) {
  CheckResult c{"det-frame", false, 0.0, 1e-10, o.membership_samples, ""};
  if (spec.family == Family::AdS) {
    c.passed = true;
    c.note = "skipped: no matrix frame for the AdS family";
    c.samples = 0;
    return c;
  }
  std::mt19937_64 rng(o.seed + 1);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < o.membership_samples; ++i) {
    // The frame is single-valued in z = r e^{i theta}; the mirrored sheet of
    // the first family reappears here as theta + pi, so r > 0 covers it.
    const double r = draw_log_r(rng);
    const double theta = ang(rng);
    const complexd z = std::polar(r, theta);
    const double det_err = std::abs(frame_det(spec, z) - complexd(1.0, 0.0));
    const double agree = max_coord_dist(surface_from_frame(spec, z),
                                        surface_point(spec, r, theta));
    c.max_error = std::max({c.max_error, det_err, agree});
  }
  c.passed = c.max_error <= c.tolerance;
  return c;
}

CheckResult check_cmc(const SurfaceSpec& spec, const VerifyOptions& o) {
  const bool ads = spec.family == Family::AdS;
  CheckResult c{"cmc", false, 0.0, ads ? 1e-3 : 1e-4, o.cmc_samples, ""};
  std::mt19937_64 rng(o.seed + 2);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  const Signature sig = ambient_signature(spec.family);
  SurfaceFn fn = [&spec](double u, double v) {
    return surface_point(spec, u, v);
  };
  int got = 0, attempts = 0;
  while (got < o.cmc_samples && attempts < 100 * o.cmc_samples) {
    ++attempts;
    double u, theta = ang(rng);
    if (ads) {
      u = ang(rng);
      if (std::abs(std::cos(spec.m * theta)) < 0.3) continue;
    } else {
      u = draw_log_r(rng, 0.5, 2.0);
      if (spec.family == Family::TypeI && attempts % 2 == 1) u = -u;
      if (std::abs(singular_residual(spec, u, theta)) < 0.3) continue;
    }
    try {
      // One step-halving extrapolation cancels the h^2 truncation term,
      // which otherwise eats most of the 1e-4 budget near the locus; the
      // steps stay above the rounding knee of the second differences.
      const double coarse = fundamental_forms(fn, sig, u, theta, 4e-4).H;
      const double fine = fundamental_forms(fn, sig, u, theta, 2e-4).H;
      const double H = fine + (fine - coarse) / 3.0;
      c.max_error = std::max(c.max_error, std::abs(H - 1.0));
      ++got;
    } catch (const std::exception&) {
      // a draw too close to degeneracy; take another
    }
  }
  c.samples = got;
  c.passed = got == o.cmc_samples && c.max_error <= c.tolerance;
  if (got != o.cmc_samples) c.note = "could not collect enough regular points";
  return c;
}

// Locus-adapted grid for the degeneracy test. detI scales like the fourth
// power of the residual with an (r, theta)-dependent prefactor, so a raw
// tensor grid admits no single threshold pair; instead the grid is built
// with rows at exact residual offsets d (one row exactly on the locus) and
// the test asserts a clean separation between on-row and off-row detI.
CheckResult check_degeneracy_locus(const SurfaceSpec& spec,
                                   const VerifyOptions& o) {
  CheckResult c{"degeneracy-locus", false, 0.0, 0.0,
                static_cast<long>(o.locus_grid) * o.locus_grid, ""};
  const int n = o.locus_grid;
  const int m = spec.m;
  const Signature sig = ambient_signature(spec.family);
  SurfaceFn fn = [&spec](double u, double v) {
    return surface_point(spec, u, v);
  };

  // Signed residual offsets: row n/2 sits exactly on the locus, the others
  // are spaced away from it starting at kMinOffset.
  const double kMinOffset = 0.05, kMaxOffset = 0.45;
  std::vector<double> offsets(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == n / 2) {
      offsets[static_cast<std::size_t>(j)] = 0.0;
      continue;
    }
    const int side = j < n / 2 ? -1 : 1;
    const int steps = side < 0 ? n / 2 : n - 1 - n / 2;
    const int idx = side < 0 ? n / 2 - 1 - j : j - n / 2 - 1;
    const double mag =
        kMinOffset + (kMaxOffset - kMinOffset) *
                         (steps > 1 ? static_cast<double>(idx) / (steps - 1) : 0.0);
    offsets[static_cast<std::size_t>(j)] = side * mag;
  }

  double max_on = -1e300, min_off = 1e300;
  std::vector<double> dets(static_cast<std::size_t>(n) * n);
  std::vector<double> residuals(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double d = offsets[static_cast<std::size_t>(j)];
      double u, theta;
      if (spec.family == Family::TypeI) {
        // Column picks a sheet and one of the m locus arcs, then a station
        // along it; r is solved so that r^m + 2cos(m theta) = d exactly.
        const double sheet = i % 2 == 0 ? 1.0 : -1.0;
        const int arc = (i / 2) % m;
        const int per = (n / 2) / m + 1;
        const double along = ((i / 2) / m + 0.5) / per;
        const bool cos_neg = sheet > 0 || m % 2 == 0;
        const double center = (cos_neg ? std::numbers::pi : 0.0) + kTwoPi * arc;
        const double mth =
            center + (along - 0.5) * (2.0 * std::numbers::pi / 3.0);
        theta = mth / m;
        const double target = d - 2.0 * std::cos(mth);  // = sheet^m * |r|^m
        u = sheet * std::pow(std::abs(target), 1.0 / m);
      } else {
        // Second family / AdS: residual is cos(m theta); solve theta near
        // the ray alpha_k, and let the column walk the transversal r (or s).
        const int k = i % (2 * m);
        const double a = std::acos(std::clamp(d, -1.0, 1.0));
        const double mth = k % 2 == 0 ? a + k * std::numbers::pi
                                      : (k + 1) * std::numbers::pi - a;
        theta = mth / m;
        const double along = (i / (2 * m) + 0.5) / (n / (2 * m) + 1);
        u = spec.family == Family::AdS
                ? kTwoPi * along
                : 0.5 * std::exp(std::log(4.0) * along);
      }
      const double det = metric_determinant(fn, sig, u, theta);
      const double res = spec.family == Family::TypeI
                             ? singular_residual(spec, u, theta)
                             : std::cos(m * theta);
      dets[static_cast<std::size_t>(i) * n + j] = det;
      residuals[static_cast<std::size_t>(i) * n + j] = res;
      if (d == 0.0)
        max_on = std::max(max_on, det);
      else
        min_off = std::min(min_off, det);
    }
  }

  const double delta = kMinOffset / 2.0;
  const double eps_floor =
      max_on > 0 ? std::sqrt(max_on * min_off) : min_off / 10.0;
  bool agree = true;
  for (std::size_t idx = 0; idx < dets.size(); ++idx)
    if ((dets[idx] > eps_floor) != (std::abs(residuals[idx]) > delta))
      agree = false;
  c.passed = agree && max_on < eps_floor && eps_floor < min_off;
  c.max_error = max_on;
  c.tolerance = eps_floor;
  std::ostringstream note;
  note << "delta=" << delta << " eps_floor=" << eps_floor
       << " on-locus max detI=" << max_on << " off-locus min detI=" << min_off;
  c.note = note.str();
  return c;
}

CheckResult check_symmetries(const SurfaceSpec& spec, const VerifyOptions& o) {
  CheckResult c{"symmetries", false, 0.0, 1e-10, o.symmetry_samples, ""};
  std::mt19937_64 rng(o.seed + 3);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  const int m = spec.m;
  for (int i = 0; i < o.symmetry_samples; ++i) {
    const double theta = ang(rng);
    double err = 0.0;
    if (spec.family == Family::TypeI) {
      const double r = draw_log_r(rng);
      err = m % 2 == 1
                ? max_coord_dist(components_I(m, -r, theta + std::numbers::pi),
                                 components_I(m, r, theta))
                : max_coord_dist(components_I(m, -r, theta),
                                 involution_iota(components_I(m, r, theta)));
      c.note = m % 2 == 1 ? "f(-r, theta+pi) = f(r, theta)"
                          : "f(-r, theta) = iota f(r, theta)";
    } else if (spec.family == Family::TypeII) {
      const double r = draw_log_r(rng);
      const int k = static_cast<int>(rng() % static_cast<unsigned>(2 * m));
      const double a = alpha_k(m, k);
      err = max_coord_dist(
          rotation_involution(k, m, components_II(m, r, 2.0 * a - theta)),
          involution_iota(components_II(m, r, theta)));
      c.note = "R'_k f(r, 2a_k - theta) = iota f(r, theta)";
    } else {
      const double s = ang(rng), ds = ang(rng);
      const Point4 p = ads_surface(m, s, theta);
      const Point4 q = ads_surface(m, s + ds, theta);
      const Point4 rot{p.t * std::cos(ds) - p.z * std::sin(ds), p.x, p.y,
                       p.t * std::sin(ds) + p.z * std::cos(ds)};
      err = max_coord_dist(q, rot);
      c.note = "screw rotation in s acts on the (t, z) plane";
    }
    c.max_error = std::max(c.max_error, err);
  }
  c.passed = c.max_error <= c.tolerance;
  return c;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

VerifyReport run_verify(const SurfaceSpec& spec, const VerifyOptions& options) {
  validate(spec);
  VerifyOptions o = options;
  if (o.quick) {
    o.membership_samples = std::min(o.membership_samples, 200);
    o.cmc_samples = std::min(o.cmc_samples, 50);
    o.locus_grid = std::min(o.locus_grid, 60);
    o.symmetry_samples = std::min(o.symmetry_samples, 200);
  }
  VerifyReport rep;
  rep.spec = spec;
  rep.seed = o.seed;
  rep.checks.push_back(check_membership(spec, o));
  rep.checks.push_back(check_det_frame(spec, o));
  rep.checks.push_back(check_cmc(spec, o));
  rep.checks.push_back(check_degeneracy_locus(spec, o));
  rep.checks.push_back(check_symmetries(spec, o));
  return rep;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["family"] = family_name(report.spec.family);
  j["m"] = report.spec.m;
  j["seed"] = report.seed;
  j["passed"] = report.all_passed();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["max_error"] = c.max_error;
    e["tolerance"] = c.tolerance;
    e["samples"] = c.samples;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump(2);
}

}  // namespace descat
