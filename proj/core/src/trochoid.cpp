#include "descat/trochoid.hpp"

#include <cmath>
#include <stdexcept>

namespace descat {

namespace {

void check_m(int m) {
  if (m < 2) throw std::invalid_argument("trochoid: need m >= 2");
}

}  // namespace

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

Vec2 gamma(int m, double theta) {
  check_m(m);
  const double a = (m - 1.0) * (m - 1.0);
  const double b = (m + 1.0) * (m + 1.0);
  const double hi = (m + 1.0) * theta;
  const double lo = (m - 1.0) * theta;
  return {(a * std::cos(hi) + b * std::cos(lo)) / (4.0 * m),
          (a * std::sin(hi) - b * std::sin(lo)) / (4.0 * m)};
}

Vec2 gamma_prime(int m, double theta) {
  check_m(m);
  const double a = (m - 1.0) * (m - 1.0);
  const double b = (m + 1.0) * (m + 1.0);
  const double hi = (m + 1.0) * theta;
  const double lo = (m - 1.0) * theta;
  return {(-a * (m + 1.0) * std::sin(hi) - b * (m - 1.0) * std::sin(lo)) /
              (4.0 * m),
          (a * (m + 1.0) * std::cos(hi) - b * (m - 1.0) * std::cos(lo)) /
              (4.0 * m)};
}

Vec2 gamma_second(int m, double theta) {
  check_m(m);
  const double a = (m - 1.0) * (m - 1.0);
  const double b = (m + 1.0) * (m + 1.0);
  const double hi = (m + 1.0) * theta;
  const double lo = (m - 1.0) * theta;
  const double ahh = a * (m + 1.0) * (m + 1.0);
  const double bll = b * (m - 1.0) * (m - 1.0);
  return {(-ahh * std::cos(hi) - bll * std::cos(lo)) / (4.0 * m),
          (-ahh * std::sin(hi) + bll * std::sin(lo)) / (4.0 * m)};
}

double signed_curvature(int m, double theta) {
  const Vec2 d1 = gamma_prime(m, theta);
  const Vec2 d2 = gamma_second(m, theta);
  const double speed = norm(d1);
  if (speed <= 1e-12) {
    throw std::domain_error("signed_curvature: vanishing speed");
  }
  return (d1.x * d2.y - d1.y * d2.x) / (speed * speed * speed);
}

TrochoidParams trochoid_params(int m) {
  check_m(m);
  return {(m - 1.0) / 2.0, (m * m - 1.0) / (4.0 * m),
          (m + 1.0) * (m + 1.0) / (4.0 * m)};
}

Vec2 hypotrochoid(const TrochoidParams& params, double d, double s) {
  if (params.r_m == 0.0) {
    throw std::invalid_argument("hypotrochoid: rolling radius must be nonzero");
  }
  const double arm = params.r_c - params.r_m;  // fixed minus rolling
  const double ratio = arm / params.r_m;
  return {arm * std::cos(s) + d * std::cos(ratio * s),
          arm * std::sin(s) - d * std::sin(ratio * s)};
}

}  // namespace descat
