#pragma once

namespace descat {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
};

double norm(const Vec2& v);

// Limit curve of the type-I ends:
//   x1 = ((m-1)^2 cos(m+1)0 + (m+1)^2 cos(m-1)0) / (4m)
//   x2 = ((m-1)^2 sin(m+1)0 - (m+1)^2 sin(m-1)0) / (4m)
Vec2 gamma(int m, double theta);
Vec2 gamma_prime(int m, double theta);
Vec2 gamma_second(int m, double theta);

// k = (x'y'' - y'x'') / |gamma'|^3; throws on vanishing speed.
double signed_curvature(int m, double theta);

// Parameter triple of the hypotrochoid identification, stored exactly as
// printed: r_c = (m-1)/2, r_m = (m^2-1)/(4m), d = (m+1)^2/(4m).
struct TrochoidParams {
  double r_c = 0.0;
  double r_m = 0.0;
  double d = 0.0;
};

TrochoidParams trochoid_params(int m);

// Standard roulette of a circle of radius rho rolling inside a fixed circle
// of radius R, pen offset d:
//   x(s) = (R - rho) cos s + d cos(((R - rho)/rho) s)
//   y(s) = (R - rho) sin s - d sin(((R - rho)/rho) s)
// The fit in the test suite resolves R = r_c (fixed circle) and rho = r_m
// (rolling circle); with that reading the image equals {gamma_m} for
// params = trochoid_params(m) and d = params.d, closing after s = 2(m+1)pi.
Vec2 hypotrochoid(const TrochoidParams& params, double d, double s);

}  // namespace descat
