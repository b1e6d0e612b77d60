#pragma once

#include <cmath>
#include <complex>

// Compensated floating-point primitives shared by the numeric kernels.
// Internal to the library; not installed.

namespace descat::detail {

// Neumaier running sum; add_product feeds it the exact two-term split of a
// double product (fma recovers the rounding remainder).
struct Accum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  void add_product(double x, double y) {
    const double p = x * y;
    add(p);
    add(std::fma(x, y, -p));
  }
  double value() const { return sum + comp; }
};

// p*q + r*s with one compensated accumulation per real component.
inline std::complex<double> fused_pair(std::complex<double> p,
                                       std::complex<double> q,
                                       std::complex<double> r,
                                       std::complex<double> s) {
  Accum re, im;
  re.add_product(p.real(), q.real());
  re.add_product(-p.imag(), q.imag());
  re.add_product(r.real(), s.real());
  re.add_product(-r.imag(), s.imag());
  im.add_product(p.real(), q.imag());
  im.add_product(p.imag(), q.real());
  im.add_product(r.real(), s.imag());
  im.add_product(r.imag(), s.real());
  return {re.value(), im.value()};
}

}  // namespace descat::detail
