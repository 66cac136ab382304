#include "vortex/special.hpp"

#include <cmath>
#include <stdexcept>

namespace vortex::special {

double bessel_j(int order, double x) {
  if (order < 0) {
    // J_{-m} = (-1)^m J_m
    const double v = bessel_j(-order, x);
    return (order % 2 == 0) ? v : -v;
  }
  if (x < 0.0) {
    const double v = std::cyl_bessel_j(order, -x);
    return (order % 2 == 0) ? v : -v;
  }
  return std::cyl_bessel_j(order, x);
}

double bessel_j_prime(int order, double x) {
  if (order == 0) return -bessel_j(1, x);
  return 0.5 * (bessel_j(order - 1, x) - bessel_j(order + 1, x));
}

double bessel_j_zero(int order, int k) {
  if (order < 0) order = -order;
  if (k < 1) throw std::invalid_argument("bessel_j_zero: k must be >= 1");

  // Zeros of J_order are > order and spaced by roughly pi.
  const double step = 0.05;
  double lo = (order == 0) ? step : static_cast<double>(order);
  double f_lo = bessel_j(order, lo);
  int found = 0;
  double hi = lo;
  for (;;) {
    hi = lo + step;
    const double f_hi = bessel_j(order, hi);
    if ((f_lo > 0.0) != (f_hi > 0.0)) {
      if (++found == k) break;
    }
    lo = hi;
    f_lo = f_hi;
    if (hi > 200.0) throw std::runtime_error("bessel_j_zero: scan exhausted");
  }

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double f = bessel_j(order, x);
    if (f == 0.0) return x;
    if ((f > 0.0) == (f_lo > 0.0)) {
      lo = x;
    } else {
      hi = x;
    }
    double next = x - f / bessel_j_prime(order, x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * x) return next;
    x = next;
  }
  return x;
}

}  // namespace vortex::special
