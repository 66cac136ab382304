#pragma once

namespace vortex::special {

/// Bessel function of the first kind J_order(x), any integer order and sign of x.
double bessel_j(int order, double x);

/// d/dx J_order(x).
double bessel_j_prime(int order, double x);

/// k-th positive zero of J_order (k >= 1): sign-change scan followed by
/// safeguarded Newton iteration.
double bessel_j_zero(int order, int k = 1);

}  // namespace vortex::special
