#include "qndet/math.hpp"

#include <cmath>
#include <stdexcept>

namespace qndet {

std::complex<double> complex_div(std::complex<double> num, std::complex<double> den) {
  if (den.real() == 0.0 && den.imag() == 0.0)
    throw std::domain_error("complex_div: division by zero");
  return num / den;
}

double erfc(double x) { return std::erfc(x); }

double erfc_inv(double y) {
  if (!(y > 0.0 && y < 2.0))
    throw std::domain_error("erfc_inv: argument must lie in (0, 2)");
  if (y == 1.0) return 0.0;
  if (y > 1.0) return -erfc_inv(2.0 - y);

  // y in (0, 1): the root of erfc(x) = y has x > 0.  Bracket it, then
  // bisect.  erfc is strictly decreasing, so plain bisection converges to
  // the last bit; ~200 halvings are cheap and avoid the overflow pitfalls a
  // Newton step with exp(x^2) has near the underflow end.
  double lo = 0.0;
  double hi = 1.0;
  while (std::erfc(hi) > y) hi *= 2.0;  // terminates: erfc underflows to 0 < y
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (std::erfc(mid) > y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qndet
