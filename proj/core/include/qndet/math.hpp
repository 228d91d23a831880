#pragma once

#include <complex>

namespace qndet {

// Complex division with an explicit domain check: throws std::domain_error
// when the denominator is exactly zero instead of returning NaN/Inf.
std::complex<double> complex_div(std::complex<double> num, std::complex<double> den);

// Complementary error function.  Thin wrapper over the C library routine;
// kept as a named entry point so every caller in the project shares one
// definition (and one test surface).
double erfc(double x);

// Inverse of erfc on (0, 2).  erfc_inv(erfc(x)) == x to ~1 ulp.
double erfc_inv(double y);

}  // namespace qndet
