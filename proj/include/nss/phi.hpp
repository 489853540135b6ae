#pragma once

// ETD weight functions applied per Fourier mode:
//   phi0(x; tau) = (1 - e^{-x tau}) / x
//   phi1(x; tau) = (1 - (1 - e^{-x tau})/(x tau)) / x
// Both are continuous at x = 0 with limits tau and tau/2.  Below
// x*tau = 1e-3 the direct formulas lose roughly half the significant digits
// to cancellation, so a truncated Taylor series is used instead.

namespace nss {

double phi0_scalar(double x, double tau);
double phi1_scalar(double x, double tau);

}  // namespace nss
