#include "nss/phi.hpp"

#include <cmath>

#include "nss/errors.hpp"

namespace nss {

namespace {
constexpr double kSeriesThreshold = 1e-3;

void check_args(double x, double tau) {
    if (x < 0.0) throw DomainError("phi: x must be nonnegative");
    if (!(tau > 0.0)) throw DomainError("phi: tau must be positive");
}
}  // namespace

double phi0_scalar(double x, double tau) {
    check_args(x, tau);
    const double z = x * tau;
    if (z < kSeriesThreshold) {
        // tau * (1 - z/2 + z^2/6 - z^3/24 + z^4/120 - z^5/720)
        double term = 1.0, sum = 1.0;
        for (int k = 2; k <= 6; ++k) {
            term *= -z / k;
            sum += term;
        }
        return tau * sum;
    }
    return -std::expm1(-z) / x;
}

double phi1_scalar(double x, double tau) {
    check_args(x, tau);
    const double z = x * tau;
    if (z < kSeriesThreshold) {
        // tau * (1/2 - z/6 + z^2/24 - z^3/120 + z^4/720 - z^5/5040)
        double term = 0.5, sum = 0.5;
        for (int k = 3; k <= 7; ++k) {
            term *= -z / k;
            sum += term;
        }
        return tau * sum;
    }
    return (1.0 + std::expm1(-z) / z) / x;
}

}  // namespace nss
