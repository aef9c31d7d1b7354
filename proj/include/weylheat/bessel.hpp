#pragma once

#include <cmath>
#include <stdexcept>

namespace weylheat {

/// Modified Bessel function I_nu(z) for nu >= 0, z >= 0, by the ascending
/// power series sum_m (z/2)^(nu+2m) / (m! Gamma(nu+m+1)). The leading term is
/// formed in the log domain so large orders neither overflow nor lose the
/// scale; successive terms follow the exact ratio recurrence. Terms are summed
/// until they drop below 1e-18 of the partial sum.
inline double bessel_I(double nu, double z) {
    if (nu < 0.0 || z < 0.0) throw std::invalid_argument("bessel_I: nu and z must be non-negative");
    if (z == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double half = 0.5 * z;
    double log_t0 = nu * std::log(half) - std::lgamma(nu + 1.0);
    if (log_t0 < -740.0) return 0.0;  // below double range even after growth
    double term = std::exp(log_t0);
    double sum = term;
    const double q = half * half;
    for (int m = 0; m < 1000000; ++m) {
        term *= q / ((m + 1.0) * (nu + m + 1.0));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

}  // namespace weylheat
