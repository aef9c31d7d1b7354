#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "weylheat/bessel.hpp"
#include "weylheat/linalg.hpp"

namespace weylheat {

struct SeriesSpec {
    int max_terms = 400;
    double tail_tolerance = 1e-14;  // absolute cutoff on the term bound

    SeriesSpec() = default;
    SeriesSpec(int terms, double tol) : max_terms(terms), tail_tolerance(tol) {
        if (max_terms < 1) throw std::invalid_argument("SeriesSpec: max_terms must be >= 1");
        if (tail_tolerance <= 0.0) throw std::invalid_argument("SeriesSpec: tail_tolerance must be positive");
    }
};

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;
    bool converged = false;
    double tail_bound = 0.0;  // bound on the truncated remainder
};

enum class WedgeKind { neumann, dirichlet };

/// Carslaw-Jaeger series for the heat kernel on the plane cone of aperture
/// pi/n: with x = rho e^{i theta}, y = r e^{i xi},
///
///   D:  (n / 2 pi t) exp(-(rho^2+r^2)/4t) sum_{j>=1} I_{jn}(rho r / 2t) 2 sin(jn theta) sin(jn xi)
///   N:  same with cosines and the extra j = 0 term I_0 with weight 1.
///
/// For odd n the angles are shifted by pi/2n, moving the chamber
/// (-pi/2n, pi/2n) onto (0, pi/n). Terms are cut off once the bound
/// prefactor * 2 I_{jn} falls below tail_tolerance; the reported tail_bound
/// sums those bounds over the truncated range.
inline SeriesResult carslaw_jaeger(WedgeKind kind, int n, double t, const Vec& x, const Vec& y,
                                   const SeriesSpec& spec = {}) {
    if (n < 3) throw std::invalid_argument("carslaw_jaeger: n must be >= 3");
    if (t <= 0.0) throw std::invalid_argument("carslaw_jaeger: t must be positive");
    const double pi = std::numbers::pi;
    double rho = norm(x), r = norm(y);
    double theta = std::atan2(x[1], x[0]);
    double xi = std::atan2(y[1], y[0]);
    if (n % 2 != 0) {  // odd-n chamber |theta| < pi/2n, shift onto (0, pi/n)
        theta += pi / (2.0 * n);
        xi += pi / (2.0 * n);
    }
    const double slack = 1e-9;
    if (theta < -slack || theta > pi / n + slack || xi < -slack || xi > pi / n + slack)
        throw std::invalid_argument("carslaw_jaeger: points must lie in the closed chamber");

    const double arg = rho * r / (2.0 * t);
    const double pref = n / (2.0 * pi * t) * std::exp(-(rho * rho + r * r) / (4.0 * t));

    SeriesResult out;
    CompensatedSum acc;
    if (kind == WedgeKind::neumann) acc.add(pref * bessel_I(0.0, arg));
    int j = 1;
    for (; j <= spec.max_terms; ++j) {
        double bessel = bessel_I(static_cast<double>(j) * n, arg);
        double bound = pref * 2.0 * bessel;
        if (bound < spec.tail_tolerance) {
            out.converged = true;
            break;
        }
        double angular = (kind == WedgeKind::dirichlet)
                             ? std::sin(j * n * theta) * std::sin(j * n * xi)
                             : std::cos(j * n * theta) * std::cos(j * n * xi);
        acc.add(pref * 2.0 * bessel * angular);
        out.terms_used = j;
    }
    // remainder bound: |sin sin|, |cos cos| <= 1 term by term; the orders jn
    // sit far beyond the argument here, so a few extra bounds cover the tail
    double tail = 0.0;
    for (int jj = out.terms_used + 1; jj <= out.terms_used + 40; ++jj)
        tail += pref * 2.0 * bessel_I(static_cast<double>(jj) * n, arg);
    out.tail_bound = tail;
    out.value = acc.value();
    return out;
}

}  // namespace weylheat
