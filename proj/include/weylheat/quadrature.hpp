#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "weylheat/linalg.hpp"
#include "weylheat/root_system.hpp"

namespace weylheat {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;

    Rule1D mapped(double a, double b) const {
        Rule1D r;
        r.nodes.reserve(nodes.size());
        r.weights.reserve(nodes.size());
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            r.nodes.push_back(mid + half * nodes[i]);
            r.weights.push_back(half * weights[i]);
        }
        return r;
    }

    Rule1D& append(const Rule1D& o) {
        nodes.insert(nodes.end(), o.nodes.begin(), o.nodes.end());
        weights.insert(weights.end(), o.weights.begin(), o.weights.end());
        return *this;
    }
};

/// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n; cached.
inline const Rule1D& gauss_legendre(int n) {
    static std::map<int, Rule1D> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Rule1D r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        r.nodes[static_cast<std::size_t>(i)] = -x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.weights[static_cast<std::size_t>(i)] = w;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

inline Rule1D gauss_legendre(int n, double a, double b) { return gauss_legendre(n).mapped(a, b); }

/// A node/weight list in R^d.
struct QuadRule {
    std::vector<Vec> nodes;
    std::vector<double> weights;

    template <class F>
    double integrate(F&& f) const {
        CompensatedSum acc;
        for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(weights[i] * f(nodes[i]));
        return acc.value();
    }

    std::size_t size() const { return nodes.size(); }
};

inline QuadRule tensor_rule(const std::vector<Rule1D>& axes) {
    QuadRule q;
    const int d = static_cast<int>(axes.size());
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::size_t total = 1;
    for (const Rule1D& a : axes) total *= a.nodes.size();
    q.nodes.reserve(total);
    q.weights.reserve(total);
    for (std::size_t c = 0; c < total; ++c) {
        Vec x(static_cast<std::size_t>(d));
        double w = 1.0;
        for (int j = 0; j < d; ++j) {
            x[static_cast<std::size_t>(j)] = axes[static_cast<std::size_t>(j)].nodes[idx[static_cast<std::size_t>(j)]];
            w *= axes[static_cast<std::size_t>(j)].weights[idx[static_cast<std::size_t>(j)]];
        }
        q.nodes.push_back(std::move(x));
        q.weights.push_back(w);
        for (int j = d - 1; j >= 0; --j) {
            if (++idx[static_cast<std::size_t>(j)] < axes[static_cast<std::size_t>(j)].nodes.size()) break;
            idx[static_cast<std::size_t>(j)] = 0;
        }
    }
    return q;
}

/// Polar rule on the annular sector r in [r_lo, r_hi], theta in [th_lo, th_hi],
/// with the Jacobian rho folded into the weights.
inline QuadRule sector_rule(double r_lo, double r_hi, double th_lo, double th_hi, int nr, int nth) {
    Rule1D rad = gauss_legendre(nr, r_lo, r_hi);
    Rule1D ang = gauss_legendre(nth, th_lo, th_hi);
    QuadRule q;
    q.nodes.reserve(rad.nodes.size() * ang.nodes.size());
    q.weights.reserve(rad.nodes.size() * ang.nodes.size());
    for (std::size_t i = 0; i < rad.nodes.size(); ++i)
        for (std::size_t j = 0; j < ang.nodes.size(); ++j) {
            double rho = rad.nodes[i], th = ang.nodes[j];
            q.nodes.push_back(Vec{rho * std::cos(th), rho * std::sin(th)});
            q.weights.push_back(rad.weights[i] * ang.weights[j] * rho);
        }
    return q;
}

/// Node-count heuristic: enough Gauss points to resolve a Gaussian of width
/// sqrt(4t) over an interval of the given length.
inline int nodes_for_width(double length, double t, int floor_nodes = 48, int cap = 1400) {
    double width = std::sqrt(4.0 * t);
    int n = static_cast<int>(12.0 + 7.0 * length / width);
    return std::max(floor_nodes, std::min(cap, n));
}

/// Quadrature over the positive chamber, restricted to a window around
/// `center` of half-width `reach` (the window is what makes small-t kernels
/// integrable with modest node counts). Orthant-shaped chambers get tensor
/// rules; planar sectors get polar rules.
inline QuadRule chamber_rule(const RootSystem& rs, const Vec& center, double reach, double t,
                             int floor_nodes = 48) {
    if (rs.shape == ChamberShape::axis_box) {
        std::vector<bool> constrained(static_cast<std::size_t>(rs.dimension), false);
        for (int a : rs.axes) constrained[static_cast<std::size_t>(a)] = true;
        std::vector<Rule1D> axes;
        for (int j = 0; j < rs.dimension; ++j) {
            double lo = center[static_cast<std::size_t>(j)] - reach;
            double hi = center[static_cast<std::size_t>(j)] + reach;
            if (constrained[static_cast<std::size_t>(j)]) lo = std::max(0.0, lo);
            axes.push_back(gauss_legendre(nodes_for_width(hi - lo, t, floor_nodes), lo, hi));
        }
        return tensor_rule(axes);
    }
    if (rs.shape == ChamberShape::planar_sector) {
        double rho_c = norm(center);
        double r_lo = std::max(0.0, rho_c - reach);
        double r_hi = rho_c + reach;
        int nr = nodes_for_width(r_hi - r_lo, t, floor_nodes);
        // angular resolution at the outer radius
        double arc = (rs.theta_hi - rs.theta_lo) * r_hi;
        int nth = nodes_for_width(arc, t, std::max(24, floor_nodes / 2));
        return sector_rule(r_lo, r_hi, rs.theta_lo, rs.theta_hi, nr, nth);
    }
    throw std::invalid_argument("chamber_rule: no quadrature scheme for generic chambers in d >= 3");
}

/// Quadrature over all of R^d (a window of half-width `reach` around
/// `center`), with panels split along every mirror hyperplane so piecewise
/// smooth extensions integrate at full Gauss accuracy. `scale` multiplies the
/// node counts, letting callers build two structurally different rules for
/// the two sides of an identity.
inline QuadRule fullspace_rule(const RootSystem& rs, const Vec& center, double reach, double t,
                               double scale = 1.0, int floor_nodes = 48) {
    auto scaled = [&](double length) {
        return std::max(8, static_cast<int>(std::ceil(scale * nodes_for_width(length, t, floor_nodes))));
    };
    if (rs.shape == ChamberShape::axis_box) {
        std::vector<bool> constrained(static_cast<std::size_t>(rs.dimension), false);
        for (int a : rs.axes) constrained[static_cast<std::size_t>(a)] = true;
        std::vector<Rule1D> axes;
        for (int j = 0; j < rs.dimension; ++j) {
            double lo = center[static_cast<std::size_t>(j)] - reach;
            double hi = center[static_cast<std::size_t>(j)] + reach;
            if (constrained[static_cast<std::size_t>(j)] && lo < 0.0 && hi > 0.0) {
                Rule1D split = gauss_legendre(scaled(-lo), lo, 0.0);
                split.append(gauss_legendre(scaled(hi), 0.0, hi));
                axes.push_back(std::move(split));
            } else {
                axes.push_back(gauss_legendre(scaled(hi - lo), lo, hi));
            }
        }
        return tensor_rule(axes);
    }
    if (rs.shape == ChamberShape::planar_sector) {
        // cover the disc of radius ||center|| + reach, one angular panel per
        // chamber image
        double r_hi = norm(center) + reach;
        double aperture = rs.theta_hi - rs.theta_lo;
        int sectors = static_cast<int>(std::round(2.0 * std::numbers::pi / aperture));
        int nr = scaled(r_hi);
        int nth = std::max(12, static_cast<int>(std::ceil(scale * nodes_for_width(aperture * r_hi, t, std::max(24, floor_nodes / 2)))));
        QuadRule q;
        for (int s = 0; s < sectors; ++s) {
            double lo = rs.theta_lo + s * aperture;
            QuadRule part = sector_rule(0.0, r_hi, lo, lo + aperture, nr, nth);
            q.nodes.insert(q.nodes.end(), part.nodes.begin(), part.nodes.end());
            q.weights.insert(q.weights.end(), part.weights.begin(), part.weights.end());
        }
        return q;
    }
    throw std::invalid_argument("fullspace_rule: no quadrature scheme for generic chambers in d >= 3");
}

/// Truncation reach for heat-kernel integrands: 8 sigma of the endpoint
/// Gaussian (sigma^2 = 2t per coordinate). Every group image of x is at least
/// as far from a chamber point as x itself, so a window of this half-width
/// around x captures the whole group sum to ~1e-13 relative.
inline double heat_reach(double t) { return 8.0 * std::sqrt(2.0 * t); }

/// Explicit-node variants, for integrands whose width is not set by a heat
/// time (smooth test functions in the operator-identity checks).

inline QuadRule chamber_rule_n(const RootSystem& rs, const Vec& center, double reach, int axis_nodes,
                               int angular_nodes) {
    if (rs.shape == ChamberShape::axis_box) {
        std::vector<bool> constrained(static_cast<std::size_t>(rs.dimension), false);
        for (int a : rs.axes) constrained[static_cast<std::size_t>(a)] = true;
        std::vector<Rule1D> axes;
        for (int j = 0; j < rs.dimension; ++j) {
            double lo = center[static_cast<std::size_t>(j)] - reach;
            double hi = center[static_cast<std::size_t>(j)] + reach;
            if (constrained[static_cast<std::size_t>(j)]) lo = std::max(0.0, lo);
            axes.push_back(gauss_legendre(axis_nodes, lo, hi));
        }
        return tensor_rule(axes);
    }
    if (rs.shape == ChamberShape::planar_sector) {
        double r_hi = norm(center) + reach;
        return sector_rule(0.0, r_hi, rs.theta_lo, rs.theta_hi, axis_nodes, angular_nodes);
    }
    throw std::invalid_argument("chamber_rule_n: no quadrature scheme for generic chambers in d >= 3");
}

inline QuadRule fullspace_rule_n(const RootSystem& rs, const Vec& center, double reach, int axis_nodes,
                                 int angular_nodes) {
    if (rs.shape == ChamberShape::axis_box) {
        std::vector<bool> constrained(static_cast<std::size_t>(rs.dimension), false);
        for (int a : rs.axes) constrained[static_cast<std::size_t>(a)] = true;
        std::vector<Rule1D> axes;
        for (int j = 0; j < rs.dimension; ++j) {
            double lo = center[static_cast<std::size_t>(j)] - reach;
            double hi = center[static_cast<std::size_t>(j)] + reach;
            if (constrained[static_cast<std::size_t>(j)] && lo < 0.0 && hi > 0.0) {
                Rule1D split = gauss_legendre(axis_nodes, lo, 0.0);
                split.append(gauss_legendre(axis_nodes, 0.0, hi));
                axes.push_back(std::move(split));
            } else {
                axes.push_back(gauss_legendre(axis_nodes, lo, hi));
            }
        }
        return tensor_rule(axes);
    }
    if (rs.shape == ChamberShape::planar_sector) {
        double r_hi = norm(center) + reach;
        double aperture = rs.theta_hi - rs.theta_lo;
        int sectors = static_cast<int>(std::round(2.0 * std::numbers::pi / aperture));
        QuadRule q;
        for (int s = 0; s < sectors; ++s) {
            double lo = rs.theta_lo + s * aperture;
            QuadRule part = sector_rule(0.0, r_hi, lo, lo + aperture, axis_nodes, angular_nodes);
            q.nodes.insert(q.nodes.end(), part.nodes.begin(), part.nodes.end());
            q.weights.insert(q.weights.end(), part.weights.begin(), part.weights.end());
        }
        return q;
    }
    throw std::invalid_argument("fullspace_rule_n: no quadrature scheme for generic chambers in d >= 3");
}

}  // namespace weylheat
