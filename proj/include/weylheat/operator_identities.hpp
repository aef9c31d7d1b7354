#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "weylheat/kernels.hpp"
#include "weylheat/quadrature.hpp"

namespace weylheat {

struct PairingResult {
    double lhs = 0.0;       // integral over R^d of E^omega(phi) * Phi
    double rhs = 0.0;       // |W| * integral over C+ of phi * (A_omega Phi)
    double residual = 0.0;  // |lhs - rhs| / (|lhs| + |rhs| + 1e-300)
};

/// Numerical check of the extension/averaging pairing
///   int_Omega E^omega(phi) Phi = |W| int_{Omega+} phi (A_omega Phi).
/// The left side integrates the folded extension over all of R^d on a rule
/// whose panels are split along every mirror (E^omega phi is only piecewise
/// smooth); the right side uses a chamber rule of a different order, so the
/// two sides are independently computed integrals, not a resummation.
template <class PhiPlus, class PhiFull>
PairingResult check_extension_pairing(const ReflectionGroup& w, const Weight& omega, PhiPlus&& phi,
                                      PhiFull&& big_phi, double radius = 8.0, int lhs_nodes = 56,
                                      int rhs_nodes = 64) {
    const RootSystem& rs = w.root_system();
    Vec origin(static_cast<std::size_t>(rs.dimension), 0.0);

    QuadRule lhs_rule = fullspace_rule_n(rs, origin, radius, lhs_nodes, lhs_nodes / 2 + 4);
    CompensatedSum lhs;
    for (std::size_t i = 0; i < lhs_rule.nodes.size(); ++i) {
        auto ext = extend_from_chamber(w, omega, phi, lhs_rule.nodes[i]);
        if (!ext) continue;  // measure-zero mirror hit
        lhs.add(lhs_rule.weights[i] * *ext * big_phi(lhs_rule.nodes[i]));
    }

    QuadRule rhs_rule = chamber_rule_n(rs, origin, radius, rhs_nodes, rhs_nodes / 2 + 6);
    CompensatedSum rhs;
    for (std::size_t i = 0; i < rhs_rule.nodes.size(); ++i) {
        const Vec& u = rhs_rule.nodes[i];
        double avg = average_over_group(w, omega, big_phi, u);
        rhs.add(rhs_rule.weights[i] * phi(u) * avg);
    }

    PairingResult out;
    out.lhs = lhs.value();
    out.rhs = w.size() * rhs.value();
    out.residual = std::abs(out.lhs - out.rhs) / (std::abs(out.lhs) + std::abs(out.rhs) + 1e-300);
    return out;
}

/// A smooth function with its exact gradient; the test corpus for the
/// derivative identities.
struct AnalyticField {
    std::string label;
    std::function<double(const Vec&)> value;
    std::function<Vec(const Vec&)> gradient;
};

/// Gaussians times low-degree monomials in dimension d.
inline std::vector<AnalyticField> analytic_corpus(int d) {
    std::vector<AnalyticField> out;
    out.push_back({"gauss", [](const Vec& x) { return std::exp(-norm_sq(x)); },
                   [](const Vec& x) {
                       Vec g = -2.0 * std::exp(-norm_sq(x)) * x;
                       return g;
                   }});
    out.push_back({"x1*gauss",
                   [](const Vec& x) { return x[0] * std::exp(-norm_sq(x)); },
                   [](const Vec& x) {
                       double e = std::exp(-norm_sq(x));
                       Vec g = -2.0 * (x[0] * e) * x;
                       g[0] += e;
                       return g;
                   }});
    if (d >= 2)
        out.push_back({"x1*x2*gauss",
                       [](const Vec& x) { return x[0] * x[1] * std::exp(-0.5 * norm_sq(x)); },
                       [](const Vec& x) {
                           double e = std::exp(-0.5 * norm_sq(x));
                           Vec g = -1.0 * (x[0] * x[1] * e) * x;
                           g[0] += x[1] * e;
                           g[1] += x[0] * e;
                           return g;
                       }});
    return out;
}

/// The analytic partial derivative d_i (A_w F)(y): chain rule through g y,
/// using the exact gradient of F.
inline double averaged_partial(const ReflectionGroup& w, const Weight& weight, const AnalyticField& f,
                               int i, const Vec& y) {
    double s = 0.0;
    for (int g = 0; g < w.size(); ++g) {
        if (weight[static_cast<std::size_t>(g)] == 0.0) continue;
        Vec grad = f.gradient(w.apply(g, y));
        double chain = 0.0;
        const Mat& mat = w.element(g).matrix;
        for (int m = 0; m < w.dimension(); ++m) chain += grad[static_cast<std::size_t>(m)] * mat(m, i);
        s += weight[static_cast<std::size_t>(g)] * chain;
    }
    return s / w.size();
}

struct IntertwiningResidual {
    double h2 = 0.0;  // max_j |A_om(d_j F) - sum_i d_i(A_{om g_ji} F)|
    double h3 = 0.0;  // max_i |d_i(A_om F) - sum_j A_{om g_ji}(d_j F)|
};

/// Both derivative/averaging intertwining identities, evaluated with exact
/// gradients on both sides.
inline IntertwiningResidual check_derivative_intertwining(const ReflectionGroup& w, const Weight& omega,
                                                          const AnalyticField& f, const Vec& y) {
    const int d = w.dimension();
    IntertwiningResidual out;
    for (int j = 0; j < d; ++j) {
        double lhs = average_over_group(
            w, omega, [&](const Vec& z) { return f.gradient(z)[static_cast<std::size_t>(j)]; }, y);
        double rhs = 0.0;
        for (int i = 0; i < d; ++i)
            rhs += averaged_partial(w, weight_product(omega, entry_weight(w, j, i)), f, i, y);
        out.h2 = std::max(out.h2, std::abs(lhs - rhs));
    }
    for (int i = 0; i < d; ++i) {
        double lhs = averaged_partial(w, omega, f, i, y);
        double rhs = 0.0;
        for (int j = 0; j < d; ++j)
            rhs += average_over_group(
                w, weight_product(omega, entry_weight(w, j, i)),
                [&](const Vec& z) { return f.gradient(z)[static_cast<std::size_t>(j)]; }, y);
        out.h3 = std::max(out.h3, std::abs(lhs - rhs));
    }
    return out;
}

}  // namespace weylheat
