#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylheat/kernels.hpp"
#include "weylheat/quadrature.hpp"
#include "weylheat/rng.hpp"

namespace weylheat {

/// Neumann/Dirichlet facet flags induced by a character: facet k (the wall in
/// the hyperplane of simple root k) is Neumann iff chi(sigma_{alpha_k}) = +1.
struct BoundaryPartition {
    std::vector<bool> neumann;  // per simple root

    static BoundaryPartition from_character(const ReflectionGroup& w, const TwoCharacter& chi) {
        BoundaryPartition bp;
        const int m = static_cast<int>(w.root_system().simple.size());
        for (int k = 0; k < m; ++k) bp.neumann.push_back(chi(w.simple_reflection(k)) == 1);
        return bp;
    }
};

/// Points on the interior of facet k: project seeded random interior points
/// onto the wall hyperplane and keep those a margin away from the other walls.
inline std::vector<Vec> facet_samples(const ReflectionGroup& w, int k, int count, double margin,
                                      std::uint64_t seed) {
    const RootSystem& rs = w.root_system();
    const Vec alpha = rs.root(rs.simple[static_cast<std::size_t>(k)]);
    Rng rng(stream_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<Vec> out;
    for (int guard = 0; guard < 100000 && static_cast<int>(out.size()) < count; ++guard) {
        Vec p(rs.dimension);
        for (int j = 0; j < rs.dimension; ++j) p[static_cast<std::size_t>(j)] = rng.uniform(0.2, 2.0);
        if (!rs.chamber_contains(p, 1e-6)) continue;
        Vec bar = p - dot(p, alpha) * alpha;
        bool ok = true;
        for (std::size_t j = 0; j < rs.simple.size(); ++j) {
            if (static_cast<int>(j) == k) continue;
            if (dot(bar, rs.root(rs.simple[j])) <= margin) ok = false;
        }
        if (ok) out.push_back(std::move(bar));
    }
    if (static_cast<int>(out.size()) < count)
        throw std::invalid_argument("facet_samples: could not place samples with the requested margin");
    return out;
}

/// u(t,x) = integral over the chamber of K(x,y) f(y) dy; the kernel itself is
/// the solver of the mixed Neumann-Dirichlet problem.
template <class F>
double solve_heat(const ReflectionGroup& w, const TwoCharacter& chi, double t, const Vec& x, F&& f,
                  double extra_reach = 0.0, int floor_nodes = 48) {
    if (t <= 0.0) throw std::invalid_argument("solve_heat: t must be positive");
    SymmetrizedKernel k = heat_kernel(w, chi, t);
    QuadRule rule = chamber_rule(w.root_system(), x, heat_reach(t) + extra_reach, t, floor_nodes);
    return rule.integrate([&](const Vec& y) { return k(x, y) * f(y); });
}

/// Same solution through the unfolding route: integrate the free kernel
/// against the eta-extension of f over all of R^d.
template <class F>
double solve_heat_unfolded(const ReflectionGroup& w, const TwoCharacter& chi, double t, const Vec& x,
                           F&& f, double extra_reach = 0.0, int floor_nodes = 48) {
    if (t <= 0.0) throw std::invalid_argument("solve_heat_unfolded: t must be positive");
    Weight omega = weight_from_character(chi);
    QuadRule rule = fullspace_rule(w.root_system(), x, heat_reach(t) + extra_reach, t, 1.0, floor_nodes);
    BaseKernel p = BaseKernel::heat(t, w.dimension());
    return rule.integrate([&](const Vec& z) {
        auto ext = extend_from_chamber(w, omega, f, z);
        if (!ext) return 0.0;  // mirror set has measure zero
        return p(x - z) * *ext;
    });
}

/// Kernel mass integral_{C+} K(x, y) dy: equals 1 for the trivial character,
/// lies strictly inside (0,1) otherwise, and increases to 1 as t decreases.
inline double mass(const ReflectionGroup& w, const TwoCharacter& chi, double t, const Vec& x,
                   int floor_nodes = 48) {
    if (t <= 0.0) throw std::invalid_argument("mass: t must be positive");
    if (!w.root_system().roots.empty() && !w.root_system().chamber_contains(x))
        throw std::invalid_argument("mass: x must lie in the open chamber");
    SymmetrizedKernel k = heat_kernel(w, chi, t);
    QuadRule rule = chamber_rule(w.root_system(), x, heat_reach(t), t, floor_nodes);
    return rule.integrate([&](const Vec& y) { return k(x, y); });
}

/// Kernel mass outside the ball B(x, delta): the localization quantity of the
/// small-time concentration property.
inline double outside_ball_mass(const ReflectionGroup& w, const TwoCharacter& chi, double t,
                                const Vec& x, double delta, int floor_nodes = 48) {
    SymmetrizedKernel k = heat_kernel(w, chi, t);
    QuadRule rule = chamber_rule(w.root_system(), x, heat_reach(t) + delta, t, floor_nodes);
    return rule.integrate([&](const Vec& y) {
        if (norm_sq(y - x) <= delta * delta) return 0.0;
        return k(x, y);
    });
}

struct FacetSampleReport {
    int facet = 0;
    bool neumann_flagged = false;
    Vec point;
    double normalized_stat = 0.0;  // |K|/K_triv on Dirichlet facets, |d_nu K|/K_triv on Neumann
};

/// Boundary behaviour of the kernel K(., y) on every facet: Dirichlet facets
/// report the normalized kernel value, Neumann facets the normalized central
/// difference of the outward normal derivative. The group-sum formula is
/// defined on all of R^d, so stepping outside the chamber is fine.
inline std::vector<FacetSampleReport> boundary_check(const ReflectionGroup& w, const TwoCharacter& chi,
                                                     double t, const Vec& y,
                                                     const std::vector<std::vector<Vec>>& samples,
                                                     double h = 1e-4) {
    if (h < 1e-6 || h > 1e-3) throw std::invalid_argument("boundary_check: h out of range [1e-6, 1e-3]");
    const RootSystem& rs = w.root_system();
    SymmetrizedKernel k = heat_kernel(w, chi, t);
    BoundaryPartition bp = BoundaryPartition::from_character(w, chi);
    std::vector<FacetSampleReport> out;
    for (std::size_t f = 0; f < rs.simple.size(); ++f) {
        const Vec alpha = rs.root(rs.simple[f]);
        for (const Vec& bar : samples[f]) {
            if (std::abs(dot(bar, alpha)) > 1e-9)
                throw std::invalid_argument("boundary_check: sample not on its facet");
            FacetSampleReport rep;
            rep.facet = static_cast<int>(f);
            rep.neumann_flagged = bp.neumann[f];
            rep.point = bar;
            double scale = k.trivial_scale(bar, y);
            if (bp.neumann[f]) {
                // outward normal of {<x,alpha> > 0} is -alpha
                Vec xp = bar - h * alpha;
                Vec xm = bar + h * alpha;
                rep.normalized_stat = std::abs((k(xp, y) - k(xm, y)) / (2.0 * h)) / scale;
            } else {
                rep.normalized_stat = std::abs(k(bar, y)) / scale;
            }
            out.push_back(std::move(rep));
        }
    }
    return out;
}

struct HeatResidual {
    double time_term = 0.0;  // central difference in t
    double laplacian = 0.0;  // second-difference Laplacian in x
    double residual = 0.0;   // |dt - lap| / (|dt| + |lap| + floor)
};

/// Finite-difference check that v(t,x) = K_t(x,y) satisfies the heat equation.
inline HeatResidual heat_residual(const ReflectionGroup& w, const TwoCharacter& chi, double t,
                                  const Vec& x, const Vec& y, double ht, double hx) {
    auto v = [&](double tt, const Vec& xx) { return heat_kernel(w, chi, tt)(xx, y); };
    HeatResidual r;
    r.time_term = (v(t + ht, x) - v(t - ht, x)) / (2.0 * ht);
    double center = v(t, x);
    double lap = 0.0;
    for (int j = 0; j < w.dimension(); ++j) {
        Vec xp = x, xm = x;
        xp[static_cast<std::size_t>(j)] += hx;
        xm[static_cast<std::size_t>(j)] -= hx;
        lap += (v(t, xp) - 2.0 * center + v(t, xm)) / (hx * hx);
    }
    r.laplacian = lap;
    r.residual = std::abs(r.time_term - r.laplacian) / (std::abs(r.time_term) + std::abs(r.laplacian) + 1e-300);
    return r;
}

/// Semigroup identity: integral over the chamber of K_s(x,z) K_t(z,y) dz
/// against K_{s+t}(x,y); returns the relative residual.
inline double chapman_kolmogorov(const ReflectionGroup& w, const TwoCharacter& chi, double s, double t,
                                 const Vec& x, const Vec& y, int floor_nodes = 64) {
    if (s <= 0.0 || t <= 0.0) throw std::invalid_argument("chapman_kolmogorov: s, t must be positive");
    SymmetrizedKernel ks = heat_kernel(w, chi, s);
    SymmetrizedKernel kt = heat_kernel(w, chi, t);
    SymmetrizedKernel kst = heat_kernel(w, chi, s + t);
    Vec mid = 0.5 * (x + y);
    double reach = heat_reach(std::max(s, t)) + 0.5 * norm(x - y);
    QuadRule rule = chamber_rule(w.root_system(), mid, reach, std::max(s, t), floor_nodes);
    double conv = rule.integrate([&](const Vec& z) { return ks(x, z) * kt(z, y); });
    double direct = kst(x, y);
    return std::abs(conv - direct) / (std::abs(direct) + 1e-300);
}

}  // namespace weylheat
