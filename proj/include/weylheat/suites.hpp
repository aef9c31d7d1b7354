#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "weylheat/carslaw_jaeger.hpp"
#include "weylheat/ibvp.hpp"
#include "weylheat/io.hpp"
#include "weylheat/montecarlo.hpp"
#include "weylheat/operator_identities.hpp"

namespace weylheat::suites {

struct SuiteOptions {
    std::uint64_t seed = 0xC0FFEEULL;
    long long mc_samples = 1000000;            // folded-density oracle
    long long mc_dirichlet_samples = 100000;   // killed-mass oracle
    int mc_steps = 10000;
    int threads = 1;
};

namespace detail {

struct NamedSystem {
    std::string label;
    ReflectionGroup group;
};

inline std::vector<NamedSystem> standard_systems(bool with_d3 = false) {
    std::vector<NamedSystem> out;
    out.push_back({"orthant d=2", generate_group(orthogonal_roots(2, {1, 2}))});
    if (with_d3) out.push_back({"orthant d=3", generate_group(orthogonal_roots(3, {1, 2, 3}))});
    for (int n : {3, 4, 5, 6})
        out.push_back({"dihedral n=" + std::to_string(n), generate_group(dihedral_roots(n))});
    return out;
}

inline Vec random_chamber_point(const RootSystem& rs, Rng& rng, double margin, double lo = 0.05,
                                double hi = 2.0) {
    for (int guard = 0; guard < 200000; ++guard) {
        Vec p(static_cast<std::size_t>(rs.dimension));
        for (auto& c : p) c = rng.uniform(-hi, hi);
        if (norm(p) < lo) continue;
        if (rs.roots.empty() || rs.wall_distance(p) > margin) return p;
    }
    throw std::runtime_error("random_chamber_point: chamber sampling failed");
}

/// Off-center polynomial-times-Gaussian with components in every isotypic
/// piece of every weight.
inline std::function<double(const Vec&)> generic_gaussian(int d, std::uint64_t seed) {
    Rng rng(seed);
    Vec lin(static_cast<std::size_t>(d)), center(static_cast<std::size_t>(d));
    for (auto& c : lin) c = rng.uniform(-1.0, 1.0);
    for (auto& c : center) c = rng.uniform(0.8, 1.5) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    double c0 = rng.uniform(0.25, 1.0);
    return [lin, center, c0](const Vec& x) {
        return (c0 + dot(lin, x)) * std::exp(-0.5 * norm_sq(x - center));
    };
}

}  // namespace detail

/// Exact group and character counts (orthogonal 2^d / 2^d, dihedral 2n with
/// 2 or 4 homomorphisms).
inline Report suite_census() {
    Report rep;
    rep.suite = "census";
    for (int d : {1, 2, 3}) {
        std::vector<int> J;
        for (int j = 1; j <= d; ++j) J.push_back(j);
        ReflectionGroup w = generate_group(orthogonal_roots(d, J));
        int chars = static_cast<int>(enumerate_characters(w).size());
        rep.add("group-order", json{{"family", "orthogonal"}, {"d", d}}, w.size(), 1 << d,
                w.size() == (1 << d));
        rep.add("character-count", json{{"family", "orthogonal"}, {"d", d}}, chars, 1 << d,
                chars == (1 << d));
    }
    for (int n : {3, 4, 5, 6, 7, 8}) {
        ReflectionGroup w = generate_group(dihedral_roots(n));
        int chars = static_cast<int>(enumerate_characters(w).size());
        int expect = (n % 2 == 0) ? 4 : 2;
        rep.add("group-order", json{{"family", "dihedral"}, {"n", n}}, w.size(), 2 * n,
                w.size() == 2 * n);
        rep.add("character-count", json{{"family", "dihedral"}, {"n", n}}, chars, expect,
                chars == expect);
        int rotations = 0;
        for (int g = 0; g < w.size(); ++g)
            if (w.element(g).det > 0) ++rotations;
        rep.add("rotation-count", json{{"family", "dihedral"}, {"n", n}}, rotations, n, rotations == n);
    }
    return rep;
}

/// Orthogonal systems: the product formula
/// equals the group sum for every character, at cancellation-aware scale.
inline Report suite_product_equivalence(std::uint64_t seed = 0xC0FFEEULL, int trials = 100) {
    Report rep;
    rep.suite = "product-equivalence";
    Rng rng(seed);
    for (int d : {1, 2, 3}) {
        std::vector<int> J;
        for (int j = 1; j <= d; ++j) J.push_back(j);
        ReflectionGroup w = generate_group(orthogonal_roots(d, J));
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            std::vector<int> bits;
            for (int k = 0; k < d; ++k) bits.push_back(chi(w.simple_reflection(k)) == 1 ? 0 : 1);
            double worst = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                double t = rng.uniform(0.05, 2.0);
                Vec x = detail::random_chamber_point(w.root_system(), rng, 0.1);
                Vec y = detail::random_chamber_point(w.root_system(), rng, 0.1);
                SymmetrizedKernel k = heat_kernel(w, chi, t);
                double a = k(x, y);
                double b = orthant_heat_product(bits, t, x, y);
                double scale = std::max({k.trivial_scale(x, y), std::abs(a), std::abs(b)});
                worst = std::max(worst, std::abs(a - b) / scale);
            }
            rep.add_le("product-vs-sum", json{{"d", d}, {"character", chi.name}, {"trials", trials}},
                       worst, 1e-12);
        }
    }
    return rep;
}

/// The four explicit dihedral kernels against the generic group sums.
inline Report suite_dihedral_equivalence(std::uint64_t seed = 0xC0FFEEULL, int trials = 100) {
    Report rep;
    rep.suite = "dihedral-equivalence";
    Rng rng(seed);
    for (int n : {3, 4, 5, 6}) {
        ReflectionGroup w = generate_group(dihedral_roots(n));
        auto cs = enumerate_characters(w);
        std::vector<std::pair<DihedralKind, std::string>> kinds = {
            {DihedralKind::neumann, "trivial"}, {DihedralKind::dirichlet, "sgn"}};
        if (n % 2 == 0) {
            kinds.emplace_back(DihedralKind::eta1, "eta1");
            kinds.emplace_back(DihedralKind::eta2, "eta2");
        }
        for (auto& [kind, name] : kinds) {
            const TwoCharacter* chi = resolve_character(w, cs, name);
            if (!chi) throw std::runtime_error("missing dihedral character " + name);
            double worst = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                double t = rng.uniform(0.05, 1.0);
                Vec x = detail::random_chamber_point(w.root_system(), rng, 0.02);
                Vec y = detail::random_chamber_point(w.root_system(), rng, 0.02);
                SymmetrizedKernel k = heat_kernel(w, *chi, t);
                double a = k(x, y);
                double b = dihedral_heat(kind, n, t, x, y);
                double scale = std::max({k.trivial_scale(x, y), std::abs(a), std::abs(b)});
                worst = std::max(worst, std::abs(a - b) / scale);
            }
            rep.add_le("closed-form-vs-sum",
                       json{{"n", n}, {"kind", dihedral_kind_name(kind)}, {"trials", trials}}, worst,
                       1e-12);
        }
    }
    return rep;
}

/// Carslaw-Jaeger Bessel series against the image sums, both wedge kinds.
inline Report suite_cj_cross(const std::vector<int>& ns = {3, 4, 6}, std::uint64_t seed = 0xC0FFEEULL,
                             int trials = 50) {
    Report rep;
    rep.suite = "cj-cross";
    Rng rng(seed);
    for (int n : ns) {
        ReflectionGroup w = generate_group(dihedral_roots(n));
        TwoCharacter triv = trivial_character(w);
        for (WedgeKind kind : {WedgeKind::neumann, WedgeKind::dirichlet}) {
            double worst = 0.0;
            bool all_converged = true;
            for (int trial = 0; trial < trials; ++trial) {
                double t, rho, rr, th, xi;
                do {
                    t = rng.uniform(0.05, 0.35);
                    rho = rng.uniform(0.2, 1.4);
                    rr = rng.uniform(0.2, 1.4);
                } while (rho * rr / (2.0 * t) > 30.0);
                double lo = w.root_system().theta_lo, hi = w.root_system().theta_hi;
                th = lo + rng.uniform(0.02, 0.98) * (hi - lo);
                xi = lo + rng.uniform(0.02, 0.98) * (hi - lo);
                Vec x{rho * std::cos(th), rho * std::sin(th)};
                Vec y{rr * std::cos(xi), rr * std::sin(xi)};
                SeriesResult series = carslaw_jaeger(kind, n, t, x, y);
                all_converged = all_converged && series.converged;
                double ref = dihedral_heat(
                    kind == WedgeKind::neumann ? DihedralKind::neumann : DihedralKind::dirichlet, n, t,
                    x, y);
                double scale = heat_kernel(w, triv, t).trivial_scale(x, y);
                worst = std::max(worst, std::abs(series.value - ref) / scale);
            }
            rep.add_le("cj-vs-images",
                       json{{"n", n}, {"kind", kind == WedgeKind::neumann ? "N" : "D"}, {"trials", trials}},
                       worst, 1e-8);
            rep.add("cj-converged",
                    json{{"n", n}, {"kind", kind == WedgeKind::neumann ? "N" : "D"}}, all_converged ? 1.0 : 0.0,
                    1.0, all_converged);
        }
    }
    return rep;
}

/// Modified-Bessel oracle health: frozen references and the three-term
/// recurrence.
inline Report suite_bessel() {
    Report rep;
    rep.suite = "bessel";
    struct Ref {
        double nu, z, value;
    };
    const Ref refs[] = {
        {3, 2.5, 0.474370408778035589554824},
        {0, 0.1, 1.002501562934095601678113},
        {1, 1.0, 0.565159103992485027207696},
        {10, 5.0, 0.00458004441917605126118647},
        {40, 30.0, 24.05569763953388129884433},
        {0.5, 2.0, 2.046236863089055036605184},
        {200, 50.0, 1.074840306169981715231046e-94},
    };
    double worst = 0.0;
    for (const Ref& r : refs)
        worst = std::max(worst, std::abs(bessel_I(r.nu, r.z) - r.value) / std::abs(r.value));
    rep.add_le("frozen-values", json{{"count", 7}}, worst, 1e-12);

    double worst_rec = 0.0;
    for (double nu = 1.0; nu <= 50.0; nu += 3.5)
        for (double z : {0.1, 0.5, 2.0, 7.0, 15.0, 30.0}) {
            double lhs = bessel_I(nu - 1, z) - bessel_I(nu + 1, z);
            double rhs = 2.0 * nu / z * bessel_I(nu, z);
            worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::abs(rhs));
        }
    rep.add_le("recurrence", json{{"nu", "1..50"}, {"z", "0.1..30"}}, worst_rec, 1e-11);
    return rep;
}

/// Extension/averaging pairing across every system and character weight.
inline Report suite_pairing(std::uint64_t seed = 0xC0FFEEULL) {
    Report rep;
    rep.suite = "pairing";
    auto systems = detail::standard_systems(true);
    systems.push_back({"half-line d=1", generate_group(orthogonal_roots(1, {1}))});
    for (const auto& sys : systems) {
        const ReflectionGroup& w = sys.group;
        for (int item = 0; item < 2; ++item) {
            auto phi = detail::generic_gaussian(w.dimension(), seed + 11 * item + 1);
            auto big = detail::generic_gaussian(w.dimension(), seed + 11 * item + 5);
            for (const TwoCharacter& chi : enumerate_characters(w)) {
                PairingResult r =
                    check_extension_pairing(w, weight_from_character(chi), phi, big, 9.0);
                rep.add_le("pairing-H1",
                           json{{"system", sys.label}, {"character", chi.name}, {"corpus", item}},
                           r.residual, 1e-7);
            }
        }
    }
    return rep;
}

/// Derivative/averaging intertwining identities on the analytic corpus.
inline Report suite_intertwining(std::uint64_t seed = 0xC0FFEEULL) {
    Report rep;
    rep.suite = "intertwining";
    auto systems = detail::standard_systems(true);
    systems.push_back({"half-line d=1", generate_group(orthogonal_roots(1, {1}))});
    for (const auto& sys : systems) {
        const ReflectionGroup& w = sys.group;
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            Weight om = weight_from_character(chi);
            double worst_h2 = 0.0, worst_h3 = 0.0;
            Rng rng(seed + 7);
            for (const AnalyticField& f : analytic_corpus(w.dimension())) {
                for (int i = 0; i < 50; ++i) {
                    IntertwiningResidual r =
                        check_derivative_intertwining(w, om, f, rng.normal_vec(w.dimension()));
                    worst_h2 = std::max(worst_h2, r.h2);
                    worst_h3 = std::max(worst_h3, r.h3);
                }
            }
            rep.add_le("intertwining-H2", json{{"system", sys.label}, {"character", chi.name}},
                       worst_h2, 1e-11);
            rep.add_le("intertwining-H3", json{{"system", sys.label}, {"character", chi.name}},
                       worst_h3, 1e-11);
        }
    }
    return rep;
}

/// Kernel-level boundary conditions on every facet of every system/character.
inline Report suite_boundary(std::uint64_t seed = 0xC0FFEEULL) {
    Report rep;
    rep.suite = "boundary";
    for (const auto& sys : detail::standard_systems()) {
        const ReflectionGroup& w = sys.group;
        const RootSystem& rs = w.root_system();
        std::vector<std::vector<Vec>> samples;
        for (std::size_t k = 0; k < rs.simple.size(); ++k)
            samples.push_back(facet_samples(w, static_cast<int>(k), 3, 0.15, seed));
        Rng rng(seed + 3);
        Vec y = detail::random_chamber_point(rs, rng, 0.1);
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            double worst_d = 0.0, worst_n = 0.0;
            for (const FacetSampleReport& r : boundary_check(w, chi, 0.6, y, samples, 1e-4)) {
                if (r.neumann_flagged)
                    worst_n = std::max(worst_n, r.normalized_stat);
                else
                    worst_d = std::max(worst_d, r.normalized_stat);
            }
            rep.add_le("dirichlet-facets", json{{"system", sys.label}, {"character", chi.name}},
                       worst_d, 1e-12);
            rep.add_le("neumann-facets", json{{"system", sys.label}, {"character", chi.name}},
                       worst_n, 1e-6);
        }
    }
    return rep;
}

/// Finite-difference heat-equation residual at random interior
/// configurations. Configurations where both difference quotients nearly
/// vanish are re-drawn: the quotient of two near-zero estimates cannot
/// certify anything at this tolerance.
inline Report suite_residual(std::uint64_t seed = 0xC0FFEEULL, int trials = 50) {
    Report rep;
    rep.suite = "residual";
    for (const auto& sys : detail::standard_systems()) {
        const ReflectionGroup& w = sys.group;
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            Rng rng(seed + 17);
            double worst = 0.0;
            for (int trial = 0; trial < trials; ++trial) {
                for (int attempt = 0; attempt < 200; ++attempt) {
                    double t = rng.uniform(0.3, 1.2);
                    Vec x = detail::random_chamber_point(w.root_system(), rng, 0.15);
                    Vec y = detail::random_chamber_point(w.root_system(), rng, 0.15);
                    HeatResidual r = heat_residual(w, chi, t, x, y, 1e-5 * std::max(1.0, t),
                                                   1e-3 * std::sqrt(t));
                    double scale =
                        heat_kernel(w, trivial_character(w), t).trivial_scale(x, y) / t;
                    if (std::abs(r.time_term) + std::abs(r.laplacian) < 0.02 * scale) continue;
                    worst = std::max(worst, r.residual);
                    break;
                }
            }
            rep.add_le("heat-residual", json{{"system", sys.label}, {"character", chi.name}, {"trials", trials}},
                       worst, 1e-5);
        }
    }
    return rep;
}

/// Mass properties: conservation for the trivial character, strict (0,1)
/// range and monotone growth toward 1 as t drops otherwise, and the half-line
/// erf closed form.
inline Report suite_mass(std::uint64_t seed = 0xC0FFEEULL) {
    Report rep;
    rep.suite = "mass";
    auto systems = detail::standard_systems();
    systems.push_back({"half-line d=1", generate_group(orthogonal_roots(1, {1}))});
    for (const auto& sys : systems) {
        const ReflectionGroup& w = sys.group;
        Rng rng(seed + 29);
        Vec x = detail::random_chamber_point(w.root_system(), rng, 0.3, 0.3, 1.8);
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            if (chi.is_trivial()) {
                double worst = 0.0;
                for (double t : {0.25, 1.0}) worst = std::max(worst, std::abs(mass(w, chi, t, x) - 1.0));
                rep.add_le("mass-conservation", json{{"system", sys.label}}, worst, 1e-8);
                continue;
            }
            for (double t : {0.5, 1.0}) {
                double m = mass(w, chi, t, x);
                rep.add("mass-range", json{{"system", sys.label}, {"character", chi.name}, {"t", t}}, m,
                        1.0 - 1e-10, m > 0.0 && m < 1.0 - 1e-10);
            }
            double m1 = mass(w, chi, 1.0, x);
            double m01 = mass(w, chi, 0.1, x);
            double m001 = mass(w, chi, 0.01, x);
            bool mono = m1 < m01 && m01 < m001 && m001 <= 1.0 + 1e-8;
            rep.add("mass-monotone", json{{"system", sys.label}, {"character", chi.name}},
                    std::min(m01 - m1, m001 - m01), 0.0, mono);
        }
    }
    // half-line sgn mass equals erf(x / sqrt(4t))
    ReflectionGroup h = generate_group(orthogonal_roots(1, {1}));
    auto hc = enumerate_characters(h);
    const TwoCharacter* sgn = resolve_character(h, hc, "sgn");
    double worst = 0.0;
    for (auto [x1, t] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.0, 0.25}, {0.5, 1.0}})
        worst = std::max(worst, std::abs(mass(h, *sgn, t, Vec{x1}) - std::erf(x1 / std::sqrt(4.0 * t))));
    rep.add_le("halfline-erf", json{{"points", 3}}, worst, 1e-8);
    return rep;
}

/// Small-time localization: mass outside B(x, dist/2) at t = 1e-3.
inline Report suite_localization(std::uint64_t seed = 0xC0FFEEULL, int points = 10) {
    Report rep;
    rep.suite = "localization";
    for (const auto& sys : detail::standard_systems()) {
        const ReflectionGroup& w = sys.group;
        Rng rng(seed + 41);
        double worst = 0.0;
        for (int p = 0; p < points; ++p) {
            Vec x = detail::random_chamber_point(w.root_system(), rng, 0.6, 0.3, 3.5);
            double delta = w.root_system().wall_distance(x) / 2.0;
            for (const TwoCharacter& chi : enumerate_characters(w))
                worst = std::max(worst, std::abs(outside_ball_mass(w, chi, 1e-3, x, delta)));
        }
        rep.add_le("outside-ball-mass", json{{"system", sys.label}, {"points", points}}, worst, 1e-6);
    }
    return rep;
}

/// Chapman-Kolmogorov semigroup identity by quadrature.
inline Report suite_ck(std::uint64_t seed = 0xC0FFEEULL) {
    Report rep;
    rep.suite = "ck";
    std::vector<detail::NamedSystem> systems;
    systems.push_back({"half-line d=1", generate_group(orthogonal_roots(1, {1}))});
    systems.push_back({"orthant d=2", generate_group(orthogonal_roots(2, {1, 2}))});
    systems.push_back({"dihedral n=3", generate_group(dihedral_roots(3))});
    systems.push_back({"dihedral n=4", generate_group(dihedral_roots(4))});
    for (const auto& sys : systems) {
        const ReflectionGroup& w = sys.group;
        Rng rng(seed + 53);
        Vec x = detail::random_chamber_point(w.root_system(), rng, 0.15, 0.2, 1.6);
        Vec y = detail::random_chamber_point(w.root_system(), rng, 0.15, 0.2, 1.6);
        for (const TwoCharacter& chi : enumerate_characters(w)) {
            double r = chapman_kolmogorov(w, chi, 0.5, 0.5, x, y);
            rep.add_le("chapman-kolmogorov", json{{"system", sys.label}, {"character", chi.name}}, r,
                       1e-7);
        }
    }
    return rep;
}

/// Monte-Carlo Neumann oracle: folded Brownian endpoints against the
/// trivial-character kernel, bin by bin.
inline Report suite_mc_neumann(const SuiteOptions& opts = {}) {
    Report rep;
    rep.suite = "mc-neumann";
    struct Setup {
        std::string label;
        ReflectionGroup group;
        Vec x;
        double t;
        BinSpec bins;
    };
    const double pi = std::numbers::pi;
    std::vector<Setup> setups;
    setups.push_back({"orthant d=2", generate_group(orthogonal_roots(2, {1, 2})), Vec{1.0, 1.0}, 0.5,
                      BinSpec::uniform_tensor(Vec{0.0, 0.0}, Vec{4.0, 4.0}, 20)});
    setups.push_back({"dihedral n=3", generate_group(dihedral_roots(3)), Vec{1.0, 0.0}, 0.3,
                      BinSpec::uniform_polar(3.0, 14, -pi / 6, pi / 6, 10)});
    for (auto& s : setups) {
        McEstimate est = mc_folded_density(s.group, s.x, s.t, opts.mc_samples, s.bins, opts.seed,
                                           opts.threads);
        SymmetrizedKernel k = heat_kernel(s.group, trivial_character(s.group), s.t);
        long long occupied = 0, agree = 0;
        for (int b = 0; b < s.bins.count(); ++b) {
            if (est.counts[static_cast<std::size_t>(b)] == 0) continue;
            ++occupied;
            double expect = s.bins.average(b, [&](const Vec& y) { return k(s.x, y); });
            if (std::abs(est.density(b) - expect) <= 4.0 * est.density_stderr(b)) ++agree;
        }
        double disagree_frac = occupied ? 1.0 - static_cast<double>(agree) / occupied : 1.0;
        rep.add_le("mc-bin-agreement",
                   json{{"system", s.label}, {"samples", opts.mc_samples}, {"seed", opts.seed},
                        {"threads", opts.threads}, {"occupied_bins", occupied}},
                   disagree_frac, 0.05);
        rep.add("mc-mass-bounded", json{{"system", s.label}, {"seed", opts.seed}}, est.binned_mass(),
                1.0, est.binned_mass() <= 1.0);
    }
    return rep;
}

/// Monte-Carlo Dirichlet oracle: killed-path survival against the quadrature
/// mass of the sgn kernel (with the discrete-killing bias allowance).
inline Report suite_mc_dirichlet(const SuiteOptions& opts = {}) {
    Report rep;
    rep.suite = "mc-dirichlet";
    {
        ReflectionGroup h = generate_group(orthogonal_roots(1, {1}));
        auto cs = enumerate_characters(h);
        const TwoCharacter* sgn = resolve_character(h, cs, "sgn");
        double quad = mass(h, *sgn, 1.0, Vec{1.0});
        KilledMassEstimate est = mc_killed_mass(h, Vec{1.0}, 1.0, opts.mc_dirichlet_samples,
                                                opts.mc_steps, opts.seed, opts.threads);
        rep.add("mc-survival",
                json{{"system", "half-line d=1"}, {"x", 1.0}, {"t", 1.0}, {"quadrature", quad},
                     {"samples", opts.mc_dirichlet_samples}, {"steps", opts.mc_steps}, {"seed", opts.seed}},
                std::abs(est.survival - quad), 3.0 * est.std_error + 0.01,
                std::abs(est.survival - quad) <= 3.0 * est.std_error + 0.01);
    }
    {
        ReflectionGroup o2 = generate_group(orthogonal_roots(2, {1, 2}));
        auto cs = enumerate_characters(o2);
        const TwoCharacter* sgn = resolve_character(o2, cs, "sgn");
        Vec x{0.9, 1.4};
        double quad = mass(o2, *sgn, 0.5, x);
        KilledMassEstimate est =
            mc_killed_mass(o2, x, 0.5, opts.mc_dirichlet_samples, opts.mc_steps, opts.seed, opts.threads);
        rep.add("mc-survival",
                json{{"system", "orthant d=2"}, {"x", x}, {"t", 0.5}, {"quadrature", quad},
                     {"samples", opts.mc_dirichlet_samples}, {"steps", opts.mc_steps}, {"seed", opts.seed}},
                std::abs(est.survival - quad), 3.0 * est.std_error + 0.01,
                std::abs(est.survival - quad) <= 3.0 * est.std_error + 0.01);
    }
    return rep;
}

/// Dispatch by suite name; the names the CLI accepts.
inline Report run_suite(const std::string& name, const SuiteOptions& opts = {}) {
    if (name == "census") return suite_census();
    if (name == "product-equivalence") return suite_product_equivalence(opts.seed);
    if (name == "dihedral-equivalence") return suite_dihedral_equivalence(opts.seed);
    if (name == "cj-cross") return suite_cj_cross({3, 4, 6}, opts.seed);
    if (name == "bessel") return suite_bessel();
    if (name == "pairing") return suite_pairing(opts.seed);
    if (name == "intertwining") return suite_intertwining(opts.seed);
    if (name == "boundary") return suite_boundary(opts.seed);
    if (name == "residual") return suite_residual(opts.seed);
    if (name == "mass") return suite_mass(opts.seed);
    if (name == "localization") return suite_localization(opts.seed);
    if (name == "ck") return suite_ck(opts.seed);
    if (name == "mc-neumann") return suite_mc_neumann(opts);
    if (name == "mc-dirichlet") return suite_mc_dirichlet(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "census",  "product-equivalence", "dihedral-equivalence", "cj-cross",
        "bessel",  "pairing",             "intertwining",         "mc-neumann",
        "mc-dirichlet"};
    return names;
}

inline const std::vector<std::string>& checks_suite_names() {
    static const std::vector<std::string> names = {"boundary", "residual", "mass", "localization",
                                                   "ck"};
    return names;
}

}  // namespace weylheat::suites
