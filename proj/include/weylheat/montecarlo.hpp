#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "weylheat/kernels.hpp"
#include "weylheat/quadrature.hpp"
#include "weylheat/reflection_group.hpp"
#include "weylheat/rng.hpp"

namespace weylheat {

/// Histogram geometry inside the positive chamber: tensor bins (per-axis
/// edges) or polar bins (radius x angle edges).
struct BinSpec {
    enum class Geometry { tensor, polar };

    Geometry geometry = Geometry::tensor;
    std::vector<std::vector<double>> edges;  // tensor: one edge list per axis; polar: {r edges, theta edges}

    static BinSpec tensor(std::vector<std::vector<double>> per_axis_edges) {
        return BinSpec{Geometry::tensor, std::move(per_axis_edges)};
    }
    static BinSpec polar(std::vector<double> r_edges, std::vector<double> theta_edges) {
        return BinSpec{Geometry::polar, {std::move(r_edges), std::move(theta_edges)}};
    }

    static BinSpec uniform_tensor(const Vec& lo, const Vec& hi, int bins_per_axis) {
        std::vector<std::vector<double>> e;
        for (std::size_t j = 0; j < lo.size(); ++j) {
            std::vector<double> ax;
            for (int i = 0; i <= bins_per_axis; ++i)
                ax.push_back(lo[j] + (hi[j] - lo[j]) * i / bins_per_axis);
            e.push_back(std::move(ax));
        }
        return tensor(std::move(e));
    }

    static BinSpec uniform_polar(double r_max, int nr, double th_lo, double th_hi, int nth) {
        std::vector<double> re, te;
        for (int i = 0; i <= nr; ++i) re.push_back(r_max * i / nr);
        for (int i = 0; i <= nth; ++i) te.push_back(th_lo + (th_hi - th_lo) * i / nth);
        return polar(std::move(re), std::move(te));
    }

    int count() const {
        int n = 1;
        for (const auto& ax : edges) n *= static_cast<int>(ax.size()) - 1;
        return n;
    }

    /// Flat bin index of a point, or -1 if outside the binned region.
    int locate(const Vec& x) const {
        std::vector<double> coords;
        if (geometry == Geometry::tensor) {
            coords.assign(x.begin(), x.end());
        } else {
            coords = {norm(x), std::atan2(x[1], x[0])};
        }
        int idx = 0;
        for (std::size_t a = 0; a < edges.size(); ++a) {
            const auto& ax = edges[a];
            double v = coords[a];
            if (v < ax.front() || v >= ax.back()) return -1;
            int lo = 0, hi = static_cast<int>(ax.size()) - 1;
            while (hi - lo > 1) {
                int mid = (lo + hi) / 2;
                (v >= ax[static_cast<std::size_t>(mid)] ? lo : hi) = mid;
            }
            idx = idx * (static_cast<int>(ax.size()) - 1) + lo;
        }
        return idx;
    }

    std::vector<std::pair<double, double>> bin_intervals(int flat) const {
        std::vector<std::pair<double, double>> out(edges.size());
        for (int a = static_cast<int>(edges.size()) - 1; a >= 0; --a) {
            int n = static_cast<int>(edges[static_cast<std::size_t>(a)].size()) - 1;
            int i = flat % n;
            flat /= n;
            out[static_cast<std::size_t>(a)] = {edges[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                                                edges[static_cast<std::size_t>(a)][static_cast<std::size_t>(i) + 1]};
        }
        return out;
    }

    double volume(int flat) const {
        auto iv = bin_intervals(flat);
        if (geometry == Geometry::tensor) {
            double v = 1.0;
            for (auto& [a, b] : iv) v *= b - a;
            return v;
        }
        auto [r0, r1] = iv[0];
        auto [t0, t1] = iv[1];
        return 0.5 * (r1 * r1 - r0 * r0) * (t1 - t0);
    }

    /// Mean of a function over a bin by a small tensor Gauss rule.
    template <class F>
    double average(int flat, F&& f, int pts = 4) const {
        auto iv = bin_intervals(flat);
        const Rule1D& base = gauss_legendre(pts);
        Rule1D a0 = base.mapped(iv[0].first, iv[0].second);
        Rule1D a1 = iv.size() > 1 ? base.mapped(iv[1].first, iv[1].second) : Rule1D{{0.0}, {1.0}};
        double acc = 0.0, wsum = 0.0;
        for (std::size_t i = 0; i < a0.nodes.size(); ++i)
            for (std::size_t j = 0; j < a1.nodes.size(); ++j) {
                double w = a0.weights[i] * a1.weights[j];
                Vec x;
                if (geometry == Geometry::tensor) {
                    x = (iv.size() > 1) ? Vec{a0.nodes[i], a1.nodes[j]} : Vec{a0.nodes[i]};
                } else {
                    w *= a0.nodes[i];  // polar Jacobian
                    x = Vec{a0.nodes[i] * std::cos(a1.nodes[j]), a0.nodes[i] * std::sin(a1.nodes[j])};
                }
                acc += w * f(x);
                wsum += w;
            }
        return acc / wsum;
    }
};

/// Histogram of folded Brownian endpoints with the usual binomial standard
/// errors; everything needed to reproduce the run is stored alongside.
struct McEstimate {
    BinSpec bins;
    std::vector<long long> counts;
    long long samples = 0;
    long long outside = 0;        // folded fine but beyond the binned region
    long long on_wall = 0;        // discarded (probability-zero mirror hits)
    std::uint64_t seed = 0;
    int threads = 1;

    double density(int bin) const {
        return static_cast<double>(counts[static_cast<std::size_t>(bin)]) /
               (static_cast<double>(samples) * bins.volume(bin));
    }
    double density_stderr(int bin) const {
        double p = static_cast<double>(counts[static_cast<std::size_t>(bin)]) / static_cast<double>(samples);
        return std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) / bins.volume(bin);
    }
    double binned_mass() const {
        long long c = 0;
        for (long long v : counts) c += v;
        return static_cast<double>(c) / static_cast<double>(samples);
    }
};

/// Endpoints z = x + sqrt(2t) xi of the Delta-generated diffusion (the kernel
/// is exp(t Delta), so the per-coordinate variance is 2t), folded into the
/// chamber and binned. The expected bin density is the bin average of the
/// trivial-character kernel K(x, .).
inline McEstimate mc_folded_density(const ReflectionGroup& w, const Vec& x, double t, long long n,
                                    const BinSpec& bins, std::uint64_t seed, int threads = 1) {
    if (t <= 0.0 || n <= 0) throw std::invalid_argument("mc_folded_density: need t > 0 and n > 0");
    if (!w.root_system().roots.empty() && !w.root_system().chamber_contains(x))
        throw std::invalid_argument("mc_folded_density: start point must lie in the chamber");
    const int d = w.dimension();
    const double sigma = std::sqrt(2.0 * t);

    McEstimate est;
    est.bins = bins;
    est.counts.assign(static_cast<std::size_t>(bins.count()), 0);
    est.samples = n;
    est.seed = seed;
    est.threads = threads;

    auto run_stream = [&](std::uint64_t stream, long long count, std::vector<long long>& counts,
                          long long& outside, long long& on_wall) {
        Rng rng(stream_seed(seed, stream));
        Vec z(static_cast<std::size_t>(d));
        for (long long i = 0; i < count; ++i) {
            for (int j = 0; j < d; ++j) z[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + sigma * rng.normal();
            auto fold = w.fold_to_chamber(z);
            if (!fold) {
                ++on_wall;
                continue;
            }
            int bin = bins.locate(fold->point);
            if (bin < 0)
                ++outside;
            else
                ++counts[static_cast<std::size_t>(bin)];
        }
    };

    if (threads <= 1) {
        run_stream(0, n, est.counts, est.outside, est.on_wall);
        return est;
    }
    std::vector<std::vector<long long>> counts(static_cast<std::size_t>(threads),
                                               std::vector<long long>(est.counts.size(), 0));
    std::vector<long long> outside(static_cast<std::size_t>(threads), 0), on_wall(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    long long base = n / threads, extra = n % threads;
    for (int s = 0; s < threads; ++s) {
        long long cnt = base + (s < extra ? 1 : 0);
        pool.emplace_back([&, s, cnt] {
            run_stream(static_cast<std::uint64_t>(s), cnt, counts[static_cast<std::size_t>(s)],
                       outside[static_cast<std::size_t>(s)], on_wall[static_cast<std::size_t>(s)]);
        });
    }
    for (auto& th : pool) th.join();
    for (int s = 0; s < threads; ++s) {  // deterministic merge order
        for (std::size_t b = 0; b < est.counts.size(); ++b) est.counts[b] += counts[static_cast<std::size_t>(s)][b];
        est.outside += outside[static_cast<std::size_t>(s)];
        est.on_wall += on_wall[static_cast<std::size_t>(s)];
    }
    return est;
}

struct KilledMassEstimate {
    double survival = 0.0;
    double std_error = 0.0;
    long long samples = 0;
    int steps = 0;
    std::uint64_t seed = 0;
};

/// Euler-Maruyama survival fraction of the diffusion killed at the chamber
/// boundary (step variance 2 dt per coordinate). Discrete killing misses
/// crossings inside a step, so the estimate carries a positive bias of order
/// sqrt(t/steps); comparisons must budget for it.
inline KilledMassEstimate mc_killed_mass(const ReflectionGroup& w, const Vec& x, double t, long long n,
                                         int steps, std::uint64_t seed, int threads = 1) {
    if (t <= 0.0 || n <= 0) throw std::invalid_argument("mc_killed_mass: need t > 0 and n > 0");
    if (steps < 100) throw std::invalid_argument("mc_killed_mass: need steps >= 100");
    if (!w.root_system().roots.empty() && !w.root_system().chamber_contains(x))
        throw std::invalid_argument("mc_killed_mass: start point must lie in the chamber");
    const int d = w.dimension();
    const double step_sigma = std::sqrt(2.0 * t / steps);
    const RootSystem& rs = w.root_system();

    auto run_stream = [&](std::uint64_t stream, long long count) -> long long {
        Rng rng(stream_seed(seed, stream));
        long long alive = 0;
        Vec z(static_cast<std::size_t>(d));
        for (long long i = 0; i < count; ++i) {
            z = x;
            bool ok = true;
            for (int s = 0; s < steps; ++s) {
                for (int j = 0; j < d; ++j) z[static_cast<std::size_t>(j)] += step_sigma * rng.normal();
                if (!rs.chamber_contains(z, 0.0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++alive;
        }
        return alive;
    };

    long long alive = 0;
    if (threads <= 1) {
        alive = run_stream(0, n);
    } else {
        std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
        std::vector<std::thread> pool;
        long long base = n / threads, extra = n % threads;
        for (int s = 0; s < threads; ++s) {
            long long cnt = base + (s < extra ? 1 : 0);
            pool.emplace_back([&, s, cnt] { partial[static_cast<std::size_t>(s)] = run_stream(static_cast<std::uint64_t>(s), cnt); });
        }
        for (auto& th : pool) th.join();
        for (long long p : partial) alive += p;
    }

    KilledMassEstimate est;
    est.samples = n;
    est.steps = steps;
    est.seed = seed;
    est.survival = static_cast<double>(alive) / static_cast<double>(n);
    est.std_error = std::sqrt(est.survival * (1.0 - est.survival) / static_cast<double>(n));
    return est;
}

}  // namespace weylheat
