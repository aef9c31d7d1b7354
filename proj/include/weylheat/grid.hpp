#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "weylheat/quadrature.hpp"
#include "weylheat/root_system.hpp"

namespace weylheat {

/// Shortest-width decimal that round-trips a double exactly under %.17g.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// A sampled field on chamber nodes: tensor or polar geometry, one value per
/// node, free-form metadata lines carried through CSV round trips verbatim.
struct GridField {
    std::vector<Vec> nodes;
    std::vector<double> values;
    std::vector<std::string> metadata;  // emitted as leading "# ..." lines

    /// Uniform tensor grid clipped to the open chamber.
    static GridField tensor(const RootSystem& rs, const Vec& lo, const Vec& hi, int per_axis) {
        GridField g;
        const int d = rs.dimension;
        std::vector<int> idx(static_cast<std::size_t>(d), 0);
        while (true) {
            Vec x(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                double f = per_axis > 1 ? static_cast<double>(idx[static_cast<std::size_t>(j)]) / (per_axis - 1) : 0.5;
                x[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)] +
                                                 f * (hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)]);
            }
            if (rs.chamber_contains(x)) g.nodes.push_back(std::move(x));
            int j = d - 1;
            for (; j >= 0; --j) {
                if (++idx[static_cast<std::size_t>(j)] < per_axis) break;
                idx[static_cast<std::size_t>(j)] = 0;
            }
            if (j < 0) break;
        }
        g.values.assign(g.nodes.size(), 0.0);
        return g;
    }

    /// Polar grid (radii x angles) clipped to a planar-sector chamber.
    static GridField polar(const RootSystem& rs, double r_lo, double r_hi, int nr, int ntheta) {
        if (rs.shape != ChamberShape::planar_sector)
            throw std::invalid_argument("GridField::polar: chamber is not a planar sector");
        GridField g;
        for (int i = 0; i < nr; ++i) {
            double rho = r_lo + (r_hi - r_lo) * (i + 0.5) / nr;
            for (int j = 0; j < ntheta; ++j) {
                double th = rs.theta_lo + (rs.theta_hi - rs.theta_lo) * (j + 0.5) / ntheta;
                Vec x{rho * std::cos(th), rho * std::sin(th)};
                if (rs.chamber_contains(x)) g.nodes.push_back(std::move(x));
            }
        }
        g.values.assign(g.nodes.size(), 0.0);
        return g;
    }

    template <class F>
    void fill(F&& f, int threads = 1) {
        if (threads <= 1) {
            for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = f(nodes[i]);
            return;
        }
        std::vector<std::thread> pool;
        std::size_t chunk = (nodes.size() + threads - 1) / static_cast<std::size_t>(threads);
        for (int s = 0; s < threads; ++s) {
            std::size_t lo = static_cast<std::size_t>(s) * chunk;
            std::size_t hi = std::min(nodes.size(), lo + chunk);
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i) values[i] = f(nodes[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    void write_csv(std::ostream& os) const {
        for (const std::string& m : metadata) os << "# " << m << "\n";
        int d = nodes.empty() ? 0 : static_cast<int>(nodes.front().size());
        for (int j = 0; j < d; ++j) os << "x" << (j + 1) << ",";
        os << "value\n";
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (double c : nodes[i]) os << format_double(c) << ",";
            os << format_double(values[i]) << "\n";
        }
    }

    static GridField read_csv(std::istream& is) {
        GridField g;
        std::string line;
        bool header_seen = false;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line.rfind("# ", 0) == 0) {
                g.metadata.push_back(line.substr(2));
                continue;
            }
            if (!header_seen) {
                header_seen = true;  // column names are regenerated on write
                continue;
            }
            std::vector<double> row;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
            if (row.size() < 2) throw std::invalid_argument("GridField::read_csv: malformed row");
            g.values.push_back(row.back());
            row.pop_back();
            g.nodes.push_back(Vec(row.begin(), row.end()));
        }
        return g;
    }
};

}  // namespace weylheat
