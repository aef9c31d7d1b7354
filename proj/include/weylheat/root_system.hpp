#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weylheat/errors.hpp"
#include "weylheat/linalg.hpp"
#include "weylheat/rng.hpp"

namespace weylheat {

/// Orthogonal reflection in the hyperplane normal to the unit vector alpha:
/// x - 2 <alpha, x> alpha.
inline Vec reflect(const Vec& alpha, const Vec& x) {
    if (std::abs(norm(alpha) - 1.0) > 1e-12)
        throw std::invalid_argument("reflect: alpha must be a unit vector");
    double c = 2.0 * dot(alpha, x);
    Vec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c * alpha[i];
    return y;
}

/// Geometry class of the positive chamber, used to pick quadrature rules.
enum class ChamberShape { axis_box, planar_sector, generic };

/// A normalized root system: unit roots closed under their own reflections,
/// a choice of positive roots via a check vector, and the derived simple roots.
struct RootSystem {
    int dimension = 0;
    std::vector<Vec> roots;       // unit vectors, closed under sigma_alpha, +- pairs
    std::vector<int> positive;    // indices into roots with <alpha, check> > 0
    std::vector<int> simple;      // indices of the extreme positive roots
    Vec check_vector;

    // Derived geometry (set by the factories / validator, not user input).
    ChamberShape shape = ChamberShape::generic;
    std::vector<int> axes;        // axis_box: 0-based coordinate of each positive root
    double theta_lo = 0.0;        // planar_sector: chamber is {theta_lo < atan2 < theta_hi}
    double theta_hi = 0.0;
    int dihedral_n = 0;           // > 0 when built by dihedral_roots(n)

    const Vec& root(int i) const { return roots[static_cast<std::size_t>(i)]; }

    std::vector<Vec> positive_roots() const {
        std::vector<Vec> out;
        for (int i : positive) out.push_back(roots[i]);
        return out;
    }

    std::vector<Vec> simple_root_vectors() const {
        std::vector<Vec> out;
        for (int i : simple) out.push_back(roots[i]);
        return out;
    }

    /// Open-chamber membership: <x, alpha_k> strictly above wall_tol for every
    /// simple root. Points on walls are outside by convention.
    bool chamber_contains(const Vec& x, double wall_tol = 1e-12) const {
        for (int k : simple)
            if (dot(x, roots[k]) <= wall_tol) return false;
        return true;
    }

    /// min_k <x, alpha_k> over simple roots: the distance from an interior point
    /// to the nearest chamber wall (negative outside).
    double wall_distance(const Vec& x) const {
        double m = std::numeric_limits<double>::infinity();
        for (int k : simple) m = std::min(m, dot(x, roots[k]));
        return m;
    }
};

namespace detail {

inline std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

inline int find_root(const std::vector<Vec>& roots, const Vec& v, double tol) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (max_abs_diff(roots[i], v) < tol) return static_cast<int>(i);
    return -1;
}

/// Chamber sector angles for a 2-D system: intersect, per simple root, the arc
/// of directions with positive inner product, anchored at the check vector.
inline void sector_angles(RootSystem& rs) {
    const double pi = std::numbers::pi;
    double ref = std::atan2(rs.check_vector[1], rs.check_vector[0]);
    double lo = ref - pi, hi = ref + pi;
    for (int k : rs.simple) {
        double phi = std::atan2(rs.root(k)[1], rs.root(k)[0]);
        double a = phi - pi / 2, b = phi + pi / 2;
        while (ref <= a) { a -= 2 * pi; b -= 2 * pi; }
        while (ref >= b) { a += 2 * pi; b += 2 * pi; }
        lo = std::max(lo, a);
        hi = std::min(hi, b);
    }
    rs.theta_lo = lo;
    rs.theta_hi = hi;
}

inline void classify_chamber(RootSystem& rs) {
    // axis_box: every simple root is a +coordinate direction.
    bool axis = true;
    std::vector<int> axes;
    for (int k : rs.simple) {
        const Vec& a = rs.root(k);
        int found = -1;
        for (int j = 0; j < rs.dimension; ++j) {
            Vec e(rs.dimension, 0.0);
            e[j] = 1.0;
            if (max_abs_diff(a, e) < 1e-12) found = j;
        }
        if (found < 0) {
            axis = false;
            break;
        }
        axes.push_back(found);
    }
    if (axis) {
        rs.shape = ChamberShape::axis_box;
        rs.axes = axes;
        return;
    }
    if (rs.dimension == 2) {
        rs.shape = ChamberShape::planar_sector;
        sector_angles(rs);
        return;
    }
    rs.shape = ChamberShape::generic;
}

}  // namespace detail

/// The extreme members of a positive-root set: those not expressible as a
/// non-negative combination of the remaining positive roots. Solved as a small
/// non-negative least-squares problem per root.
inline std::vector<int> simple_root_indices(const std::vector<Vec>& roots,
                                            const std::vector<int>& positive) {
    int d = static_cast<int>(roots.at(0).size());
    std::vector<int> simple;
    for (std::size_t p = 0; p < positive.size(); ++p) {
        Mat a(d, static_cast<int>(positive.size()) - 1);
        int col = 0;
        for (std::size_t q = 0; q < positive.size(); ++q) {
            if (q == p) continue;
            for (int i = 0; i < d; ++i) a(i, col) = roots[positive[q]][i];
            ++col;
        }
        if (a.cols() == 0 || nnls(a, roots[positive[p]]).residual >= 1e-8)
            simple.push_back(positive[p]);
    }
    return simple;
}

/// Build and fully validate a root system. Input vectors are normalized, the
/// missing half of any +-alpha pair is added, positivity is decided by the sign
/// of <alpha, check_vector>, and the simple roots are extracted.
inline RootSystem build_root_system(std::vector<Vec> input, Vec check_vector) {
    if (input.empty()) throw std::invalid_argument("build_root_system: empty root list");
    const int d = static_cast<int>(input[0].size());
    if (d < 1) throw std::invalid_argument("build_root_system: dimension must be >= 1");
    for (const Vec& v : input)
        if (static_cast<int>(v.size()) != d)
            throw std::invalid_argument("build_root_system: inconsistent root dimensions");
    if (static_cast<int>(check_vector.size()) != d)
        throw std::invalid_argument("build_root_system: check vector dimension mismatch");

    RootSystem rs;
    rs.dimension = d;
    for (Vec& v : input) {
        Vec u = normalized(v);
        int dup = detail::find_root(rs.roots, u, 1e-10);
        if (dup >= 0)
            throw validation_error("root multiplicity: " + detail::vec_str(v) +
                                   " duplicates root " + std::to_string(dup) +
                                   " after normalization");
        rs.roots.push_back(u);
    }
    // complete +- pairs
    std::size_t supplied = rs.roots.size();
    for (std::size_t i = 0; i < supplied; ++i) {
        Vec neg = -1.0 * rs.roots[i];
        if (detail::find_root(rs.roots, neg, 1e-10) < 0) rs.roots.push_back(neg);
    }
    // closure under every reflection
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
        for (std::size_t j = 0; j < rs.roots.size(); ++j) {
            Vec image = reflect(rs.roots[i], rs.roots[j]);
            if (detail::find_root(rs.roots, image, 1e-10) < 0)
                throw validation_error(
                    "root system not closed: sigma_{alpha[" + std::to_string(i) + "]=" +
                    detail::vec_str(rs.roots[i]) + "} maps alpha[" + std::to_string(j) +
                    "]=" + detail::vec_str(rs.roots[j]) + " outside the set");
        }
    // positivity partition
    rs.check_vector = check_vector;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        double s = dot(rs.roots[i], check_vector);
        if (std::abs(s) <= 1e-10)
            throw validation_error("degenerate check vector: orthogonal to root " +
                                   std::to_string(i) + "=" + detail::vec_str(rs.roots[i]));
        if (s > 0.0) rs.positive.push_back(static_cast<int>(i));
    }
    rs.simple = simple_root_indices(rs.roots, rs.positive);
    // every positive root must decompose non-negatively over the simple ones
    {
        Mat a(d, static_cast<int>(rs.simple.size()));
        for (std::size_t k = 0; k < rs.simple.size(); ++k)
            for (int i = 0; i < d; ++i) a(i, static_cast<int>(k)) = rs.roots[rs.simple[k]][i];
        for (int p : rs.positive) {
            if (nnls(a, rs.roots[p]).residual >= 1e-8)
                throw validation_error("inconsistent root system: positive root " +
                                       std::to_string(p) +
                                       " has no non-negative expansion over the simple roots");
        }
        // linear independence of the simple roots via the Gram determinant
        int m = static_cast<int>(rs.simple.size());
        Mat g(m, m);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) g(p, q) = dot(rs.roots[rs.simple[p]], rs.roots[rs.simple[q]]);
        if (std::abs(g.det()) < 1e-10)
            throw validation_error("inconsistent root system: simple roots are linearly dependent");
    }
    detail::classify_chamber(rs);
    return rs;
}

/// As above with a default check vector: a seeded random direction retried
/// until it is uniformly non-orthogonal to every root.
inline RootSystem build_root_system(std::vector<Vec> input) {
    if (input.empty()) throw std::invalid_argument("build_root_system: empty root list");
    const int d = static_cast<int>(input[0].size());
    std::vector<Vec> unit;
    unit.reserve(input.size() * 2);
    for (const Vec& v : input) {
        unit.push_back(normalized(v));
        unit.push_back(-1.0 * unit.back());
    }
    Rng rng(0x57ab1e5eedULL);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vec c = normalized(rng.normal_vec(d));
        bool ok = true;
        for (const Vec& u : unit)
            if (std::abs(dot(u, c)) <= 1e-6) ok = false;
        if (ok) return build_root_system(std::move(input), c);
    }
    throw validation_error("could not find a non-degenerate check vector");
}

/// The I2(n) dihedral root system: the 2n planar unit
/// vectors (cos(pi j/n), sin(pi j/n)), with the chamber of aperture pi/n that
/// sits at angle (0, pi/n) for even n and (-pi/2n, pi/2n) for odd n. The check
/// vector is the angular bisector of that chamber.
inline RootSystem dihedral_roots(int n) {
    if (n < 3) throw std::invalid_argument("dihedral_roots: n must be >= 3");
    const double pi = std::numbers::pi;
    std::vector<Vec> roots;
    for (int j = 0; j < 2 * n; ++j)
        roots.push_back(Vec{std::cos(pi * j / n), std::sin(pi * j / n)});
    double bisector = (n % 2 == 0) ? pi / (2.0 * n) : 0.0;
    Vec check{std::cos(bisector), std::sin(bisector)};
    RootSystem rs = build_root_system(std::move(roots), std::move(check));
    rs.dihedral_n = n;
    rs.shape = ChamberShape::planar_sector;
    rs.theta_lo = (n % 2 == 0) ? 0.0 : -pi / (2.0 * n);
    rs.theta_hi = rs.theta_lo + pi / n;
    return rs;
}

/// Orthonormal root system {+-e_j : j in J}, J given with 1-based indices.
inline RootSystem orthogonal_roots(int d, const std::vector<int>& J) {
    if (d < 1) throw std::invalid_argument("orthogonal_roots: d must be >= 1");
    if (J.empty() || static_cast<int>(J.size()) > d)
        throw std::invalid_argument("orthogonal_roots: need 1 <= |J| <= d");
    for (std::size_t s = 0; s < J.size(); ++s) {
        if (J[s] < 1 || J[s] > d)
            throw std::invalid_argument("orthogonal_roots: index out of range 1..d");
        if (s > 0 && J[s] <= J[s - 1])
            throw std::invalid_argument("orthogonal_roots: indices must be strictly increasing");
    }
    std::vector<Vec> roots;
    Vec check(d, 0.0);
    for (int j : J) {
        Vec e(d, 0.0);
        e[j - 1] = 1.0;
        roots.push_back(e);
        check[j - 1] = 1.0;
    }
    return build_root_system(std::move(roots), std::move(check));
}

}  // namespace weylheat
