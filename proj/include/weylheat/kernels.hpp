#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylheat/characters.hpp"
#include "weylheat/errors.hpp"
#include "weylheat/reflection_group.hpp"

namespace weylheat {

/// Gauss-Weierstrass kernel (4 pi t)^(-d/2) exp(-|w|^2 / 4t) evaluated at a
/// displacement w; the kernel of exp(t Laplacian).
inline double heat_base(double t, int d, const Vec& w) {
    if (t <= 0.0) throw std::invalid_argument("heat_base: t must be positive");
    return std::pow(4.0 * std::numbers::pi * t, -0.5 * d) * std::exp(-norm_sq(w) / (4.0 * t));
}

inline double heat_base_1d(double t, double w) {
    return std::pow(4.0 * std::numbers::pi * t, -0.5) * std::exp(-w * w / (4.0 * t));
}

/// Translation-invariant base kernel on R^d: the heat kernel, or the 3-D
/// resolvent kernel exp(-sqrt(lambda)|w|) / (4 pi |w|).
struct BaseKernel {
    enum class Kind { heat, resolvent3d };

    Kind kind = Kind::heat;
    int dimension = 0;
    double param = 0.0;  // t for heat, lambda for resolvent3d

    static BaseKernel heat(double t, int d) {
        if (t <= 0.0) throw std::invalid_argument("BaseKernel::heat: t must be positive");
        if (d < 1) throw std::invalid_argument("BaseKernel::heat: d must be >= 1");
        return BaseKernel{Kind::heat, d, t};
    }

    static BaseKernel resolvent3d(double lambda) {
        if (lambda <= 0.0) throw std::invalid_argument("BaseKernel::resolvent3d: lambda must be positive");
        return BaseKernel{Kind::resolvent3d, 3, lambda};
    }

    double operator()(const Vec& w) const {
        switch (kind) {
            case Kind::heat:
                return heat_base(param, dimension, w);
            case Kind::resolvent3d: {
                double r = norm(w);
                if (r < 1e-14) throw singularity_error("resolvent3d kernel evaluated at zero separation");
                return std::exp(-std::sqrt(param) * r) / (4.0 * std::numbers::pi * r);
            }
        }
        return 0.0;
    }
};

/// Method-of-images kernel: sum over g in W of
/// eta(g) * base(g x - y). Evaluated in fixed element order; compensated
/// summation kicks in for |W| > 16 where sign cancellation matters.
struct SymmetrizedKernel {
    BaseKernel base;
    const ReflectionGroup* group = nullptr;
    TwoCharacter character;

    double operator()(const Vec& x, const Vec& y) const {
        const ReflectionGroup& w = *group;
        const int n = w.size();
        if (n > 16) {
            CompensatedSum acc;
            for (int g = 0; g < n; ++g) acc.add(character(g) * base(w.apply(g, x) - y));
            return acc.value();
        }
        double s = 0.0;
        for (int g = 0; g < n; ++g) s += character(g) * base(w.apply(g, x) - y);
        return s;
    }

    /// Same sum with the trivial weight; the natural scale for normalizing
    /// near-wall cancellation.
    double trivial_scale(const Vec& x, const Vec& y) const {
        const ReflectionGroup& w = *group;
        double s = 0.0;
        for (int g = 0; g < w.size(); ++g) s += std::abs(base(w.apply(g, x) - y));
        return s;
    }
};

inline SymmetrizedKernel heat_kernel(const ReflectionGroup& w, const TwoCharacter& chi, double t) {
    return SymmetrizedKernel{BaseKernel::heat(t, w.dimension()), &w, chi};
}

inline double symmetrized_eval(const SymmetrizedKernel& k, const Vec& x, const Vec& y) {
    return k(x, y);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Product formula for the orthant heat kernel: for each mirrored axis j the
/// factor p_t(x_j - y_j) + (-1)^eta_j p_t(x_j + y_j), free factors elsewhere.
/// `J` lists the mirrored coordinates (1-based, as in orthogonal_roots) and
/// `eta_bits` has one bit per entry of J.
inline double orthant_heat_product(int d, const std::vector<int>& J, const std::vector<int>& eta_bits,
                                   double t, const Vec& x, const Vec& y) {
    if (t <= 0.0) throw std::invalid_argument("orthant_heat_product: t must be positive");
    if (J.size() != eta_bits.size())
        throw std::invalid_argument("orthant_heat_product: eta bit count must match |J|");
    std::vector<int> bit_of_axis(static_cast<std::size_t>(d), -1);
    for (std::size_t s = 0; s < J.size(); ++s) bit_of_axis[static_cast<std::size_t>(J[s] - 1)] = eta_bits[s];
    double prod = 1.0;
    for (int j = 0; j < d; ++j) {
        if (bit_of_axis[static_cast<std::size_t>(j)] < 0) {
            prod *= heat_base_1d(t, x[j] - y[j]);
        } else {
            double sign = bit_of_axis[static_cast<std::size_t>(j)] ? -1.0 : 1.0;
            prod *= heat_base_1d(t, x[j] - y[j]) + sign * heat_base_1d(t, x[j] + y[j]);
        }
    }
    return prod;
}

/// Full-orthant version: one bit per coordinate.
inline double orthant_heat_product(const std::vector<int>& eta_bits, double t, const Vec& x, const Vec& y) {
    std::vector<int> J;
    for (int j = 1; j <= static_cast<int>(eta_bits.size()); ++j) J.push_back(j);
    return orthant_heat_product(static_cast<int>(eta_bits.size()), J, eta_bits, t, x, y);
}

enum class DihedralKind { neumann, dirichlet, eta1, eta2 };

/// The four explicit dihedral kernels on the aperture pi/n cone, written as
/// rotation/reflection sums with precomputed matrices:
///   N     : sum_m p(r^m x - y) + p(r^m s x - y)
///   D     : sum_m p(r^m x - y) - p(r^m s x - y)
///   eta1  : sum_{m<k} p(r^{2m} x-y) - p(r^{2m+1} x-y) + p(r^{2m} s x-y) - p(r^{2m+1} s x-y)
///   eta2  : sum_{m<k} p(r^{2m} x-y) - p(r^{2m+1} x-y) + p(r^{2m+1} s x-y) - p(r^{2m} s x-y)
/// with r the rotation by 2 pi/n and s the reflection across the vertical axis.
inline double dihedral_heat(DihedralKind kind, int n, double t, const Vec& x, const Vec& y) {
    if (n < 3) throw std::invalid_argument("dihedral_heat: n must be >= 3");
    if (t <= 0.0) throw std::invalid_argument("dihedral_heat: t must be positive");
    if ((kind == DihedralKind::eta1 || kind == DihedralKind::eta2) && n % 2 != 0)
        throw std::invalid_argument("dihedral_heat: eta1/eta2 exist only for even n");

    const double step = 2.0 * std::numbers::pi / n;
    auto rot_term = [&](int m) {  // p_t(r^m x - y)
        double c = std::cos(step * m), s = std::sin(step * m);
        Vec w{c * x[0] - s * x[1] - y[0], s * x[0] + c * x[1] - y[1]};
        return heat_base(t, 2, w);
    };
    auto ref_term = [&](int m) {  // p_t(r^m s x - y), s = diag(-1, 1)
        double c = std::cos(step * m), s = std::sin(step * m);
        Vec w{-c * x[0] - s * x[1] - y[0], -s * x[0] + c * x[1] - y[1]};
        return heat_base(t, 2, w);
    };

    CompensatedSum acc;
    switch (kind) {
        case DihedralKind::neumann:
            for (int m = 0; m < n; ++m) {
                acc.add(rot_term(m));
                acc.add(ref_term(m));
            }
            break;
        case DihedralKind::dirichlet:
            for (int m = 0; m < n; ++m) {
                acc.add(rot_term(m));
                acc.add(-ref_term(m));
            }
            break;
        case DihedralKind::eta1:
            for (int m = 0; m < n / 2; ++m) {
                acc.add(rot_term(2 * m));
                acc.add(-rot_term(2 * m + 1));
                acc.add(ref_term(2 * m));
                acc.add(-ref_term(2 * m + 1));
            }
            break;
        case DihedralKind::eta2:
            for (int m = 0; m < n / 2; ++m) {
                acc.add(rot_term(2 * m));
                acc.add(-rot_term(2 * m + 1));
                acc.add(ref_term(2 * m + 1));
                acc.add(-ref_term(2 * m));
            }
            break;
    }
    return acc.value();
}

inline const char* dihedral_kind_name(DihedralKind k) {
    switch (k) {
        case DihedralKind::neumann: return "N";
        case DihedralKind::dirichlet: return "D";
        case DihedralKind::eta1: return "eta1";
        case DihedralKind::eta2: return "eta2";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Weighted extension and averaging operators
// ---------------------------------------------------------------------------

/// A weight on W: one real value per group element. Characters are weights;
/// so are the matrix-entry weights g -> g_{ji} of the derivative identities.
using Weight = std::vector<double>;

inline Weight weight_from_character(const TwoCharacter& chi) {
    return Weight(chi.values.begin(), chi.values.end());
}

inline Weight trivial_weight(const ReflectionGroup& w) {
    return Weight(static_cast<std::size_t>(w.size()), 1.0);
}

/// The weight g -> g_{ji} (matrix entry row j, column i).
inline Weight entry_weight(const ReflectionGroup& w, int j, int i) {
    Weight out;
    out.reserve(static_cast<std::size_t>(w.size()));
    for (int g = 0; g < w.size(); ++g) out.push_back(w.element(g).matrix(j, i));
    return out;
}

inline Weight weight_product(Weight a, const Weight& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
}

/// Weighted averaging operator: (1/|W|) sum_g omega(g) F(g y).
template <class F>
double average_over_group(const ReflectionGroup& w, const Weight& omega, F&& fn, const Vec& y) {
    double s = 0.0;
    for (int g = 0; g < w.size(); ++g)
        if (omega[static_cast<std::size_t>(g)] != 0.0)
            s += omega[static_cast<std::size_t>(g)] * fn(w.apply(g, y));
    return s / w.size();
}

/// Weighted extension operator: fold x to (g, x+) and return omega(g) f(x+).
/// nullopt when x lies on a mirror.
template <class F>
std::optional<double> extend_from_chamber(const ReflectionGroup& w, const Weight& omega, F&& fn,
                                          const Vec& x) {
    auto fold = w.fold_to_chamber(x);
    if (!fold) return std::nullopt;
    return omega[static_cast<std::size_t>(fold->element)] * fn(fold->point);
}

}  // namespace weylheat
