#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "weylheat/reflection_group.hpp"

namespace weylheat {

/// A homomorphism W -> {+1, -1}, stored as one value per group element.
struct TwoCharacter {
    const ReflectionGroup* group = nullptr;
    std::vector<int> values;  // +-1, indexed by element
    std::string name;

    int operator()(int g) const { return values[static_cast<std::size_t>(g)]; }

    bool is_trivial() const {
        for (int v : values)
            if (v != 1) return false;
        return true;
    }
};

inline bool is_homomorphism(const ReflectionGroup& w, const std::vector<int>& values) {
    const int n = w.size();
    if (static_cast<int>(values.size()) != n || values[0] != 1) return false;
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (values[static_cast<std::size_t>(w.mul(g, h))] !=
                values[static_cast<std::size_t>(g)] * values[static_cast<std::size_t>(h)])
                return false;
    return true;
}

inline TwoCharacter trivial_character(const ReflectionGroup& w) {
    return TwoCharacter{&w, std::vector<int>(static_cast<std::size_t>(w.size()), 1), "trivial"};
}

/// sgn(g) = det(g), the determinant character.
inline TwoCharacter sgn_character(const ReflectionGroup& w) {
    TwoCharacter chi{&w, {}, "sgn"};
    chi.values.reserve(static_cast<std::size_t>(w.size()));
    for (int g = 0; g < w.size(); ++g) chi.values.push_back(w.element(g).det > 0.0 ? 1 : -1);
    return chi;
}

/// {g : chi(g) = +1}; the whole group for trivial chi, otherwise an index-2
/// normal subgroup.
inline std::vector<int> character_kernel(const TwoCharacter& chi) {
    std::vector<int> ker;
    for (std::size_t g = 0; g < chi.values.size(); ++g)
        if (chi.values[g] == 1) ker.push_back(static_cast<int>(g));
    return ker;
}

namespace detail {

/// Locate the dihedral generators r (rotation by 2 pi / n) and s (reflection
/// across the vertical axis) inside a generated D_n; returns {r, s} or {-1,-1}.
inline std::pair<int, int> dihedral_r_sigma(const ReflectionGroup& w, int n) {
    const double c = std::cos(2.0 * std::numbers::pi / n);
    const double s = std::sin(2.0 * std::numbers::pi / n);
    Mat rot(2, 2);
    rot(0, 0) = c;
    rot(0, 1) = -s;
    rot(1, 0) = s;
    rot(1, 1) = c;
    Mat sig = Mat::identity(2);
    sig(0, 0) = -1.0;
    return {w.find_element(rot), w.find_element(sig)};
}

}  // namespace detail

/// All homomorphisms W -> {+1,-1}: every sign assignment on the simple
/// reflections is propagated along the BFS words and kept iff the resulting
/// table multiplies correctly on the whole group. Assignments are scanned in
/// lexicographic order, which fixes the hom<k> numbering.
inline std::vector<TwoCharacter> enumerate_characters(const ReflectionGroup& w) {
    const int m = static_cast<int>(w.root_system().simple.size());
    const TwoCharacter sgn = sgn_character(w);
    std::vector<TwoCharacter> out;
    int generic_count = 0;

    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> values;
        values.reserve(static_cast<std::size_t>(w.size()));
        for (int g = 0; g < w.size(); ++g) {
            int v = 1;
            for (int letter : w.element(g).word)
                if (mask & (1 << letter)) v = -v;
            values.push_back(v);
        }
        if (!is_homomorphism(w, values)) continue;
        bool dup = false;
        for (const TwoCharacter& c : out)
            if (c.values == values) dup = true;
        if (dup) continue;
        TwoCharacter chi{&w, std::move(values), ""};
        if (chi.is_trivial())
            chi.name = "trivial";
        else if (chi.values == sgn.values)
            chi.name = "sgn";
        else
            chi.name = "hom" + std::to_string(generic_count);
        ++generic_count;
        out.push_back(std::move(chi));
    }

    const RootSystem& rs = w.root_system();
    if (rs.dihedral_n > 0 && rs.dihedral_n % 2 == 0) {
        // The two exceptional characters of D_n, n even: eta1 has the vertical
        // reflection s in its kernel, eta2 has r s instead.
        auto [r, sig] = detail::dihedral_r_sigma(w, rs.dihedral_n);
        if (r >= 0 && sig >= 0) {
            int rsig = w.mul(r, sig);
            for (TwoCharacter& chi : out) {
                if (chi.name == "trivial" || chi.name == "sgn") continue;
                if (chi.values[static_cast<std::size_t>(sig)] == 1)
                    chi.name = "eta1";
                else if (chi.values[static_cast<std::size_t>(rsig)] == 1)
                    chi.name = "eta2";
            }
        }
    } else if (rs.shape == ChamberShape::axis_box && !rs.simple.empty()) {
        // Orthogonal systems: name by the Z_2^k bit vector over the simple
        // roots (1 = Dirichlet side), keeping trivial/sgn labels.
        for (TwoCharacter& chi : out) {
            if (chi.name == "trivial" || chi.name == "sgn") continue;
            std::string bits;
            for (int k = 0; k < static_cast<int>(rs.simple.size()); ++k) {
                int v = chi.values[static_cast<std::size_t>(w.simple_reflection(k))];
                bits += (v == 1 ? "0" : "1");
                if (k + 1 < static_cast<int>(rs.simple.size())) bits += ",";
            }
            chi.name = bits;
        }
    }
    return out;
}

}  // namespace weylheat
