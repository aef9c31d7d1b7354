#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylheat/errors.hpp"
#include "weylheat/linalg.hpp"
#include "weylheat/root_system.hpp"

namespace weylheat {

struct GroupElement {
    Mat matrix;             // orthogonal d x d
    double det = 1.0;       // +-1
    std::vector<int> word;  // shortest word in simple reflections; empty = identity
};

struct FoldResult {
    int element;  // g with g * point == original x
    Vec point;    // representative in the positive chamber
};

/// The finite reflection group of a root system, generated by breadth-first
/// closure over the simple reflections. Elements are stored as explicit
/// matrices; element 0 is the identity. Immutable after generation.
class ReflectionGroup {
public:
    static constexpr double kDedupTol = 1e-9;

    /// BFS closure over words in the simple reflections, deduplicating matrices
    /// entrywise at kDedupTol. Throws validation_error if the cap is exceeded
    /// (a malformed system would fail to close).
    static ReflectionGroup generate(RootSystem rs, std::size_t max_elements = 1000000) {
        ReflectionGroup w;
        w.rs_ = std::move(rs);
        const int d = w.rs_.dimension;
        std::vector<Mat> gens;
        for (int k : w.rs_.simple) gens.push_back(Mat::reflection(w.rs_.root(k)));

        w.elems_.push_back(GroupElement{Mat::identity(d), 1.0, {}});
        for (std::size_t head = 0; head < w.elems_.size(); ++head) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                Mat cand = w.elems_[head].matrix * gens[k];
                if (w.find_element(cand) >= 0) continue;
                GroupElement e;
                e.matrix = cand;
                e.det = (cand.det() > 0.0) ? 1.0 : -1.0;
                e.word = w.elems_[head].word;
                e.word.push_back(static_cast<int>(k));
                w.elems_.push_back(std::move(e));
                if (w.elems_.size() > max_elements)
                    throw validation_error("group closure exceeded element cap; root system malformed");
            }
        }
        w.finalize();
        return w;
    }

    /// The trivial group {identity} acting on R^d (no mirrors). Supports the
    /// free-space baselines in the Monte-Carlo and PDE residual checks.
    static ReflectionGroup trivial(int d) {
        ReflectionGroup w;
        w.rs_.dimension = d;
        w.rs_.shape = ChamberShape::axis_box;  // chamber == R^d, no constrained axes
        w.elems_.push_back(GroupElement{Mat::identity(d), 1.0, {}});
        w.finalize();
        return w;
    }

    const RootSystem& root_system() const { return rs_; }
    int dimension() const { return rs_.dimension; }
    int size() const { return static_cast<int>(elems_.size()); }
    const GroupElement& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

    int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
    int inverse(int g) const { return inv_[static_cast<std::size_t>(g)]; }

    Vec apply(int g, const Vec& x) const { return elems_[static_cast<std::size_t>(g)].matrix.apply(x); }

    /// Index of the group element whose matrix matches m, or -1.
    int find_element(const Mat& m, double tol = kDedupTol) const {
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (elems_[i].matrix.max_abs_diff(m) < tol) return static_cast<int>(i);
        return -1;
    }

    /// Group index of the reflection in simple root k.
    int simple_reflection(int k) const { return simple_refl_[static_cast<std::size_t>(k)]; }

    /// Fold x into the positive chamber: returns (g, x+) with g x+ == x, or
    /// nullopt when x lies on a mirror (within wall_tol against any root).
    std::optional<FoldResult> fold_to_chamber(const Vec& x, double wall_tol = 1e-12) const {
        for (const Vec& alpha : rs_.roots)
            if (std::abs(dot(alpha, x)) <= wall_tol) return std::nullopt;
        Vec p = x;
        int h = 0;  // product of the applied simple reflections, p == h * x
        const int m = static_cast<int>(rs_.simple.size());
        for (int guard = 0; guard < 4 * size() + 8; ++guard) {
            int k = -1;
            for (int j = 0; j < m; ++j) {
                if (dot(p, rs_.root(rs_.simple[j])) < -wall_tol) {
                    k = j;
                    break;
                }
            }
            if (k < 0) return FoldResult{inv_[static_cast<std::size_t>(h)], std::move(p)};
            p = reflect(rs_.root(rs_.simple[k]), p);
            h = mul(simple_refl_[static_cast<std::size_t>(k)], h);
        }
        throw validation_error("fold_to_chamber failed to terminate");
    }

private:
    void finalize() {
        const std::size_t n = elems_.size();
        mul_.assign(n, std::vector<int>(n, -1));
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                int idx = find_element(elems_[g].matrix * elems_[h].matrix);
                if (idx < 0) throw validation_error("group not closed under multiplication");
                mul_[g][h] = idx;
            }
        inv_.assign(n, -1);
        for (std::size_t g = 0; g < n; ++g) {
            int idx = find_element(elems_[g].matrix.transposed());
            if (idx < 0) throw validation_error("group element without inverse");
            inv_[g] = idx;
        }
        simple_refl_.clear();
        for (int k = 0; k < static_cast<int>(rs_.simple.size()); ++k) {
            int idx = find_element(Mat::reflection(rs_.root(rs_.simple[k])));
            if (idx < 0) throw validation_error("simple reflection missing from group");
            simple_refl_.push_back(idx);
        }
    }

    RootSystem rs_;
    std::vector<GroupElement> elems_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> simple_refl_;
};

inline ReflectionGroup generate_group(RootSystem rs) { return ReflectionGroup::generate(std::move(rs)); }

}  // namespace weylheat
