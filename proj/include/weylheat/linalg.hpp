#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace weylheat {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm_sq(a)); }

inline Vec operator+(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec operator-(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec operator*(double c, Vec a) {
    for (double& v : a) v *= c;
    return a;
}

inline double max_abs_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Vec normalized(const Vec& a) {
    double n = norm(a);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    return (1.0 / n) * a;
}

/// Dense row-major matrix. Everything in this library is d x d with d <= 4,
/// so no attempt is made at being clever.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    /// Householder reflection I - 2 a a^T for a unit vector a.
    static Mat reflection(const Vec& alpha) {
        int n = static_cast<int>(alpha.size());
        Mat m = identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) -= 2.0 * alpha[i] * alpha[j];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec apply(const Vec& x) const {
        Vec y(rows_, 0.0);
        for (int i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    Mat operator*(const Mat& o) const {
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                double v = (*this)(i, k);
                if (v == 0.0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    double max_abs_diff(const Mat& o) const {
        double m = 0.0;
        for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }

    /// Determinant by partial-pivot elimination.
    double det() const {
        Mat u = *this;
        int n = rows_;
        double d = 1.0;
        for (int k = 0; k < n; ++k) {
            int p = k;
            for (int i = k + 1; i < n; ++i)
                if (std::abs(u(i, k)) > std::abs(u(p, k))) p = i;
            if (u(p, k) == 0.0) return 0.0;
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(u(p, j), u(k, j));
                d = -d;
            }
            d *= u(k, k);
            for (int i = k + 1; i < n; ++i) {
                double f = u(i, k) / u(k, k);
                for (int j = k; j < n; ++j) u(i, j) -= f * u(k, j);
            }
        }
        return d;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

/// Solve A x = b for small square A (partial pivoting). Throws on singular A.
inline Vec solve_linear(Mat a, Vec b) {
    int n = a.rows();
    for (int k = 0; k < n; ++k) {
        int p = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
        if (std::abs(a(p, k)) < 1e-300) throw std::runtime_error("solve_linear: singular system");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            std::swap(b[p], b[k]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = a(i, k) / a(k, k);
            b[i] -= f * b[k];
            for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    Vec x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

struct NnlsResult {
    Vec coefficients;
    double residual;  // Euclidean norm of A c - b
};

/// Lawson–Hanson non-negative least squares: minimize ||A c - b|| over c >= 0.
/// A has d rows (d <= 4 here) and any number of columns.
inline NnlsResult nnls(const Mat& a, const Vec& b, int max_iter = 10000) {
    int n = a.cols();
    int d = a.rows();
    Vec c(n, 0.0);
    std::vector<bool> passive(n, false);

    auto residual_vec = [&](const Vec& coeff) {
        Vec r = b;
        for (int j = 0; j < n; ++j)
            if (coeff[j] != 0.0)
                for (int i = 0; i < d; ++i) r[i] -= a(i, j) * coeff[j];
        return r;
    };

    auto solve_passive = [&](std::vector<int>& idx) {
        // normal equations on the passive column set
        int m = static_cast<int>(idx.size());
        Mat g(m, m);
        Vec rhs(m, 0.0);
        for (int p = 0; p < m; ++p) {
            for (int q = 0; q < m; ++q) {
                double s = 0.0;
                for (int i = 0; i < d; ++i) s += a(i, idx[p]) * a(i, idx[q]);
                g(p, q) = s;
            }
            double s = 0.0;
            for (int i = 0; i < d; ++i) s += a(i, idx[p]) * b[i];
            rhs[p] = s;
        }
        return solve_linear(g, rhs);
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        Vec r = residual_vec(c);
        // gradient w = A^T r
        int best = -1;
        double wbest = 1e-12 * (norm(b) + 1.0);
        for (int j = 0; j < n; ++j) {
            if (passive[j]) continue;
            double w = 0.0;
            for (int i = 0; i < d; ++i) w += a(i, j) * r[i];
            if (w > wbest) {
                wbest = w;
                best = j;
            }
        }
        if (best < 0) break;
        passive[best] = true;

        while (true) {
            std::vector<int> idx;
            for (int j = 0; j < n; ++j)
                if (passive[j]) idx.push_back(j);
            Vec z;
            bool singular = false;
            try {
                z = solve_passive(idx);
            } catch (const std::runtime_error&) {
                singular = true;
            }
            if (singular) {
                passive[best] = false;
                break;
            }
            bool feasible = true;
            for (double v : z)
                if (v <= 0.0) feasible = false;
            if (feasible) {
                std::fill(c.begin(), c.end(), 0.0);
                for (std::size_t p = 0; p < idx.size(); ++p) c[idx[p]] = z[p];
                break;
            }
            double alpha = 1.0;
            for (std::size_t p = 0; p < idx.size(); ++p) {
                if (z[p] <= 0.0) {
                    double cj = c[idx[p]];
                    double step = cj / (cj - z[p]);
                    alpha = std::min(alpha, step);
                }
            }
            for (std::size_t p = 0; p < idx.size(); ++p) {
                c[idx[p]] += alpha * (z[p] - c[idx[p]]);
                if (c[idx[p]] <= 1e-14) {
                    c[idx[p]] = 0.0;
                    passive[idx[p]] = false;
                }
            }
        }
    }
    return NnlsResult{c, norm(residual_vec(c))};
}

/// Neumaier compensated accumulator; used where sign-weighted group sums cancel.
class CompensatedSum {
public:
    void add(double x) {
        double t = s_ + x;
        if (std::abs(s_) >= std::abs(x))
            c_ += (s_ - t) + x;
        else
            c_ += (x - t) + s_;
        s_ = t;
    }
    double value() const { return s_ + c_; }

private:
    double s_ = 0.0, c_ = 0.0;
};

}  // namespace weylheat
