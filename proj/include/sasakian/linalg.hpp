#pragma once

/// @file linalg.hpp
/// Dense exact linear algebra over the rationals. Everything is deterministic:
/// elimination always picks the first nonzero pivot in row-major scan order, so
/// repeated runs (and different platforms) produce identical bases.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sasakian {

using Vec = std::vector<Rat>;

[[nodiscard]] inline bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (!is_zero(x)) return false;
    return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec +: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("Vec -: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(const Rat& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

inline Vec operator-(const Vec& v) { return rat(-1) * v; }

/// Row-major dense matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

    /// Build from nested initializer-style data; all rows must have equal length.
    static Mat from_rows(const std::vector<Vec>& rows) {
        if (rows.empty()) return Mat(0, 0);
        Mat m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Mat::from_rows: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const Rat& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    [[nodiscard]] Vec row(std::size_t i) const {
        Vec r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    [[nodiscard]] Vec col(std::size_t j) const {
        Vec c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    void set_col(std::size_t j, const Vec& v) {
        if (v.size() != rows_) throw std::invalid_argument("Mat::set_col: size mismatch");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    [[nodiscard]] Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Mat *: shape mismatch");
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (is_zero(x.at(i, k))) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
            }
        return r;
    }

    friend Vec operator*(const Mat& x, const Vec& v) {
        if (x.cols_ != v.size()) throw std::invalid_argument("Mat * Vec: shape mismatch");
        Vec r(x.rows_, Rat(0));
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r[i] += x.at(i, j) * v[j];
        return r;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Mat +: shape mismatch");
        Mat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Mat -: shape mismatch");
        Mat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }

    friend Mat operator*(const Rat& c, const Mat& x) {
        Mat r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
        return r;
    }

    [[nodiscard]] bool is_zero_mat() const {
        for (const Rat& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Result of row reduction to *reduced* row-echelon form: each pivot is 1 and
/// is the only nonzero entry in its column. `pivot_cols[i]` is the pivot column
/// of row i; rank == pivot_cols.size().
struct Rref {
    Mat m;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // first nonzero entry at or below row r — deterministic pivot choice
        std::size_t p = r;
        while (p < m.rows() && is_zero(m.at(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

[[nodiscard]] inline std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

/// Solve A x = b exactly. Returns std::nullopt when inconsistent. When the
/// solution space is positive-dimensional, returns the particular solution
/// whose free variables (in column-echelon order) are zero.
inline std::optional<Vec> solve_linear(const Mat& A, const Vec& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    Mat aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    // A pivot in the appended column marks an inconsistent row 0 = 1.
    for (std::size_t c : r.pivot_cols)
        if (c == A.cols()) return std::nullopt;
    Vec x(A.cols(), Rat(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) x[r.pivot_cols[i]] = r.m.at(i, A.cols());
    return x;
}

/// Basis of the null space {x : A x = 0} in the deterministic reduced-echelon
/// normalization: one vector per free column f (in increasing column order),
/// with coordinate 1 at f and the pivot coordinates completing A x = 0.
inline std::vector<Vec> kernel(const Mat& A) {
    Rref r = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(A.cols(), Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) v[r.pivot_cols[i]] = -r.m.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rat det(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    Rat d(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && is_zero(m.at(p, c))) ++p;
        if (p == m.rows()) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (is_zero(m.at(i, c))) continue;
            Rat f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref r = rref(std::move(aug));
    if (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.m.at(i, n + j);
    return inv;
}

/// Row-space basis in reduced echelon form (used for deterministic subspace
/// comparison: two spans are equal iff their echelon bases are identical).
inline std::vector<Vec> row_space_basis(const Mat& m) {
    Rref r = rref(m);
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) basis.push_back(r.m.row(i));
    return basis;
}

inline std::vector<Vec> span_basis(const std::vector<Vec>& gens) {
    if (gens.empty()) return {};
    return row_space_basis(Mat::from_rows(gens));
}

/// Membership test: v ∈ span(basis)?
inline bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (is_zero(v)) return true;
    std::vector<Vec> all = basis;
    all.push_back(v);
    return span_basis(all).size() == span_basis(basis).size();
}

/// Positive definiteness of a symmetric matrix via leading principal minors
/// (Sylvester). Throws if the matrix is not symmetric.
inline bool is_positive_definite(const Mat& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("is_positive_definite: not square");
    if (!(g.transpose() == g)) throw std::invalid_argument("is_positive_definite: not symmetric");
    for (std::size_t k = 1; k <= g.rows(); ++k) {
        Mat lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = g.at(i, j);
        if (det(lead) <= 0) return false;
    }
    return true;
}

/// Signature (p, n, z) of a symmetric matrix over Q, computed by exact
/// symmetric Gaussian (congruence) reduction — no eigenvalues involved.
struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature symmetric_signature(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetric_signature: not square");
    if (!(m.transpose() == m)) throw std::invalid_argument("symmetric_signature: not symmetric");
    std::size_t n = m.rows();
    Signature s;
    auto add_row_col = [&](std::size_t dst, std::size_t src) {
        for (std::size_t j = 0; j < n; ++j) m.at(dst, j) += m.at(src, j);
        for (std::size_t i = 0; i < n; ++i) m.at(i, dst) += m.at(i, src);
    };
    auto swap_row_col = [&](std::size_t x, std::size_t y) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m.at(x, j), m.at(y, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, x), m.at(i, y));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (is_zero(m.at(k, k))) {
            std::size_t d = k;
            while (d < n && is_zero(m.at(d, d))) ++d;
            if (d < n) {
                swap_row_col(k, d);
            } else {
                std::size_t j = k;
                while (j < n && is_zero(m.at(k, j))) ++j;
                if (j == n) {  // row k (and by symmetry column k) is zero
                    ++s.zero;
                    continue;
                }
                add_row_col(k, j);  // diagonal becomes 2*m(k,j) != 0
            }
        }
        Rat piv = m.at(k, k);
        if (piv > 0)
            ++s.positive;
        else
            ++s.negative;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || is_zero(m.at(i, k))) continue;
            Rat f = m.at(i, k) / piv;
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (std::size_t j = 0; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
    }
    return s;
}

}  // namespace sasakian
