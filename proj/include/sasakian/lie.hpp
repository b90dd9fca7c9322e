#pragma once

/// @file lie.hpp
/// Finite-dimensional Lie algebras over Q, given by exact structure constants.
/// Antisymmetry is built into the storage: only brackets [e_i, e_j] with i < j
/// are kept, and the accessor supplies the sign for swapped arguments. Whether
/// the Jacobi identity holds is a *question* (see jacobi_defect), not a storage
/// invariant — several ops deliberately run on perturbed non-Lie tables.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

class LieAlg {
public:
    LieAlg() = default;

    explicit LieAlg(std::size_t dim) : dim_(dim), table_(dim * (dim - 1) / 2, Vec(dim, Rat(0))) {
        if (dim == 0) throw std::invalid_argument("LieAlg: dimension must be positive");
        for (std::size_t i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) {
        if (l.size() != dim_) throw std::invalid_argument("LieAlg::set_labels: size mismatch");
        labels_ = std::move(l);
    }

    /// Set [e_i, e_j] = value (0-based, i != j). Stored once; the (j, i) entry
    /// is implied by antisymmetry.
    void set_bracket(std::size_t i, std::size_t j, Vec value) {
        if (i == j) throw std::invalid_argument("LieAlg::set_bracket: equal indices");
        if (i >= dim_ || j >= dim_) throw std::invalid_argument("LieAlg::set_bracket: index out of range");
        if (value.size() != dim_) throw std::invalid_argument("LieAlg::set_bracket: value size mismatch");
        if (i < j)
            table_[pair_index(i, j)] = std::move(value);
        else
            table_[pair_index(j, i)] = -std::move(value);
    }

    /// Convenience: add c * e_k to [e_i, e_j] (and by antisymmetry to [e_j, e_i]).
    void add_bracket_term(std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
        if (i == j) throw std::invalid_argument("LieAlg::add_bracket_term: equal indices");
        if (i < j)
            table_[pair_index(i, j)][k] += c;
        else
            table_[pair_index(j, i)][k] -= c;
    }

    /// [e_i, e_j] as a coefficient vector (any i, j; zero when i == j).
    [[nodiscard]] Vec bracket_basis(std::size_t i, std::size_t j) const {
        if (i >= dim_ || j >= dim_) throw std::invalid_argument("LieAlg::bracket_basis: index out of range");
        if (i == j) return Vec(dim_, Rat(0));
        return i < j ? table_[pair_index(i, j)] : -table_[pair_index(j, i)];
    }

    /// Bilinear extension of the bracket to arbitrary coefficient vectors.
    [[nodiscard]] Vec bracket(const Vec& x, const Vec& y) const {
        if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("LieAlg::bracket: size mismatch");
        Vec r(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Rat c = x[i] * y[j] - x[j] * y[i];
                if (is_zero(c)) continue;
                const Vec& t = table_[pair_index(i, j)];
                for (std::size_t k = 0; k < dim_; ++k) r[k] += c * t[k];
            }
        return r;
    }

    /// Matrix of ad_X : Y -> [X, Y] in the defining basis.
    [[nodiscard]] Mat ad(const Vec& x) const {
        Mat m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec e(dim_, Rat(0));
            e[j] = 1;
            m.set_col(j, bracket(x, e));
        }
        return m;
    }

    [[nodiscard]] Mat ad_basis(std::size_t i) const {
        Vec e(dim_, Rat(0));
        e[i] = 1;
        return ad(e);
    }

    friend bool operator==(const LieAlg& a, const LieAlg& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    [[nodiscard]] std::size_t pair_index(std::size_t i, std::size_t j) const {
        return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
    }

    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;  // [e_i, e_j] for i < j, lexicographic
};

/// One violated Jacobi triple: defect = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
struct JacobiDefect {
    std::size_t i, j, k;
    Vec defect;
};

/// All basis triples i < j < k with nonzero Jacobi defect. Empty iff the table
/// is an honest Lie algebra.
inline std::vector<JacobiDefect> jacobi_defect(const LieAlg& L) {
    std::vector<JacobiDefect> out;
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec ei(n, Rat(0)), ej(n, Rat(0)), ek(n, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Vec d = L.bracket(L.bracket_basis(i, j), ek) + L.bracket(L.bracket_basis(j, k), ei) +
                        L.bracket(L.bracket_basis(k, i), ej);
                if (!is_zero(d)) out.push_back({i, j, k, std::move(d)});
            }
    return out;
}

[[nodiscard]] inline bool is_lie_algebra(const LieAlg& L) { return jacobi_defect(L).empty(); }

/// Center = kernel of the stacked adjoint maps, in the deterministic echelon
/// normalization of kernel().
inline std::vector<Vec> center(const LieAlg& L) {
    std::size_t n = L.dim();
    Mat stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Vec br = L.bracket_basis(i, j);  // row block j, row k: coefficient of e_k in [x, e_j]
            for (std::size_t k = 0; k < n; ++k) stacked.at(j * n + k, i) = br[k];
        }
    return kernel(stacked);
}

namespace detail {

/// span{[u, v] : u in U, v in V} as an echelon basis.
inline std::vector<Vec> bracket_span(const LieAlg& L, const std::vector<Vec>& U, const std::vector<Vec>& V) {
    std::vector<Vec> gens;
    for (const Vec& u : U)
        for (const Vec& v : V) {
            Vec w = L.bracket(u, v);
            if (!is_zero(w)) gens.push_back(std::move(w));
        }
    return span_basis(gens);
}

inline std::vector<Vec> full_basis(std::size_t n) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        b.push_back(std::move(e));
    }
    return b;
}

}  // namespace detail

/// Dimensions of the derived series g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …, starting
/// with dim g, until the dimension hits 0 or stabilizes (the stable value is
/// reported once more so stabilization is visible).
inline std::vector<std::size_t> derived_series_dims(const LieAlg& L) {
    std::vector<std::size_t> dims{L.dim()};
    std::vector<Vec> cur = detail::full_basis(L.dim());
    while (true) {
        std::vector<Vec> next = detail::bracket_span(L, cur, cur);
        dims.push_back(next.size());
        if (next.size() == 0 || next.size() == cur.size()) break;
        cur = std::move(next);
    }
    return dims;
}

/// Dimensions of the lower central series g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …, same
/// termination rule as derived_series_dims.
inline std::vector<std::size_t> lower_central_series_dims(const LieAlg& L) {
    std::vector<std::size_t> dims{L.dim()};
    std::vector<Vec> full = detail::full_basis(L.dim());
    std::vector<Vec> cur = full;
    while (true) {
        std::vector<Vec> next = detail::bracket_span(L, full, cur);
        dims.push_back(next.size());
        if (next.size() == 0 || next.size() == cur.size()) break;
        cur = std::move(next);
    }
    return dims;
}

[[nodiscard]] inline bool is_solvable(const LieAlg& L) { return derived_series_dims(L).back() == 0; }
[[nodiscard]] inline bool is_nilpotent(const LieAlg& L) { return lower_central_series_dims(L).back() == 0; }

/// Unimodular iff tr ad_X = 0 for every basis X.
[[nodiscard]] inline bool is_unimodular(const LieAlg& L) {
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Mat a = L.ad_basis(i);
        Rat tr(0);
        for (std::size_t k = 0; k < L.dim(); ++k) tr += a.at(k, k);
        if (!is_zero(tr)) return false;
    }
    return true;
}

/// Killing form K(X, Y) = tr(ad_X ad_Y) on the defining basis.
inline Mat killing_form(const LieAlg& L) {
    std::size_t n = L.dim();
    std::vector<Mat> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
    Mat K(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Mat p = ads[i] * ads[j];
            Rat tr(0);
            for (std::size_t k = 0; k < n; ++k) tr += p.at(k, k);
            K.at(i, j) = tr;
            K.at(j, i) = tr;
        }
    return K;
}

/// Structure constants in the basis E_i = sum_j P[j][i] e_j. P must be
/// invertible; throws otherwise.
inline LieAlg change_basis(const LieAlg& L, const Mat& P) {
    std::size_t n = L.dim();
    if (P.rows() != n || P.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
    auto Pinv = inverse(P);
    if (!Pinv) throw std::invalid_argument("change_basis: singular matrix");
    LieAlg out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec w = L.bracket(P.col(i), P.col(j));  // in the old basis
            out.set_bracket(i, j, *Pinv * w);       // re-expressed in the new basis
        }
    return out;
}

/// Does P witness L1 ≅ L2, i.e. is change_basis(L1, P) exactly L2's table?
/// (Columns of P are L2's basis vectors written in L1's basis.)
inline bool verify_isomorphism(const LieAlg& L1, const LieAlg& L2, const Mat& P) {
    if (L1.dim() != L2.dim()) return false;
    if (P.rows() != L1.dim() || P.cols() != L1.dim()) return false;
    if (is_zero(det(P))) return false;
    return change_basis(L1, P) == L2;
}

inline LieAlg direct_sum(const LieAlg& A, const LieAlg& B) {
    std::size_t n = A.dim(), m = B.dim();
    LieAlg out(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec v(n + m, Rat(0));
            Vec br = A.bracket_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) v[k] = br[k];
            out.set_bracket(i, j, std::move(v));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec v(n + m, Rat(0));
            Vec br = B.bracket_basis(i, j);
            for (std::size_t k = 0; k < m; ++k) v[n + k] = br[k];
            out.set_bracket(n + i, n + j, std::move(v));
        }
    return out;
}

/// Abelian R^k acting on h: basis (X_1..X_k, h-basis), [X_a, Y] = actions[a]·Y
/// for Y in h, [X_a, X_b] = 0. Each action must be a derivation of h and the
/// actions must commute pairwise; violations throw with the offending pair named.
inline LieAlg semidirect_product(const LieAlg& h, const std::vector<Mat>& actions) {
    std::size_t m = h.dim(), k = actions.size();
    for (std::size_t a = 0; a < k; ++a) {
        if (actions[a].rows() != m || actions[a].cols() != m)
            throw std::invalid_argument("semidirect_product: action " + std::to_string(a + 1) + " has wrong shape");
        // derivation: D[x,y] = [Dx,y] + [x,Dy] on basis pairs
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                Vec lhs = actions[a] * h.bracket_basis(i, j);
                Vec rhs = h.bracket(actions[a].col(i), detail::full_basis(m)[j]) +
                          h.bracket(detail::full_basis(m)[i], actions[a].col(j));
                if (!(is_zero(lhs - rhs)))
                    throw std::invalid_argument("semidirect_product: action " + std::to_string(a + 1) +
                                                " is not a derivation on pair (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ")");
            }
    }
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            if (!((actions[a] * actions[b] - actions[b] * actions[a]).is_zero_mat()))
                throw std::invalid_argument("semidirect_product: actions " + std::to_string(a + 1) + " and " +
                                            std::to_string(b + 1) + " do not commute");
    LieAlg out(k + m);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < m; ++j) {
            Vec v(k + m, Rat(0));
            Vec img = actions[a].col(j);
            for (std::size_t t = 0; t < m; ++t) v[k + t] = img[t];
            out.set_bracket(a, k + j, std::move(v));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec v(k + m, Rat(0));
            Vec br = h.bracket_basis(i, j);
            for (std::size_t t = 0; t < m; ++t) v[k + t] = br[t];
            out.set_bracket(k + i, k + j, std::move(v));
        }
    return out;
}

/// Isomorphism-invariant fingerprint. Distinct profiles certify that two
/// algebras are not isomorphic; equal profiles certify nothing.
struct Profile {
    std::size_t dim = 0;
    std::size_t dim_center = 0;
    std::vector<std::size_t> derived_dims;
    std::vector<std::size_t> lower_central_dims;
    bool solvable = false;
    bool nilpotent = false;
    bool unimodular = false;
    std::size_t killing_rank = 0;
    Signature killing_signature;

    friend bool operator==(const Profile&, const Profile&) = default;
};

inline Profile invariant_profile(const LieAlg& L) {
    Profile p;
    p.dim = L.dim();
    p.dim_center = center(L).size();
    p.derived_dims = derived_series_dims(L);
    p.lower_central_dims = lower_central_series_dims(L);
    p.solvable = p.derived_dims.back() == 0;
    p.nilpotent = p.lower_central_dims.back() == 0;
    p.unimodular = is_unimodular(L);
    Mat K = killing_form(L);
    p.killing_rank = rank(K);
    p.killing_signature = symmetric_signature(K);
    return p;
}

}  // namespace sasakian
