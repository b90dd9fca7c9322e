#pragma once

/// @file curvature.hpp
/// Levi-Civita connection, curvature tensor and Ricci form for left-invariant
/// metrics, all exact. On a Lie algebra with inner product g the Koszul
/// formula collapses to
///   2 g(∇_X Y, Z) = g([X,Y], Z) − g([Y,Z], X) + g([Z,X], Y)
/// and the curvature convention is R(X,Y) = ∇_X∇_Y − ∇_Y∇_X − ∇_{[X,Y]},
/// signed so that on a Sasakian algebra R(X,Y)ξ = α(Y)X − α(X)Y holds and
/// Ric(ξ, ξ) = dim − 1.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contact.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

/// Connection coefficients: nabla(i, j) = ∇_{e_i} e_j as a coefficient vector.
class Connection {
public:
    Connection(std::size_t dim) : dim_(dim), gamma_(dim * dim, Vec(dim, Rat(0))) {}

    [[nodiscard]] std::size_t dim() const { return dim_; }
    Vec& at(std::size_t i, std::size_t j) { return gamma_.at(i * dim_ + j); }
    [[nodiscard]] const Vec& at(std::size_t i, std::size_t j) const { return gamma_.at(i * dim_ + j); }

    /// ∇_X Y for constant-coefficient (left-invariant) fields.
    [[nodiscard]] Vec nabla(const Vec& x, const Vec& y) const {
        Vec r(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (is_zero(x[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(y[j])) continue;
                Rat c = x[i] * y[j];
                const Vec& g = at(i, j);
                for (std::size_t k = 0; k < dim_; ++k) r[k] += c * g[k];
            }
        }
        return r;
    }

private:
    std::size_t dim_;
    std::vector<Vec> gamma_;
};

/// Levi-Civita connection of (L, g) by the Koszul formula. g must be symmetric
/// positive definite.
inline Connection levi_civita(const LieAlg& L, const Mat& g) {
    std::size_t n = L.dim();
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("levi_civita: metric shape mismatch");
    if (!is_positive_definite(g)) throw std::invalid_argument("levi_civita: metric is not positive definite");
    Mat ginv = *inverse(g);
    auto ip = [&](const Vec& a, std::size_t l) {  // g(a, e_l)
        Rat v(0);
        for (std::size_t p = 0; p < n; ++p) v += a[p] * g.at(p, l);
        return v;
    };
    Connection conn(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec rhs(n, Rat(0));  // rhs[l] = 2 g(∇_i e_j, e_l)
            for (std::size_t l = 0; l < n; ++l)
                rhs[l] = ip(L.bracket_basis(i, j), l) - ip(L.bracket_basis(j, l), i) + ip(L.bracket_basis(l, i), j);
            conn.at(i, j) = ginv * (rat(1, 2) * rhs);
        }
    return conn;
}

/// Full curvature tensor: r(i, j, k) = R(e_i, e_j) e_k as a coefficient vector.
class Curvature {
public:
    Curvature(const LieAlg& L, const Connection& c) : dim_(L.dim()), r_(dim_ * dim_ * dim_, Vec(dim_, Rat(0))) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Vec ei(dim_, Rat(0)), ej(dim_, Rat(0));
                ei[i] = 1;
                ej[j] = 1;
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec ek(dim_, Rat(0));
                    ek[k] = 1;
                    Vec v = c.nabla(ei, c.at(j, k)) - c.nabla(ej, c.at(i, k)) - c.nabla(L.bracket_basis(i, j), ek);
                    at(i, j, k) = v;
                    at(j, i, k) = -v;
                }
            }
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Vec& r(std::size_t i, std::size_t j, std::size_t k) const {
        return r_.at((i * dim_ + j) * dim_ + k);
    }

    /// R(X, Y) Z by multilinear extension.
    [[nodiscard]] Vec eval(const Vec& x, const Vec& y, const Vec& z) const {
        Vec out(dim_, Rat(0));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (is_zero(x[i]) || is_zero(y[j])) continue;
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (is_zero(z[k])) continue;
                    Rat c = x[i] * y[j] * z[k];
                    const Vec& v = r(i, j, k);
                    for (std::size_t l = 0; l < dim_; ++l) out[l] += c * v[l];
                }
            }
        return out;
    }

private:
    Vec& at(std::size_t i, std::size_t j, std::size_t k) { return r_.at((i * dim_ + j) * dim_ + k); }

    std::size_t dim_;
    std::vector<Vec> r_;
};

using RicMat = Mat;

/// Ricci tensor Ric(X, Y) = tr(Z ↦ R(Z, X) Y). On an orthonormal frame this
/// is the usual Σ_i g(R(E_i, X) Y, E_i); the trace form is basis-free and
/// stays in Q for every rational positive-definite metric.
inline RicMat ricci(const LieAlg& L, const Mat& g) {
    std::size_t n = L.dim();
    Curvature R(L, levi_civita(L, g));
    RicMat ric(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Rat tr(0);
            for (std::size_t i = 0; i < n; ++i) tr += R.r(i, j, k)[i];
            ric.at(j, k) = tr;
        }
    return ric;
}

/// The two curvature identities every Sasakian structure must satisfy:
/// R(X, Y)ξ = α(Y)X − α(X)Y on all basis pairs, and Ric(ξ, ·) = (dim−1)·α.
struct SasakiCurvatureCheck {
    bool reeb_curvature = false;
    bool reeb_ricci = false;
    std::string first_failure;
    [[nodiscard]] bool pass() const { return reeb_curvature && reeb_ricci; }
};

inline SasakiCurvatureCheck check_sasaki_curvature_identity(const LieAlg& L, const ACMS& S) {
    SasakiCurvatureCheck out;
    std::size_t n = L.dim();
    Curvature R(L, levi_civita(L, S.g));
    Vec av = one_form_vec(S.alpha);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
            Vec got(n, Rat(0));
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(S.xi[k])) continue;
                const Vec& v = R.r(i, j, k);
                for (std::size_t l = 0; l < n; ++l) got[l] += S.xi[k] * v[l];
            }
            Vec want(n, Rat(0));
            want[i] += av[j];
            want[j] -= av[i];
            if (!is_zero(got - want)) {
                out.first_failure = "R(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                    ")xi differs from alpha(Y)X - alpha(X)Y";
                ok = false;
            }
        }
    out.reeb_curvature = ok;
    if (!ok) return out;
    RicMat ric = ricci(L, S.g);
    Vec ric_xi(n, Rat(0));  // Ric(ξ, e_j)
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) ric_xi[j] += S.xi[i] * ric.at(i, j);
    Vec want = Rat(static_cast<long>(n - 1)) * av;
    if (is_zero(ric_xi - want)) {
        out.reeb_ricci = true;
    } else {
        out.first_failure = "Ric(xi, .) differs from (dim-1) * alpha";
    }
    return out;
}

/// Solve Ric = λ g + ν α⊗α exactly. Returns the unique (λ, ν) when the
/// overdetermined linear system is consistent, nullopt otherwise.
inline std::optional<std::pair<Rat, Rat>> alpha_einstein(const RicMat& ric, const Mat& g, const KForm& alpha) {
    std::size_t n = g.rows();
    if (ric.rows() != n || ric.cols() != n || alpha.dim() != n)
        throw std::invalid_argument("alpha_einstein: shape mismatch");
    Vec av = one_form_vec(alpha);
    std::size_t m = n * (n + 1) / 2;
    Mat A(m, 2);
    Vec b(m, Rat(0));
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j, ++r) {
            A.at(r, 0) = g.at(i, j);
            A.at(r, 1) = av[i] * av[j];
            b[r] = ric.at(i, j);
        }
    auto x = solve_linear(A, b);
    if (!x) return std::nullopt;
    if (!kernel(A).empty()) return std::nullopt;  // (λ, ν) must be pinned down
    return std::make_pair((*x)[0], (*x)[1]);
}

}  // namespace sasakian
