#pragma once

/// @file kahler.hpp
/// Kähler linear data on even-dimensional Lie algebras, the quotient of a
/// Sasakian algebra by its Reeb direction, and the inverse central-extension
/// construction. Conventions match contact.hpp: ω(X, Y) = g(JX, Y), the
/// quotient two-form is ω = ½ dα restricted to ker α, and the extension
/// declares d(e^{2n+1}) = 2ω, i.e. [X, Y] = [X, Y]_h − 2ω(X, Y) ξ with the
/// new center ξ appended last.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contact.hpp"
#include "forms.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

/// Almost-Hermitian package (J, ω, g) on a Lie algebra of even dimension.
struct KahlerStruct {
    Mat J;
    KForm omega;
    Mat g;

    KahlerStruct(Mat J_, KForm omega_, Mat g_) : J(std::move(J_)), omega(std::move(omega_)), g(std::move(g_)) {
        std::size_t n = J.rows();
        if (n == 0 || n % 2 != 0) throw std::invalid_argument("KahlerStruct: dimension must be even and positive");
        if (J.cols() != n || g.rows() != n || g.cols() != n || omega.dim() != n || omega.degree() != 2)
            throw std::invalid_argument("KahlerStruct: shape mismatch");
        if (g != g.transpose() || !is_positive_definite(g))
            throw std::invalid_argument("KahlerStruct: metric must be symmetric positive definite");
    }

    [[nodiscard]] std::size_t dim() const { return J.rows(); }
};

struct KahlerReport {
    bool almost_complex = false;   ///< J² = −I
    bool compatible = false;       ///< g(JX, JY) = g(X, Y)
    bool omega_consistent = false; ///< ω(X, Y) = g(JX, Y)
    bool integrable = false;       ///< N_J = 0
    bool closed = false;           ///< dω = 0
    std::string first_failure;

    [[nodiscard]] bool kahler() const {
        return almost_complex && compatible && omega_consistent && integrable && closed;
    }
};

inline KahlerReport verify_kahler(const LieAlg& L, const KahlerStruct& K) {
    KahlerReport rep;
    std::size_t n = K.dim();
    if (L.dim() != n) throw std::invalid_argument("verify_kahler: dimension mismatch");
    auto fail = [&](const std::string& msg) { rep.first_failure = msg; };

    if (K.J * K.J == Rat(-1) * Mat::identity(n)) {
        rep.almost_complex = true;
    } else {
        fail("J*J is not -I");
        return rep;
    }
    if (K.J.transpose() * K.g * K.J == K.g) {
        rep.compatible = true;
    } else {
        fail("g(JX, JY) differs from g(X, Y)");
        return rep;
    }
    if (two_form_matrix(K.omega) == K.J.transpose() * K.g) {
        rep.omega_consistent = true;
    } else {
        fail("omega(X, Y) differs from g(JX, Y)");
        return rep;
    }
    bool integ = true;
    for (std::size_t i = 0; i < n && integ; ++i)
        for (std::size_t j = i + 1; j < n && integ; ++j)
            if (!is_zero(nijenhuis_basis(L, K.J, i, j))) {
                fail("Nijenhuis tensor of J does not vanish at (e" + std::to_string(i + 1) + ", e" +
                     std::to_string(j + 1) + ")");
                integ = false;
            }
    rep.integrable = integ;
    if (!integ) return rep;
    if (ce_d(L, K.omega).is_zero_form()) {
        rep.closed = true;
    } else {
        fail("omega is not closed");
    }
    return rep;
}

/// Quotient of a Sasakian algebra by ξ, modeled on the complement ker α.
struct QuotientResult {
    LieAlg h;                 ///< quotient algebra on the basis below
    KahlerStruct k;           ///< induced (J, ω, g)
    std::vector<Vec> basis;   ///< ker α basis vectors inside the original algebra
};

inline QuotientResult sasaki_quotient(const LieAlg& L, const ACMS& S) {
    std::size_t n = L.dim();
    Mat arow(1, n);
    Vec av = one_form_vec(S.alpha);
    for (std::size_t i = 0; i < n; ++i) arow.at(0, i) = av[i];
    std::vector<Vec> basis = kernel(arow);
    std::size_t m = basis.size();
    if (m + 1 != n) throw std::invalid_argument("sasaki_quotient: alpha must have one-dimensional annihilator line");

    Mat B(n, m);
    for (std::size_t c = 0; c < m; ++c) B.set_col(c, basis[c]);
    auto coords = [&](const Vec& v) {
        auto x = solve_linear(B, v);
        if (!x) throw std::invalid_argument("sasaki_quotient: vector does not lie in ker alpha");
        return *x;
    };
    auto pair_alpha = [&](const Vec& v) {
        Rat s(0);
        for (std::size_t i = 0; i < n; ++i) s += av[i] * v[i];
        return s;
    };

    LieAlg h(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec br = L.bracket(basis[i], basis[j]);
            Vec horiz = br - pair_alpha(br) * S.xi;
            h.set_bracket(i, j, coords(horiz));
        }

    Mat J(m, m);
    for (std::size_t c = 0; c < m; ++c) J.set_col(c, coords(S.phi * basis[c]));
    KForm da = ce_d(L, S.alpha);
    Mat om(m, m);
    Mat gq(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            om.at(i, j) = rat(1, 2) * da.eval({basis[i], basis[j]});
            Rat s(0);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) s += basis[i][p] * S.g.at(p, q) * basis[j][q];
            gq.at(i, j) = s;
        }
    return QuotientResult{std::move(h), KahlerStruct(std::move(J), two_form_from_matrix(om), std::move(gq)),
                          std::move(basis)};
}

/// One-dimensional central extension of (h, J, ω, g) by d(e^{2n+1}) = 2ω.
/// The new generator is appended last and becomes the Reeb vector.
inline std::pair<LieAlg, ACMS> central_extension(const LieAlg& h, const KahlerStruct& K) {
    std::size_t m = h.dim();
    if (K.dim() != m) throw std::invalid_argument("central_extension: dimension mismatch");
    std::size_t n = m + 1;
    LieAlg L(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec br(n, Rat(0));
            const Vec& hb = h.bracket_basis(i, j);
            for (std::size_t k = 0; k < m; ++k) br[k] = hb[k];
            br[m] = Rat(-2) * K.omega.eval_basis({i, j});
            L.set_bracket(i, j, br);
        }
    Mat phi(n, n);
    Mat g(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            phi.at(i, j) = K.J.at(i, j);
            g.at(i, j) = K.g.at(i, j);
        }
    g.at(m, m) = 1;
    Vec alpha(n, Rat(0)), xi(n, Rat(0));
    alpha[m] = 1;
    xi[m] = 1;
    return {std::move(L), ACMS(std::move(phi), one_form(alpha), std::move(xi), std::move(g))};
}

/// Check that an invertible P : (L1, K1) → (L2, K2) is simultaneously a Lie
/// algebra isomorphism and a biholomorphic isometry (then it matches ω too).
inline bool kahler_equivalence_witness(const LieAlg& L1, const KahlerStruct& K1, const LieAlg& L2,
                                       const KahlerStruct& K2, const Mat& P) {
    if (!verify_isomorphism(L1, L2, P)) return false;
    auto Pinv = inverse(P);
    if (!Pinv) return false;
    if (*Pinv * K1.J * P != K2.J) return false;
    if (P.transpose() * K1.g * P != K2.g) return false;
    return P.transpose() * two_form_matrix(K1.omega) * P == two_form_matrix(K2.omega);
}

}  // namespace sasakian
