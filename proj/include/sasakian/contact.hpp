#pragma once

/// @file contact.hpp
/// Almost contact metric structures (Φ, α, ξ, g) on a Lie algebra, and the
/// exact verification chain: almost-contact axioms → metric compatibility →
/// contact-metric condition dα = 2ω → normality N_Φ = −dα ⊗ ξ.
///
/// The fundamental 2-form convention is ω(X, Y) = g(ΦX, Y). Every check is an
/// exact rational identity; a report either passes or names the first violated
/// axiom together with the basis pair that witnesses the violation.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forms.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

/// Almost contact metric structure. Construction enforces only shape sanity
/// and that g is symmetric positive definite (degenerate metrics are rejected
/// here, not inside the verify ops); all contact axioms remain questions for
/// verify_* to answer.
struct ACMS {
    Mat phi;      // endomorphism; column j is Φ(e_j)
    KForm alpha;  // 1-form
    Vec xi;
    Mat g;  // metric tensor, symmetric positive definite

    ACMS(Mat phi_, KForm alpha_, Vec xi_, Mat g_)
        : phi(std::move(phi_)), alpha(std::move(alpha_)), xi(std::move(xi_)), g(std::move(g_)) {
        std::size_t n = xi.size();
        if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("ACMS: phi shape mismatch");
        if (alpha.degree() != 1 || alpha.dim() != n) throw std::invalid_argument("ACMS: alpha must be a 1-form");
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("ACMS: metric shape mismatch");
        if (!is_positive_definite(g)) throw std::invalid_argument("ACMS: metric is not positive definite");
    }

    [[nodiscard]] std::size_t dim() const { return xi.size(); }

    /// Fundamental 2-form as a matrix: ω(e_i, e_j) = g(Φe_i, e_j) = (Φᵀ g)_{ij}.
    [[nodiscard]] Mat omega_matrix() const { return phi.transpose() * g; }
};

/// Transport a structure through the basis change E_i = Σ_j P[j][i] e_j
/// (same orientation as change_basis): an isomorphism carries Sasakian
/// structures to Sasakian structures, and this is the exact formula for it.
inline ACMS transport_acms(const ACMS& S, const Mat& P) {
    auto Pinv = inverse(P);
    if (!Pinv) throw std::invalid_argument("transport_acms: singular matrix");
    Vec av = one_form_vec(S.alpha);
    Vec new_alpha(P.cols(), Rat(0));
    for (std::size_t i = 0; i < P.cols(); ++i) {
        for (std::size_t j = 0; j < P.rows(); ++j) new_alpha[i] += av[j] * P.at(j, i);
    }
    return ACMS(*Pinv * S.phi * P, one_form(new_alpha), *Pinv * S.xi, P.transpose() * S.g * P);
}

/// Nijenhuis torsion of Φ on two coefficient vectors:
/// N_Φ(X, Y) = Φ²[X,Y] + [ΦX, ΦY] − Φ[ΦX, Y] − Φ[X, ΦY].
inline Vec nijenhuis(const LieAlg& L, const Mat& phi, const Vec& x, const Vec& y) {
    Vec br = L.bracket(x, y);
    return phi * (phi * br) + L.bracket(phi * x, phi * y) - phi * L.bracket(phi * x, y) -
           phi * L.bracket(x, phi * y);
}

inline Vec nijenhuis_basis(const LieAlg& L, const Mat& phi, std::size_t i, std::size_t j) {
    Vec ei(L.dim(), Rat(0)), ej(L.dim(), Rat(0));
    ei[i] = 1;
    ej[j] = 1;
    return nijenhuis(L, phi, ei, ej);
}

/// Verification verdict. Flags are cumulative conditions; `sasakian()` is
/// their conjunction. `first_failure` pinpoints the first violated identity.
struct SasakiReport {
    bool almost_contact = false;
    bool compatible = false;
    bool contact_metric = false;
    bool normal = false;
    std::string first_failure;  // empty when everything passes

    [[nodiscard]] bool sasakian() const { return almost_contact && compatible && contact_metric && normal; }
};

namespace detail {
inline std::string pair_str(std::size_t i, std::size_t j) {
    return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")";
}
}  // namespace detail

/// Almost-contact axioms only (no bracket involved): α(ξ) = 1,
/// Φ² = −I + ξ⊗α, and the derived identities Φξ = 0, α∘Φ = 0.
inline SasakiReport verify_almost_contact(const ACMS& S) {
    SasakiReport r;
    std::size_t n = S.dim();
    Vec av = one_form_vec(S.alpha);
    Rat axi(0);
    for (std::size_t i = 0; i < n; ++i) axi += av[i] * S.xi[i];
    if (!(axi == 1)) {
        r.first_failure = "almost_contact: alpha(xi) = " + rat_str(axi) + ", expected 1";
        return r;
    }
    Mat expect(n, n);  // −I + ξ⊗α
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) expect.at(i, j) = S.xi[i] * av[j] - Rat(i == j ? 1 : 0);
    Mat phi2 = S.phi * S.phi;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(phi2.at(i, j) == expect.at(i, j))) {
                r.first_failure = "almost_contact: (Phi^2)(e" + std::to_string(j + 1) + ") has e" +
                                  std::to_string(i + 1) + " coefficient " + rat_str(phi2.at(i, j)) +
                                  ", expected " + rat_str(expect.at(i, j));
                return r;
            }
    Vec phixi = S.phi * S.xi;
    if (!is_zero(phixi)) {
        r.first_failure = "almost_contact: Phi(xi) != 0";
        return r;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rat aphi(0);
        for (std::size_t i = 0; i < n; ++i) aphi += av[i] * S.phi.at(i, j);
        if (!is_zero(aphi)) {
            r.first_failure = "almost_contact: alpha(Phi e" + std::to_string(j + 1) + ") = " + rat_str(aphi);
            return r;
        }
    }
    r.almost_contact = true;
    return r;
}

/// Full Sasakian verification on (L, S). Checks, in order:
/// almost-contact; compatibility g(ΦX,ΦY) = g(X,Y) − α(X)α(Y);
/// contact-metric dα = 2ω as bilinear forms; normality N_Φ(X,Y) = −dα(X,Y)ξ.
inline SasakiReport verify_sasakian(const LieAlg& L, const ACMS& S) {
    if (L.dim() != S.dim()) throw std::invalid_argument("verify_sasakian: dimension mismatch");
    SasakiReport r = verify_almost_contact(S);
    if (!r.almost_contact) return r;
    std::size_t n = L.dim();
    Vec av = one_form_vec(S.alpha);

    Mat lhs = S.phi.transpose() * S.g * S.phi;  // g(Φe_i, Φe_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat want = S.g.at(i, j) - av[i] * av[j];
            if (!(lhs.at(i, j) == want)) {
                r.first_failure = "compatible: g(Phi e_i, Phi e_j) at " + detail::pair_str(i, j) + " is " +
                                  rat_str(lhs.at(i, j)) + ", expected " + rat_str(want);
                return r;
            }
        }
    r.compatible = true;

    KForm da = ce_d(L, S.alpha);
    Mat w = S.omega_matrix();  // ω(e_i,e_j) = g(Φe_i, e_j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat lhs_ij = (i == j) ? Rat(0) : da.eval_basis({i, j});
            if (!(lhs_ij == 2 * w.at(i, j))) {
                r.first_failure = "contact_metric: dalpha = 2*omega fails at " + detail::pair_str(i, j) +
                                  ": dalpha = " + rat_str(lhs_ij) + ", 2*omega = " + rat_str(2 * w.at(i, j));
                return r;
            }
        }
    r.contact_metric = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec got = nijenhuis_basis(L, S.phi, i, j);
            Vec want = (-da.eval_basis({i, j})) * S.xi;
            if (!(is_zero(got - want))) {
                r.first_failure = "normal: N_Phi at " + detail::pair_str(i, j) + " differs from -dalpha(.,.)xi";
                return r;
            }
        }
    r.normal = true;
    return r;
}

/// Structure of ad_ξ relative to (Φ, g): kernel/image bases, commutation with
/// Φ, symmetry of ad_ξ∘Φ, skew-adjointness, and g-orthogonality of ker ⊕ im.
struct AdXiAnalysis {
    Mat ad_xi;
    bool commutes_with_phi = false;
    bool phi_composite_symmetric = false;  // g((ad_ξ∘Φ)X, Y) = g(X, (ad_ξ∘Φ)Y)
    bool skew_adjoint = false;             // g(ad_ξ X, Y) = −g(X, ad_ξ Y)
    std::vector<Vec> kernel_basis;
    std::vector<Vec> image_basis;
    bool orthogonal_split = false;  // ker ⊥_g im and dims add up
};

inline AdXiAnalysis adxi_analysis(const LieAlg& L, const ACMS& S) {
    AdXiAnalysis a;
    a.ad_xi = L.ad(S.xi);
    a.commutes_with_phi = (a.ad_xi * S.phi - S.phi * a.ad_xi).is_zero_mat();
    Mat comp = a.ad_xi * S.phi;
    a.phi_composite_symmetric = (comp.transpose() * S.g == S.g * comp);
    a.skew_adjoint = (a.ad_xi.transpose() * S.g + S.g * a.ad_xi).is_zero_mat();
    a.kernel_basis = kernel(a.ad_xi);
    // image = row space of the transpose, in echelon normalization
    a.image_basis = row_space_basis(a.ad_xi.transpose());
    bool ortho = a.kernel_basis.size() + a.image_basis.size() == L.dim();
    for (const Vec& k : a.kernel_basis)
        for (const Vec& im : a.image_basis) {
            Rat ip(0);
            for (std::size_t i = 0; i < L.dim(); ++i)
                for (std::size_t j = 0; j < L.dim(); ++j) ip += k[i] * S.g.at(i, j) * im[j];
            if (!is_zero(ip)) ortho = false;
        }
    a.orthogonal_split = ortho;
    return a;
}

/// Restriction of (L, S) to ker ad_ξ. Requires ker ad_ξ to be a subalgebra
/// closed under Φ; throws naming the offending pair otherwise. The returned
/// pair is expressed in the echelon kernel basis, with the structure restricted.
inline std::pair<LieAlg, ACMS> kernel_subalgebra(const LieAlg& L, const ACMS& S) {
    std::vector<Vec> K = kernel(L.ad(S.xi));
    std::size_t m = K.size();
    if (m == 0) throw std::invalid_argument("kernel_subalgebra: ad_xi has trivial kernel");
    Mat B(L.dim(), m);  // columns = basis of the subspace
    for (std::size_t j = 0; j < m; ++j) B.set_col(j, K[j]);
    auto coords = [&](const Vec& v) -> Vec {
        auto x = solve_linear(B, v);
        if (!x) throw std::invalid_argument("kernel_subalgebra: vector escapes the subspace");
        return *x;
    };
    LieAlg sub(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Vec w = L.bracket(K[i], K[j]);
            if (!in_span(K, w))
                throw std::invalid_argument("kernel_subalgebra: not closed under bracket at pair (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            sub.set_bracket(i, j, coords(w));
        }
    Mat phi_sub(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        Vec w = S.phi * K[j];
        if (!in_span(K, w))
            throw std::invalid_argument("kernel_subalgebra: Phi does not preserve ker ad_xi at column " +
                                        std::to_string(j + 1));
        phi_sub.set_col(j, coords(w));
    }
    Vec av = one_form_vec(S.alpha);
    Vec alpha_sub(m, Rat(0));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < L.dim(); ++i) alpha_sub[j] += av[i] * K[j][i];
    Mat g_sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rat v(0);
            for (std::size_t p = 0; p < L.dim(); ++p)
                for (std::size_t q = 0; q < L.dim(); ++q) v += K[i][p] * S.g.at(p, q) * K[j][q];
            g_sub.at(i, j) = v;
        }
    return {sub, ACMS(phi_sub, one_form(alpha_sub), coords(S.xi), g_sub)};
}

/// Parity obstruction for extending a contact form to an invariant Sasakian
/// structure: computes ξ = reeb(L, α) and the subspace ker ad_ξ ∩ ker α, which
/// any compatible Φ must preserve; odd dimension obstructs.
struct DimObstruction {
    Vec xi;
    std::vector<Vec> subspace_basis;  // ker ad_ξ ∩ ker α, echelon normalization
    bool obstructed = false;
};

inline DimObstruction sasaki_dim_obstruction(const LieAlg& L, const KForm& alpha) {
    auto xi = reeb(L, alpha);
    if (!xi) throw std::invalid_argument("sasaki_dim_obstruction: alpha is not contact (no Reeb vector)");
    DimObstruction out;
    out.xi = *xi;
    std::size_t n = L.dim();
    Mat A = L.ad(out.xi);
    Mat stacked(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked.at(i, j) = A.at(i, j);
    Vec av = one_form_vec(alpha);
    for (std::size_t j = 0; j < n; ++j) stacked.at(n, j) = av[j];
    out.subspace_basis = kernel(stacked);
    out.obstructed = out.subspace_basis.size() % 2 == 1;
    return out;
}

}  // namespace sasakian
