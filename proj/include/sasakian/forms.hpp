#pragma once

/// @file forms.hpp
/// Left-invariant exterior forms with exact rational coefficients, indexed by
/// strictly increasing basis tuples, plus the Chevalley–Eilenberg differential.
///
/// Sign conventions, fixed once and used everywhere:
///   * evaluation is the unnormalized determinant convention,
///     e^i ∧ e^j (e_k, e_l) = δ_ik δ_jl − δ_il δ_jk;
///   * dβ(X, Y) = −β([X, Y]) on 1-forms, so a structure tuple entry
///     de^5 = e^{12} decodes as [e_1, e_2] = −e_5;
///   * on k-forms, dφ(X_0..X_k) = Σ_{a<b} (−1)^{a+b} φ([X_a,X_b], X_0..â..b̂..X_k).
/// d ∘ d = 0 holds iff the underlying table satisfies Jacobi — that equivalence
/// is a theorem the test suite checks on random tables, not an assumption here.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

class KForm {
public:
    using Key = std::vector<std::size_t>;  // strictly increasing 0-based indices

    KForm() = default;
    KForm(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {
        if (degree == 0) throw std::invalid_argument("KForm: degree 0 is excluded");
    }

    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::map<Key, Rat>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero_form() const { return terms_.empty(); }

    /// Add c · e^{indices}. Indices may come unsorted; the sorting sign is
    /// applied, repeated indices annihilate the term. Zero coefficients are
    /// never stored, so equality is plain map equality.
    void add_term(Key indices, Rat c) {
        if (indices.size() != degree_) throw std::invalid_argument("KForm::add_term: wrong arity");
        for (std::size_t i : indices)
            if (i >= dim_) throw std::invalid_argument("KForm::add_term: index out of range");
        int sign = sort_sign(indices);
        if (sign == 0 || is_zero(c)) return;
        Rat& slot = terms_[indices];
        slot += Rat(sign) * c;
        if (is_zero(slot)) terms_.erase(indices);
    }

    /// Coefficient of the (sorted) basis monomial e^{indices}.
    [[nodiscard]] Rat coeff(const Key& sorted_indices) const {
        auto it = terms_.find(sorted_indices);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    /// Evaluate on a tuple of basis vectors (possibly unsorted / repeated).
    [[nodiscard]] Rat eval_basis(Key indices) const {
        if (indices.size() != degree_) throw std::invalid_argument("KForm::eval_basis: wrong arity");
        int sign = sort_sign(indices);
        if (sign == 0) return Rat(0);
        return Rat(sign) * coeff(indices);
    }

    /// Full multilinear evaluation on coefficient vectors.
    [[nodiscard]] Rat eval(const std::vector<Vec>& args) const {
        if (args.size() != degree_) throw std::invalid_argument("KForm::eval: wrong arity");
        for (const Vec& v : args)
            if (v.size() != dim_) throw std::invalid_argument("KForm::eval: vector size mismatch");
        Rat total(0);
        for (const auto& [key, c] : terms_) {
            // determinant of the degree×degree matrix M[a][b] = args[b][key[a]]
            Mat M(degree_, degree_);
            for (std::size_t a = 0; a < degree_; ++a)
                for (std::size_t b = 0; b < degree_; ++b) M.at(a, b) = args[b][key[a]];
            total += c * det(M);
        }
        return total;
    }

    friend KForm operator+(const KForm& a, const KForm& b) {
        if (a.degree_ != b.degree_ || a.dim_ != b.dim_) throw std::invalid_argument("KForm +: shape mismatch");
        KForm r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c);
        return r;
    }

    friend KForm operator*(const Rat& c, const KForm& f) {
        KForm r(f.degree_, f.dim_);
        if (is_zero(c)) return r;
        for (const auto& [key, v] : f.terms_) r.terms_[key] = c * v;
        return r;
    }

    friend KForm operator-(const KForm& a, const KForm& b) { return a + rat(-1) * b; }

    friend bool operator==(const KForm& a, const KForm& b) {
        return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    /// Human form, e.g. "2*e^{12} + 2*e^{34}"; "0" for the zero form.
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (!(c == 1)) out += rat_str(c) + "*";
            out += "e^{";
            for (std::size_t i : key) out += std::to_string(i + 1);
            out += "}";
        }
        return out;
    }

private:
    /// Sorts `v` in place, returning the permutation sign, or 0 on a repeat.
    static int sort_sign(Key& v) {
        int sign = 1;
        for (std::size_t i = 1; i < v.size(); ++i)
            for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
                if (v[j - 1] == v[j]) return 0;
                std::swap(v[j - 1], v[j]);
                sign = -sign;
            }
        return sign;
    }

    std::size_t degree_ = 1;
    std::size_t dim_ = 0;
    std::map<Key, Rat> terms_;
};

/// 1-form with given coefficients: alpha = sum c_i e^i.
inline KForm one_form(const Vec& c) {
    KForm f(1, c.size());
    for (std::size_t i = 0; i < c.size(); ++i) f.add_term({i}, c[i]);
    return f;
}

/// Coefficient vector of a 1-form.
inline Vec one_form_vec(const KForm& f) {
    if (f.degree() != 1) throw std::invalid_argument("one_form_vec: degree must be 1");
    Vec v(f.dim(), Rat(0));
    for (const auto& [key, c] : f.terms()) v[key[0]] = c;
    return v;
}

/// 2-form from an antisymmetric coefficient matrix w(e_i, e_j) = M[i][j].
/// Throws if M is not antisymmetric — a symmetric contamination would silently
/// change meaning under the increasing-tuple storage.
inline KForm two_form_from_matrix(const Mat& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("two_form_from_matrix: not square");
    KForm f(2, M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (!is_zero(M.at(i, i))) throw std::invalid_argument("two_form_from_matrix: nonzero diagonal");
        for (std::size_t j = i + 1; j < M.cols(); ++j) {
            if (!is_zero(M.at(i, j) + M.at(j, i))) throw std::invalid_argument("two_form_from_matrix: not antisymmetric");
            f.add_term({i, j}, M.at(i, j));
        }
    }
    return f;
}

/// Matrix M[i][j] = w(e_i, e_j) of a 2-form.
inline Mat two_form_matrix(const KForm& w) {
    if (w.degree() != 2) throw std::invalid_argument("two_form_matrix: degree must be 2");
    Mat M(w.dim(), w.dim());
    for (const auto& [key, c] : w.terms()) {
        M.at(key[0], key[1]) = c;
        M.at(key[1], key[0]) = -c;
    }
    return M;
}

inline KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    std::size_t deg = a.degree() + b.degree();
    if (deg > a.dim()) return KForm(deg, a.dim());  // degree overflow: zero form
    KForm r(deg, a.dim());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            KForm::Key key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.add_term(std::move(key), ca * cb);  // add_term supplies the shuffle sign
        }
    return r;
}

/// Chevalley–Eilenberg differential of φ with respect to the bracket table L.
inline KForm ce_d(const LieAlg& L, const KForm& phi) {
    if (phi.dim() != L.dim()) throw std::invalid_argument("ce_d: dimension mismatch");
    std::size_t n = L.dim(), k = phi.degree();
    KForm out(k + 1, n);
    if (k + 1 > n) return out;
    // iterate over increasing (k+1)-tuples T
    KForm::Key T(k + 1);
    for (std::size_t i = 0; i <= k; ++i) T[i] = i;
    while (true) {
        Rat val(0);
        for (std::size_t a = 0; a <= k; ++a)
            for (std::size_t b = a + 1; b <= k; ++b) {
                Vec br = L.bracket_basis(T[a], T[b]);
                if (is_zero(br)) continue;
                KForm::Key rest;
                rest.reserve(k);
                rest.push_back(0);  // placeholder for the bracket slot
                for (std::size_t t = 0; t <= k; ++t)
                    if (t != a && t != b) rest.push_back(T[t]);
                Rat inner(0);
                for (std::size_t m = 0; m < n; ++m) {
                    if (is_zero(br[m])) continue;
                    rest[0] = m;
                    inner += br[m] * phi.eval_basis(rest);
                }
                int sign = ((a + b) % 2 == 0) ? 1 : -1;
                val += Rat(sign) * inner;
            }
        if (!is_zero(val)) out.add_term(T, val);
        // next increasing tuple
        std::size_t i = k + 1;
        while (i > 0) {
            --i;
            if (T[i] != n - (k + 1) + i) break;
            if (i == 0) return out;
        }
        ++T[i];
        for (std::size_t j = i + 1; j <= k; ++j) T[j] = T[j - 1] + 1;
    }
}

/// Coefficient of the volume form in α ∧ (dα)^n on a (2n+1)-dimensional
/// algebra; α is contact iff this is nonzero. Throws on even dimension.
inline Rat contact_coefficient(const LieAlg& L, const KForm& alpha) {
    if (alpha.degree() != 1) throw std::invalid_argument("contact_coefficient: alpha must be a 1-form");
    if (L.dim() % 2 == 0) throw std::invalid_argument("contact_coefficient: dimension must be odd");
    std::size_t n = (L.dim() - 1) / 2;
    KForm da = ce_d(L, alpha);
    KForm top = alpha;
    for (std::size_t i = 0; i < n; ++i) top = wedge(top, da);
    KForm::Key vol(L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i) vol[i] = i;
    return top.coeff(vol);
}

[[nodiscard]] inline bool is_contact(const LieAlg& L, const KForm& alpha) {
    return !is_zero(contact_coefficient(L, alpha));
}

/// Reeb vector of a contact form: the unique ξ with α(ξ) = 1 and dα(ξ, ·) = 0,
/// obtained by an exact linear solve. Returns nullopt when no unique solution
/// exists (i.e. α is not contact).
inline std::optional<Vec> reeb(const LieAlg& L, const KForm& alpha) {
    std::size_t n = L.dim();
    if (alpha.degree() != 1 || alpha.dim() != n) throw std::invalid_argument("reeb: alpha must be a 1-form on L");
    KForm da = ce_d(L, alpha);
    Mat A(n + 1, n);
    Vec b(n + 1, Rat(0));
    Vec av = one_form_vec(alpha);
    for (std::size_t j = 0; j < n; ++j) A.at(0, j) = av[j];
    b[0] = 1;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) A.at(1 + r, i) = da.eval_basis({i, r});  // dα(ξ, e_r) = 0
    auto x = solve_linear(A, b);
    if (!x) return std::nullopt;
    // uniqueness: the homogeneous system must have trivial kernel
    if (!kernel(A).empty()) return std::nullopt;
    return x;
}

}  // namespace sasakian
