#pragma once

/// @file json_io.hpp
/// @brief JSON encodings for the library's value types.
///
/// All rationals are encoded as canonical "p" / "p/q" strings (never floats),
/// indices are 1-based in the wire format, and nlohmann::json objects iterate
/// in sorted key order, so serialization is deterministic byte-for-byte.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "contact.hpp"
#include "forms.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace sasakian {

using Json = nlohmann::json;

// ---------------------------------------------------------------- rationals

[[nodiscard]] inline Json rat_to_json(const Rat& r) { return rat_str(r); }

[[nodiscard]] inline Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("rat_from_json: expected \"p/q\" string");
    return rat_parse(j.get<std::string>());
}

// ------------------------------------------------------------- vec / matrix

[[nodiscard]] inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const Rat& c : v) a.push_back(rat_to_json(c));
    return a;
}

[[nodiscard]] inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("vec_from_json: expected array");
    Vec v;
    v.reserve(j.size());
    for (const Json& c : j) v.push_back(rat_from_json(c));
    return v;
}

[[nodiscard]] inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
    return rows;
}

[[nodiscard]] inline Mat mat_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("mat_from_json: expected non-empty array");
    std::vector<Vec> rows;
    rows.reserve(j.size());
    for (const Json& r : j) rows.push_back(vec_from_json(r));
    return Mat::from_rows(rows);
}

// ------------------------------------------------------------- Lie algebras

/// {"dim": n, "labels": [...], "brackets": [[i, j, [c1..cn]], ...]} with
/// 1-based i < j and only nonzero brackets, sorted by (i, j).
[[nodiscard]] inline Json lie_to_json(const LieAlg& L) {
    Json out;
    out["dim"] = L.dim();
    out["labels"] = L.labels();
    Json rows = Json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Vec b = L.bracket_basis(i, j);
            if (is_zero(b)) continue;
            rows.push_back(Json::array({i + 1, j + 1, vec_to_json(b)}));
        }
    out["brackets"] = rows;
    return out;
}

[[nodiscard]] inline LieAlg lie_from_json(const Json& j) {
    if (!j.contains("dim")) throw std::invalid_argument("lie_from_json: missing dim");
    LieAlg L(j.at("dim").get<std::size_t>());
    if (j.contains("labels")) L.set_labels(j.at("labels").get<std::vector<std::string>>());
    for (const Json& row : j.at("brackets")) {
        if (!row.is_array() || row.size() != 3) throw std::invalid_argument("lie_from_json: malformed bracket row");
        std::size_t i = row.at(0).get<std::size_t>();
        std::size_t k = row.at(1).get<std::size_t>();
        if (i == 0 || k == 0 || i >= k) throw std::invalid_argument("lie_from_json: bracket indices must satisfy 1 <= i < j");
        L.set_bracket(i - 1, k - 1, vec_from_json(row.at(2)));
    }
    return L;
}

// ------------------------------------------------------------------ k-forms

/// {"degree": k, "dim": n, "terms": [[[i1..ik], "c"], ...]} with 1-based
/// strictly increasing index tuples in lexicographic order.
[[nodiscard]] inline Json kform_to_json(const KForm& f) {
    Json out;
    out["degree"] = f.degree();
    out["dim"] = f.dim();
    Json terms = Json::array();
    for (const auto& [key, c] : f.terms()) {
        Json idx = Json::array();
        for (std::size_t i : key) idx.push_back(i + 1);
        terms.push_back(Json::array({idx, rat_to_json(c)}));
    }
    out["terms"] = terms;
    return out;
}

[[nodiscard]] inline KForm kform_from_json(const Json& j) {
    KForm f(j.at("degree").get<std::size_t>(), j.at("dim").get<std::size_t>());
    for (const Json& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw std::invalid_argument("kform_from_json: malformed term");
        KForm::Key key;
        for (const Json& i : t.at(0)) {
            std::size_t v = i.get<std::size_t>();
            if (v == 0) throw std::invalid_argument("kform_from_json: indices are 1-based");
            key.push_back(v - 1);
        }
        f.add_term(std::move(key), rat_from_json(t.at(1)));
    }
    return f;
}

// --------------------------------------------------------------------- ACMS

[[nodiscard]] inline Json acms_to_json(const ACMS& s) {
    Json out;
    out["phi"] = mat_to_json(s.phi);
    out["alpha"] = kform_to_json(s.alpha);
    out["xi"] = vec_to_json(s.xi);
    out["g"] = mat_to_json(s.g);
    return out;
}

[[nodiscard]] inline ACMS acms_from_json(const Json& j) {
    return ACMS(mat_from_json(j.at("phi")), kform_from_json(j.at("alpha")),
                vec_from_json(j.at("xi")), mat_from_json(j.at("g")));
}

// ------------------------------------------------------------------ profile

[[nodiscard]] inline Json profile_to_json(const Profile& p) {
    Json out;
    out["dim"] = p.dim;
    out["dim_center"] = p.dim_center;
    out["derived_dims"] = p.derived_dims;
    out["lower_central_dims"] = p.lower_central_dims;
    out["solvable"] = p.solvable;
    out["nilpotent"] = p.nilpotent;
    out["unimodular"] = p.unimodular;
    out["killing_rank"] = p.killing_rank;
    out["killing_signature"] =
        Json::array({p.killing_signature.positive, p.killing_signature.negative, p.killing_signature.zero});
    return out;
}

[[nodiscard]] inline Profile profile_from_json(const Json& j) {
    Profile p;
    p.dim = j.at("dim").get<std::size_t>();
    p.dim_center = j.at("dim_center").get<std::size_t>();
    p.derived_dims = j.at("derived_dims").get<std::vector<std::size_t>>();
    p.lower_central_dims = j.at("lower_central_dims").get<std::vector<std::size_t>>();
    p.solvable = j.at("solvable").get<bool>();
    p.nilpotent = j.at("nilpotent").get<bool>();
    p.unimodular = j.at("unimodular").get<bool>();
    p.killing_rank = j.at("killing_rank").get<std::size_t>();
    const Json& s = j.at("killing_signature");
    p.killing_signature = Signature{s.at(0).get<std::size_t>(), s.at(1).get<std::size_t>(), s.at(2).get<std::size_t>()};
    return p;
}

// ----------------------------------------------------------- verify reports

[[nodiscard]] inline Json sasaki_report_to_json(const SasakiReport& r) {
    Json out;
    out["almost_contact"] = r.almost_contact;
    out["compatible"] = r.compatible;
    out["contact_metric"] = r.contact_metric;
    out["normal"] = r.normal;
    out["sasakian"] = r.sasakian();
    out["first_failure"] = r.first_failure;
    return out;
}

}  // namespace sasakian
