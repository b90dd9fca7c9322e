/// @file test_cases.cpp
/// @brief Reduced case templates: closure residuals, solutions, Ricci values.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <sasakian/catalog.hpp>

using namespace sasakian;

namespace {

const std::vector<std::string>& case_ids() {
    static const std::vector<std::string> ids{"caseA1", "caseA2", "caseA3", "caseA4",
                                              "caseB1", "caseB2", "caseB3", "caseB4"};
    return ids;
}

Mat diag5(const Rat& d1, const Rat& d2, const Rat& d3, const Rat& d4, const Rat& d5) {
    Mat m(5, 5);
    m.at(0, 0) = d1;
    m.at(1, 1) = d2;
    m.at(2, 2) = d3;
    m.at(3, 3) = d4;
    m.at(4, 4) = d5;
    return m;
}

Mat case_ricci(const std::string& id, const Params& free_params) {
    const CatalogEntry& e = Catalog::instance().at(id);
    LieAlg L = e.algebra(free_params);
    auto S = e.structure(free_params);
    REQUIRE(S.has_value());
    return ricci(L, S->g);
}

}  // namespace

TEST_CASE("case solutions satisfy every closure residual at the documented samples") {
    for (const std::string& id : case_ids()) {
        const CatalogEntry& e = Catalog::instance().at(id);
        REQUIRE(e.samples.size() == 3);
        for (const Params& s : e.samples) {
            CAPTURE(id, params_str(s));
            Params c = case_solution(id, s);

            // the full constant set carries exactly the family's constants
            for (const std::string& name : case_constant_names(case_family(id)))
                CHECK(c.count(name) == 1);

            for (const auto& [label, value] : case_constraints(id, c)) {
                CAPTURE(label);
                CHECK(is_zero(value));
            }

            // closure of the differential system = Jacobi identity
            LieAlg L = case_algebra(case_family(id), c);
            CHECK(is_lie_algebra(L));
            for (std::size_t k = 1; k <= 5; ++k) {
                CAPTURE(k);
                CHECK(ce_d(L, ce_d(L, dual_form(5, k))) == KForm(3, 5));
            }
        }
    }
}

TEST_CASE("case solutions reject degenerate free parameters") {
    auto f = [](std::initializer_list<std::pair<const std::string, Rat>> kv) { return Params(kv); };
    CHECK_THROWS_WITH(case_solution("caseA1", f({{"c3", Rat(0)}, {"f4", Rat(1)}})),
                      "caseA1 requires c3 != 0");
    CHECK_THROWS_WITH(case_solution("caseA2", f({{"a1", Rat(1)}, {"b1", Rat(0)}, {"c3", Rat(1)}})),
                      "caseA2 requires b1 != 0");
    CHECK_THROWS_WITH(case_solution("caseA3", f({{"a1", Rat(0)}, {"f4", Rat(1)}})),
                      "caseA3 requires a1 != 0");
    CHECK_THROWS_WITH(case_solution("caseA4", f({{"a1", Rat(1)}, {"b1", Rat(0)}, {"c3", Rat(1)}})),
                      "caseA4 requires b1 != 0");
    CHECK_THROWS_WITH(case_solution("caseB1", f({{"a1", Rat(0)}, {"f4", Rat(1)}})),
                      "caseB1 requires a1 != 0");
    CHECK_THROWS_WITH(case_solution("caseB2", f({{"a1", Rat(1)}, {"b1", Rat(0)}, {"c3", Rat(1)}})),
                      "caseB2 requires b1 != 0");
    CHECK_THROWS_WITH(case_solution("caseB3", f({{"a1", Rat(0)}, {"f4", Rat(1)}})),
                      "caseB3 requires a1 != 0");
    CHECK_THROWS_WITH(case_solution("caseB4", f({{"a1", Rat(1)}, {"b1", Rat(0)}, {"c3", Rat(1)}})),
                      "caseB4 requires b1 != 0");

    CHECK_THROWS_AS(case_solution("caseC9", Params{}), std::invalid_argument);
    CHECK_THROWS_AS(case_family("nonsense"), std::invalid_argument);
}

TEST_CASE("bumping any pinned constant breaks at least one residual") {
    for (const std::string& id : case_ids()) {
        const CatalogEntry& e = Catalog::instance().at(id);
        for (const Params& s : e.samples) {
            Params c = case_solution(id, s);
            for (const std::string& name : case_pinned_constants(id)) {
                for (int bump : {+1, -1}) {
                    CAPTURE(id, params_str(s), name, bump);
                    Params broken = c;
                    broken[name] = broken[name] + Rat(bump);
                    bool some_residual_nonzero = false;
                    for (const auto& [label, value] : case_constraints(id, broken))
                        if (!is_zero(value)) some_residual_nonzero = true;
                    CHECK(some_residual_nonzero);
                }
            }
        }
    }
}

TEST_CASE("case tensors verify as Sasakian structures at every sample") {
    for (const std::string& id : case_ids()) {
        const CatalogEntry& e = Catalog::instance().at(id);
        for (const Params& s : e.samples) {
            CAPTURE(id, params_str(s));
            LieAlg L = e.algebra(s);
            auto S = e.structure(s);
            REQUIRE(S.has_value());
            SasakiReport r = verify_sasakian(L, *S);
            CAPTURE(r.first_failure);
            CHECK(r.sasakian());
            CHECK(check_sasaki_curvature_identity(L, *S).pass());
        }
    }
}

TEST_CASE("Ricci tensors of the A-family templates") {
    auto pr = [](const Rat& a1, const Rat& b1, const Rat& c3) {
        return Params{{"a1", a1}, {"b1", b1}, {"c3", c3}};
    };

    SECTION("A1 diagonal values and f4-independence") {
        Mat r1 = case_ricci("caseA1", {{"c3", Rat(1)}, {"f4", Rat(0)}});
        CHECK(r1 == diag5(Rat(-6), Rat(-6), Rat(-4), Rat(-4), Rat(4)));

        Mat r2 = case_ricci("caseA1", {{"c3", Rat(2)}, {"f4", Rat(0)}});
        CHECK(r2 == diag5(Rat(-3), Rat(-3), Rat(-4), Rat(-4), Rat(4)));

        // the free constant f4 never enters the curvature
        CHECK(case_ricci("caseA1", {{"c3", Rat(1)}, {"f4", Rat(5)}}) == r1);
        CHECK(case_ricci("caseA1", {{"c3", Rat(1)}, {"f4", rat(-7, 3)}}) == r1);

        // general diagonal: -(2*c3^2+4)/c3^2 twice, then -4, -4, 4
        Rat c3 = rat(3, 2);
        Mat r3 = case_ricci("caseA1", {{"c3", c3}, {"f4", Rat(0)}});
        Rat top = -(2 * c3 * c3 + 4) / (c3 * c3);
        CHECK(r3 == diag5(top, top, Rat(-4), Rat(-4), Rat(4)));
    }

    SECTION("A2 at the unit sample") {
        CHECK(case_ricci("caseA2", pr(1, 1, 0)) ==
              diag5(Rat(-4), Rat(-4), Rat(-4), Rat(-4), Rat(4)));
    }

    SECTION("A2 is alpha-Einstein exactly on the circle a1^2 + b1^2 = 2") {
        auto hit = [&](const Rat& a1, const Rat& b1, const Rat& c3) {
            const CatalogEntry& e = Catalog::instance().at("caseA2");
            Params s = pr(a1, b1, c3);
            auto S = e.structure(s);
            REQUIRE(S.has_value());
            return alpha_einstein(ricci(e.algebra(s), S->g), S->g, S->alpha);
        };
        auto on = std::pair<Rat, Rat>(Rat(-4), Rat(8));
        CHECK(hit(1, 1, 0) == on);
        CHECK(hit(-1, -1, 2) == on);
        CHECK(hit(1, -1, 5) == on);
        CHECK(hit(rat(7, 5), rat(1, 5), 0) == on);   // 49/25 + 1/25 = 2
        CHECK(hit(rat(17, 13), rat(7, 13), 1) == on);
        CHECK_FALSE(hit(1, 2, 0).has_value());
        CHECK_FALSE(hit(2, 1, 1).has_value());
        CHECK_FALSE(hit(rat(1, 2), rat(1, 2), 0).has_value());
    }
}

TEST_CASE("Ricci tensors of the B-family templates") {
    SECTION("B1 and B2 frozen values") {
        CHECK(case_ricci("caseB1", {{"a1", Rat(1)}, {"f4", Rat(0)}}) ==
              diag5(Rat(-3), Rat(-3), Rat(0), Rat(0), Rat(4)));
        CHECK(case_ricci("caseB2", {{"a1", Rat(1)}, {"b1", Rat(1)}, {"c3", Rat(0)}}) ==
              diag5(Rat(-4), Rat(-4), Rat(0), Rat(0), Rat(4)));
    }

    SECTION("neither B1 nor B2 is ever alpha-Einstein on a 5x5 grid") {
        const CatalogEntry& b1 = Catalog::instance().at("caseB1");
        for (int a = -2; a <= 3; ++a) {
            if (a == 0) continue;
            for (int f = -2; f <= 2; ++f) {
                Params s{{"a1", Rat(a)}, {"f4", Rat(f)}};
                CAPTURE(params_str(s));
                auto S = b1.structure(s);
                REQUIRE(S.has_value());
                CHECK_FALSE(alpha_einstein(ricci(b1.algebra(s), S->g), S->g, S->alpha).has_value());
            }
        }

        const CatalogEntry& b2 = Catalog::instance().at("caseB2");
        for (int a = -2; a <= 3; ++a) {
            if (a == 0) continue;
            for (int b = -2; b <= 3; ++b) {
                if (b == 0) continue;
                Params s{{"a1", Rat(a)}, {"b1", Rat(b)}, {"c3", Rat(1)}};
                CAPTURE(params_str(s));
                auto S = b2.structure(s);
                REQUIRE(S.has_value());
                CHECK_FALSE(alpha_einstein(ricci(b2.algebra(s), S->g), S->g, S->alpha).has_value());
            }
        }
    }
}

TEST_CASE("case metrics derived from the standard pairing are the identity") {
    for (const std::string& id : case_ids()) {
        const CatalogEntry& e = Catalog::instance().at(id);
        auto S = e.structure(e.canonical);
        REQUIRE(S.has_value());
        CHECK(S->g == Mat::identity(5));
        CHECK(S->alpha == dual_form(5, 5));
        CHECK(S->phi == phi_std5());
    }
}
