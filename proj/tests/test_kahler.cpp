/// @file test_kahler.cpp
/// @brief Kahler verification and the quotient / central-extension correspondence.

#include <catch2/catch_amalgamated.hpp>

#include <sasakian/catalog.hpp>
#include <sasakian/kahler.hpp>

#include <stdexcept>

using namespace sasakian;

namespace {

/// Flat Kahler R^4: abelian algebra, J the standard pairing, omega = e12+e34.
KahlerStruct flat_r4() {
    Mat J = phi_from_pairs(4, {{1, 2}, {3, 4}});
    Mat om(4, 4);
    om.at(0, 1) = 1;
    om.at(1, 0) = -1;
    om.at(2, 3) = 1;
    om.at(3, 2) = -1;
    return KahlerStruct(J, two_form_from_matrix(om), Mat::identity(4));
}

}  // namespace

TEST_CASE("KahlerStruct guards shape, parity, positivity") {
    CHECK_NOTHROW(flat_r4());
    Mat J3 = phi_from_pairs(3, {{1, 2}});
    KForm om3(2, 3);
    CHECK_THROWS_AS(KahlerStruct(J3, om3, Mat::identity(3)), std::invalid_argument);  // odd dim
    KahlerStruct K = flat_r4();
    Mat g = K.g;
    g.at(0, 0) = -1;
    CHECK_THROWS_AS(KahlerStruct(K.J, K.omega, g), std::invalid_argument);
}

TEST_CASE("flat R4 passes the Kahler battery") {
    LieAlg ab(4);  // abelian
    KahlerReport r = verify_kahler(ab, flat_r4());
    CHECK(r.almost_complex);
    CHECK(r.compatible);
    CHECK(r.omega_consistent);
    CHECK(r.integrable);
    CHECK(r.closed);
    CHECK(r.kahler());
    CHECK(r.first_failure.empty());
}

TEST_CASE("Kahler battery fails loudly on broken data") {
    LieAlg ab(4);
    KahlerStruct K = flat_r4();

    Mat J = K.J;
    J.at(1, 0) = 0;  // J^2 != -I now
    KahlerReport r1 = verify_kahler(ab, KahlerStruct(J, K.omega, K.g));
    CHECK_FALSE(r1.almost_complex);
    CHECK_FALSE(r1.kahler());
    CHECK_FALSE(r1.first_failure.empty());

    // omega inconsistent with g(J., .)
    KForm om = rat(2) * K.omega;
    KahlerReport r2 = verify_kahler(ab, KahlerStruct(K.J, om, K.g));
    CHECK(r2.almost_complex);
    CHECK_FALSE(r2.omega_consistent);
    CHECK_FALSE(r2.kahler());

    // non-closed omega: Heisenberg h3 + R with omega = e^{13}... d e^3 != 0
    LieAlg h3r = direct_sum(h3_algebra(), LieAlg(1));
    Mat J2 = phi_from_pairs(4, {{1, 2}, {3, 4}});
    Mat om2(4, 4);
    om2.at(0, 1) = 1;
    om2.at(1, 0) = -1;
    om2.at(2, 3) = 1;
    om2.at(3, 2) = -1;
    KahlerReport r3 = verify_kahler(h3r, KahlerStruct(J2, two_form_from_matrix(om2), Mat::identity(4)));
    CHECK_FALSE(r3.closed);
    CHECK_FALSE(r3.kahler());
}

TEST_CASE("sasaki quotient of the Heisenberg model is flat Kahler R4") {
    LieAlg L = h5_algebra();
    QuotientResult q = sasaki_quotient(L, h5_acms());
    CHECK(q.h.dim() == 4);
    CHECK(is_lie_algebra(q.h));
    CHECK(q.h == LieAlg(4));  // abelian quotient
    KahlerReport r = verify_kahler(q.h, q.k);
    CHECK(r.kahler());
    CHECK(q.basis.size() == 4);
    // quotient of a structure whose alpha annihilator is not a hyperplane line
    ACMS S = h5_acms();
    KForm bad(1, 5);  // zero 1-form
    CHECK_THROWS_AS(sasaki_quotient(L, ACMS(S.phi, bad, S.xi, S.g)), std::invalid_argument);
}

TEST_CASE("quotients of central entries satisfy all Kahler axioms") {
    for (const char* id : {"h5", "g1", "g2", "g3", "g4", "g5", "g6tau", "k1", "k3"}) {
        const CatalogEntry& e = Catalog::instance().at(id);
        auto S = e.structure(e.canonical);
        REQUIRE(S);
        LieAlg L = e.algebra(e.canonical);
        REQUIRE(L.ad(S->xi).is_zero_mat());
        QuotientResult q = sasaki_quotient(L, *S);
        KahlerReport r = verify_kahler(q.h, q.k);
        INFO(id << ": " << r.first_failure);
        CHECK(r.kahler());
    }
}

TEST_CASE("central extension inverts the quotient on the nose") {
    for (const char* id : {"h5", "g2", "g3"}) {
        const CatalogEntry& e = Catalog::instance().at(id);
        auto S = e.structure(e.canonical);
        REQUIRE(S);
        LieAlg L = e.algebra(e.canonical);
        QuotientResult q = sasaki_quotient(L, *S);
        auto [ext, extS] = central_extension(q.h, q.k);
        // identical structure constants, not merely isomorphic
        CHECK(ext == L);
        CHECK(verify_sasakian(ext, extS).sasakian());
        CHECK(acms_equal(extS, *S));
    }
}

TEST_CASE("extension of a verified Kahler structure is Sasakian") {
    auto [ext, extS] = central_extension(LieAlg(4), flat_r4());
    CHECK(ext.dim() == 5);
    CHECK(ext == h5_algebra());
    CHECK(verify_sasakian(ext, extS).sasakian());
}

TEST_CASE("kahler equivalence witness") {
    LieAlg ab(4);
    KahlerStruct K = flat_r4();
    CHECK(kahler_equivalence_witness(ab, K, ab, K, Mat::identity(4)));
    // a rotation in the first complex line is an automorphism of the flat structure
    Mat P = Mat::identity(4);
    P.at(0, 0) = 0;
    P.at(1, 1) = 0;
    P.at(0, 1) = -1;
    P.at(1, 0) = 1;
    CHECK(kahler_equivalence_witness(ab, K, ab, K, P));
    // scaling is not an isometry
    CHECK_FALSE(kahler_equivalence_witness(ab, K, ab, K, rat(2) * Mat::identity(4)));
}
