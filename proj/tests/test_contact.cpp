/// @file test_contact.cpp
/// @brief Almost contact metric structures and the Sasakian verification battery.

#include <catch2/catch_amalgamated.hpp>

#include <sasakian/catalog.hpp>
#include <sasakian/contact.hpp>

#include <stdexcept>

using namespace sasakian;

TEST_CASE("ACMS constructor validates shapes and positivity") {
    Mat phi = phi_std5();
    KForm a5 = dual_form(5, 5);
    Vec xi{0, 0, 0, 0, 1};
    CHECK_NOTHROW(ACMS(phi, a5, xi, Mat::identity(5)));
    CHECK_THROWS_AS(ACMS(Mat::identity(4), a5, xi, Mat::identity(5)), std::invalid_argument);
    CHECK_THROWS_AS(ACMS(phi, dual_form(4, 4), xi, Mat::identity(5)), std::invalid_argument);
    Mat bad = Mat::identity(5);
    bad.at(0, 0) = -1;
    CHECK_THROWS_AS(ACMS(phi, a5, xi, bad), std::invalid_argument);
}

TEST_CASE("omega matrix is phi-transpose times metric") {
    ACMS S = h5_acms();
    CHECK(S.omega_matrix() == S.phi.transpose() * S.g);
    // omega is antisymmetric
    Mat om = S.omega_matrix();
    CHECK((om + om.transpose()).is_zero_mat());
}

TEST_CASE("almost contact axioms hold on the Heisenberg model") {
    ACMS S = h5_acms();
    SasakiReport r = verify_almost_contact(S);
    CHECK(r.almost_contact);
    CHECK(r.first_failure.empty());
    // phi^2 = -I + xi (x) alpha, checked directly
    Mat expect = rat(-1) * Mat::identity(5);
    expect.at(4, 4) = 0;
    CHECK(S.phi * S.phi == expect);
}

TEST_CASE("almost contact axioms fail loudly when broken") {
    ACMS S = h5_acms();
    S.phi = Mat(5, 5);  // zero endomorphism
    SasakiReport r = verify_almost_contact(S);
    CHECK_FALSE(r.almost_contact);
    CHECK_FALSE(r.first_failure.empty());
}

TEST_CASE("full Sasakian battery on model structures") {
    CHECK(verify_sasakian(h5_algebra(), h5_acms()).sasakian());
    CHECK(verify_sasakian(g6_algebra(), g6_acms()).sasakian());
    CHECK(verify_sasakian(g0_algebra(), g0_acms()).sasakian());
    CHECK(verify_sasakian(sl2xaff_algebra(), sl2xaff_acms()).sasakian());
    CHECK(verify_sasakian(su2xaff_algebra(), su2xaff_acms()).sasakian());
    CHECK(verify_sasakian(affxr_algebra(), affxr_acms()).sasakian());
}

TEST_CASE("compatibility failure is detected") {
    ACMS S = h5_acms();
    Mat g = S.g;
    g.at(0, 0) = 2;  // breaks g(phi X, phi Y) = g(X,Y) - a(X)a(Y)
    ACMS broken(S.phi, S.alpha, S.xi, g);
    SasakiReport r = verify_sasakian(h5_algebra(), broken);
    CHECK_FALSE(r.sasakian());
    CHECK_FALSE(r.first_failure.empty());
}

TEST_CASE("pairing orientation flip breaks the contact-metric condition") {
    ACMS S = h5_acms();
    Mat phi = S.phi;
    // reverse one complex pairing: phi e3 = -e4, phi e4 = e3
    phi.at(3, 2) = -phi.at(3, 2);
    phi.at(2, 3) = -phi.at(2, 3);
    ACMS flipped(phi, S.alpha, S.xi, S.g);
    SasakiReport r = verify_sasakian(h5_algebra(), flipped);
    CHECK(r.almost_contact);  // axioms without the bracket still hold
    CHECK(r.compatible);
    CHECK_FALSE(r.contact_metric);
    CHECK_FALSE(r.sasakian());
    CHECK_FALSE(r.first_failure.empty());
}

TEST_CASE("transport through a basis change preserves the battery") {
    ACMS S = h5_acms();
    LieAlg L = h5_algebra();
    Mat P = Mat::from_rows({{1, 0, 0, 0, 0},
                            {1, 1, 0, 0, 0},
                            {0, 0, 1, 2, 0},
                            {0, 0, 0, 1, 0},
                            {0, 0, 3, 0, 1}});
    REQUIRE(inverse(P));
    LieAlg M = change_basis(L, P);
    ACMS T = transport_acms(S, P);
    CHECK(verify_sasakian(M, T).sasakian());
    // round trip restores the original tensors
    ACMS back = transport_acms(T, *inverse(P));
    CHECK(acms_equal(back, S));
    CHECK_THROWS_AS(transport_acms(S, Mat(5, 5)), std::invalid_argument);
}

TEST_CASE("nijenhuis torsion: antisymmetry, bilinearity, normality value") {
    LieAlg L = h5_algebra();
    ACMS S = h5_acms();
    Vec x{1, 2, 0, 1, 1};
    Vec y{0, 1, 3, 0, 2};
    CHECK(nijenhuis(L, S.phi, x, y) == -nijenhuis(L, S.phi, y, x));
    CHECK(nijenhuis(L, S.phi, rat(7) * x, y) == rat(7) * nijenhuis(L, S.phi, x, y));
    CHECK(is_zero(nijenhuis(L, S.phi, x, x)));
    // normality: N_phi(X, Y) = -d(alpha)(X, Y) xi on basis pairs
    KForm da = ce_d(L, S.alpha);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j) {
            Vec n = nijenhuis_basis(L, S.phi, i, j);
            Vec expect = (rat(-1) * da.eval_basis({i, j})) * S.xi;
            CHECK(n == expect);
        }
}

TEST_CASE("reeb adjoint analysis") {
    // central Reeb: ad_xi = 0, kernel is everything
    AdXiAnalysis a = adxi_analysis(h5_algebra(), h5_acms());
    CHECK(a.ad_xi.is_zero_mat());
    CHECK(a.commutes_with_phi);
    CHECK(a.skew_adjoint);
    CHECK(a.kernel_basis.size() == 5);
    CHECK(a.image_basis.empty());
    CHECK(a.orthogonal_split);

    // non-central Reeb on the trivial-center model
    AdXiAnalysis b = adxi_analysis(g0_algebra(), g0_acms());
    CHECK(b.commutes_with_phi);
    CHECK(b.skew_adjoint);
    CHECK(b.phi_composite_symmetric);
    CHECK(b.kernel_basis.size() == 3);
    CHECK(b.image_basis.size() == 2);
    CHECK(b.orthogonal_split);
}

TEST_CASE("kernel subalgebra restriction") {
    LieAlg L = g0_algebra();
    ACMS S = g0_acms();
    auto [sub, subS] = kernel_subalgebra(L, S);
    CHECK(sub.dim() == 3);
    CHECK(is_lie_algebra(sub));
    CHECK(verify_almost_contact(subS).almost_contact);
    // alpha still pairs to 1 against the restricted reeb
    Rat pairing(0);
    Vec av = one_form_vec(subS.alpha);
    for (std::size_t i = 0; i < 3; ++i) pairing += av[i] * subS.xi[i];
    CHECK(pairing == 1);
}

TEST_CASE("parity obstruction on the rank-two extension of sl2") {
    LieAlg L = sl2_r2_algebra();
    Vec a{0, 0, 1, 1, 0};
    ObstructionSample s = sl2_r2_obstruction(a);
    CHECK(s.contact);
    CHECK(s.discriminant == 1);
    CHECK(s.obstructed);
    CHECK(s.line_ok);
    DimObstruction d = sasaki_dim_obstruction(L, one_form(a));
    CHECK(d.xi == Vec{0, 0, rat(1, 3), rat(2, 3), 0});
    REQUIRE(d.subspace_basis.size() == 1);
    CHECK(in_span(d.subspace_basis, Vec{0, 0, 0, 0, 1}));
    CHECK(d.obstructed);
    // non-contact forms are rejected
    CHECK_THROWS_AS(sasaki_dim_obstruction(L, dual_form(5, 1)), std::invalid_argument);
}
