/// @file test_linalg.cpp
/// @brief Exact linear algebra: rref, kernels, determinants, signatures.

#include <catch2/catch_amalgamated.hpp>

#include <sasakian/linalg.hpp>

#include <stdexcept>

using namespace sasakian;

namespace {

Mat m22(long a, long b, long c, long d) { return Mat::from_rows({{Rat(a), Rat(b)}, {Rat(c), Rat(d)}}); }

}  // namespace

TEST_CASE("vector arithmetic") {
    Vec a{1, 2, 3};
    Vec b{4, 5, 6};
    CHECK(a + b == Vec{5, 7, 9});
    CHECK(b - a == Vec{3, 3, 3});
    CHECK(rat(1, 2) * a == Vec{rat(1, 2), 1, rat(3, 2)});
    CHECK(-a == Vec{-1, -2, -3});
    CHECK(is_zero(Vec{0, 0}));
    CHECK_FALSE(is_zero(a));
}

TEST_CASE("matrix construction and products") {
    Mat I = Mat::identity(3);
    CHECK(I * I == I);
    Mat A = Mat::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(A.rows() == 3);
    CHECK(A.cols() == 2);
    CHECK(A.transpose().transpose() == A);
    CHECK(A * Vec{1, 1} == Vec{3, 7, 11});
    Mat B = m22(0, 1, 1, 0);
    CHECK(m22(1, 2, 3, 4) * B == m22(2, 1, 4, 3));
    CHECK_THROWS_AS(A * A, std::invalid_argument);
    CHECK_THROWS_AS(Mat::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST_CASE("rref is idempotent with unit pivots") {
    Mat A = Mat::from_rows({{2, 4, 6}, {1, 2, 4}, {0, 0, 2}});
    Rref r = rref(A);
    CHECK(r.pivot_cols.size() == 2);
    Rref again = rref(r.m);
    CHECK(again.m == r.m);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) CHECK(r.m.at(i, r.pivot_cols[i]) == 1);
}

TEST_CASE("rank and rank-nullity") {
    CHECK(rank(Mat::identity(4)) == 4);
    CHECK(rank(Mat(3, 3)) == 0);
    Mat A = Mat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(A) == 2);
    CHECK(rank(A) + kernel(A).size() == A.cols());
}

TEST_CASE("solve_linear on consistent and inconsistent systems") {
    Mat A = m22(1, 2, 3, 4);
    auto x = solve_linear(A, Vec{5, 11});
    REQUIRE(x);
    CHECK(A * *x == Vec{5, 11});
    // rank-1 inconsistent system
    Mat S = m22(1, 2, 2, 4);
    CHECK_FALSE(solve_linear(S, Vec{1, 3}));
    CHECK(solve_linear(S, Vec{1, 2}));
}

TEST_CASE("kernel vectors annihilate") {
    Mat A = Mat::from_rows({{1, 2, 3}, {4, 5, 6}});
    auto K = kernel(A);
    REQUIRE(K.size() == 1);
    CHECK(is_zero(A * K[0]));
}

TEST_CASE("determinant values and multiplicativity") {
    CHECK(det(m22(1, 2, 3, 4)) == -2);
    CHECK(det(Mat::identity(5)) == 1);
    Mat A = Mat::from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}});
    Mat B = Mat::from_rows({{1, 1, 0}, {0, 2, 1}, {1, 0, 1}});
    CHECK(det(A * B) == det(A) * det(B));
    CHECK(det(A.transpose()) == det(A));
}

TEST_CASE("inverse or nullopt") {
    Mat A = m22(1, 2, 3, 5);
    auto Ai = inverse(A);
    REQUIRE(Ai);
    CHECK(*Ai * A == Mat::identity(2));
    CHECK(A * *Ai == Mat::identity(2));
    CHECK_FALSE(inverse(m22(1, 2, 2, 4)));
}

TEST_CASE("span bases and membership") {
    std::vector<Vec> gens{{1, 0, 1}, {2, 0, 2}, {0, 1, 0}};
    auto basis = span_basis(gens);
    CHECK(basis.size() == 2);
    CHECK(in_span(basis, Vec{3, 5, 3}));
    CHECK_FALSE(in_span(basis, Vec{0, 0, 1}));
    CHECK(in_span(basis, Vec{0, 0, 0}));
}

TEST_CASE("positive definiteness by leading minors") {
    CHECK(is_positive_definite(Mat::identity(3)));
    CHECK(is_positive_definite(m22(2, 1, 1, 2)));
    CHECK_FALSE(is_positive_definite(m22(1, 2, 2, 1)));
    Mat neg = Mat::identity(2);
    neg.at(1, 1) = -1;
    CHECK_FALSE(is_positive_definite(neg));
    CHECK_FALSE(is_positive_definite(Mat(2, 2)));  // zero matrix
}

TEST_CASE("signature of symmetric matrices") {
    Mat D(3, 3);
    D.at(0, 0) = 2;
    D.at(1, 1) = -5;
    Signature s = symmetric_signature(D);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 1);
    // congruence-invariant: signature of PᵀDP matches for invertible P
    Mat P = Mat::from_rows({{1, 1, 0}, {0, 1, 2}, {1, 0, 1}});
    REQUIRE(inverse(P));
    Signature t = symmetric_signature(P.transpose() * D * P);
    CHECK(t == s);
    CHECK_THROWS_AS(symmetric_signature(m22(0, 1, 2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_signature(Mat(2, 3)), std::invalid_argument);
}
