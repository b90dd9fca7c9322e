/// @file test_lattice.cpp
/// @brief Integer lattice model: group laws on seeded random samples.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include <sasakian/catalog.hpp>

using namespace sasakian;

namespace {

std::vector<LatticePoint> random_points(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    std::vector<LatticePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back({d(rng), d(rng), d(rng), d(rng), d(rng)});
    return out;
}

LatticePoint lattice_inverse(const LatticePoint& m) {
    return {-m.m1, -m.m2, -m.m3, -m.m4 + m.m1 * m.m5 + m.m2 * m.m3, -m.m5};
}

}  // namespace

TEST_CASE("lattice unit laws") {
    const LatticePoint e = lattice_unit();
    CHECK(e == LatticePoint{0, 0, 0, 0, 0});
    for (const LatticePoint& x : random_points(25, 11)) {
        CAPTURE(lattice_str(x));
        CHECK(lattice_mul(e, x) == x);
        CHECK(lattice_mul(x, e) == x);
    }
}

TEST_CASE("lattice multiplication is associative on 100 seeded samples") {
    std::vector<LatticePoint> pts = random_points(300, 20260817);
    for (std::size_t i = 0; i < 100; ++i) {
        const LatticePoint &x = pts[3 * i], &y = pts[3 * i + 1], &z = pts[3 * i + 2];
        CAPTURE(lattice_str(x), lattice_str(y), lattice_str(z));
        CHECK(lattice_mul(lattice_mul(x, y), z) == lattice_mul(x, lattice_mul(y, z)));
    }
}

TEST_CASE("lattice worked example and twisted coordinate") {
    // only the fourth coordinate is twisted; it picks up m1*m5 + m2*m3
    CHECK(lattice_mul({1, 1, 0, 0, 1}, {0, 0, 1, 0, 0}) == LatticePoint{1, 1, 1, 1, 1});
    CHECK(lattice_mul({0, 0, 1, 0, 0}, {1, 1, 0, 0, 1}) == LatticePoint{1, 1, 1, 0, 1});
    CHECK(lattice_str(LatticePoint{1, -2, 3, 0, 5}) == "(1,-2,3,0,5)");
}

TEST_CASE("every lattice point has the closed-form inverse") {
    const LatticePoint e = lattice_unit();
    for (const LatticePoint& x : random_points(50, 7)) {
        CAPTURE(lattice_str(x));
        const LatticePoint xi = lattice_inverse(x);
        CHECK(lattice_mul(x, xi) == e);
        CHECK(lattice_mul(xi, x) == e);
    }
}

TEST_CASE("the lattice is not abelian") {
    const LatticePoint x{1, 0, 0, 0, 0};
    const LatticePoint y{0, 0, 0, 0, 1};
    CHECK_FALSE(lattice_mul(x, y) == lattice_mul(y, x));
}
