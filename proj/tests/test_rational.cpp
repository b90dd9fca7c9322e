/// @file test_rational.cpp
/// @brief Exact rational scalar layer: construction, parsing, canonical form.

#include <catch2/catch_amalgamated.hpp>

#include <sasakian/rational.hpp>

#include <stdexcept>

using namespace sasakian;

TEST_CASE("rat builds canonical fractions") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, 6) == rat(1, -2));
    CHECK(rat(7) == Rat(7));
    CHECK(rat(0, 5) == Rat(0));
}

TEST_CASE("rat rejects zero denominators") {
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact, not floating") {
    Rat third = rat(1, 3);
    CHECK(third * 3 == 1);
    CHECK(third + third + third == 1);
    Rat tiny = rat(1, 1000000007);
    CHECK(tiny * Rat(1000000007) == 1);

    // no overflow: exponent towers stay exact
    Rat big(1);
    for (int i = 0; i < 200; ++i) big *= 2;
    Rat back = big;
    for (int i = 0; i < 200; ++i) back /= 2;
    CHECK(back == 1);
    CHECK(big > 0);
}

TEST_CASE("rat_parse accepts p and p/q forms") {
    CHECK(rat_parse("3") == rat(3));
    CHECK(rat_parse("-3") == rat(-3));
    CHECK(rat_parse("3/4") == rat(3, 4));
    CHECK(rat_parse("-6/8") == rat(-3, 4));
    CHECK(rat_parse("0") == Rat(0));
}

TEST_CASE("rat_parse rejects malformed input") {
    CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
}

TEST_CASE("rat_str emits canonical form and round-trips") {
    CHECK(rat_str(rat(1, 2)) == "1/2");
    CHECK(rat_str(rat(-2, 4)) == "-1/2");
    CHECK(rat_str(rat(5)) == "5");
    CHECK(rat_str(Rat(0)) == "0");
    for (long p = -6; p <= 6; ++p)
        for (long q = 1; q <= 6; ++q) CHECK(rat_parse(rat_str(rat(p, q))) == rat(p, q));
}

TEST_CASE("is_zero and ordering") {
    CHECK(is_zero(Rat(0)));
    CHECK_FALSE(is_zero(rat(1, 1000000)));
    CHECK(rat(-1, 3) < rat(1, 4));
    CHECK(rat(2, 3) > rat(3, 5));
}
