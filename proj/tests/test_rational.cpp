#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wlpw/rational.hpp"

using namespace wlpw;

TEST_CASE("rational literals parse to canonical form") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("10/-4")) == "-5/2");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("elimination determinant agrees with the permutation expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int size = 1; size <= 6; ++size) {
        for (int trial = 0; trial < 20; ++trial) {
            RationalMatrix m(size, RationalVector(size));
            for (auto& row : m) {
                for (auto& x : row) {
                    const int p = num(rng);
                    const int q = den(rng);
                    x = Rational(p, q);
                    x.canonicalize();
                }
            }
            CHECK(determinant(m) == oracle::leibniz_det(m));
        }
    }
}

TEST_CASE("rank, nullspace and solve") {
    RationalMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto kernel = nullspace(m);
    REQUIRE(kernel.size() == 1);
    for (const auto& row : m) {
        CHECK(dot(row, kernel[0]) == 0);
    }
    RationalMatrix a{{2, 1}, {1, 3}};
    const RationalVector x = solve(a, {3, 5});
    CHECK(x[0] == Rational(4, 5));
    CHECK(x[1] == Rational(7, 5));
}

TEST_CASE("rational square roots") {
    Rational root;
    CHECK(rational_sqrt(Rational(9, 4), &root));
    CHECK(root == Rational(3, 2));
    CHECK_FALSE(rational_sqrt(Rational(2), nullptr));
    CHECK_FALSE(rational_sqrt(Rational(-4), nullptr));
    CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
}
