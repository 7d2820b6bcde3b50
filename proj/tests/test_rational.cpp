#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mvlogic/rational.hpp"

using mvl::Rational;

TEST_CASE("construction reduces to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("field operations are exact") {
    const Rational a(7, 10), b(1, 2);
    CHECK(a + b == Rational(6, 5));
    CHECK(a - b == Rational(1, 5));
    CHECK(a * b == Rational(7, 20));
    CHECK(a / b == Rational(7, 5));
    CHECK(-a == Rational(-7, 10));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering agrees with cross-multiplication") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(1, 2) <= Rational(2, 4));
    CHECK(Rational(1, 2) >= Rational(2, 4));
    CHECK(min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
}

TEST_CASE("string form") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 50);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng)),
            c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - b == a + (-b));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("overflow is detected, not wrapped") {
    const Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    // intermediates above 64 bits are fine when the result reduces
    const Rational x(1, 1000000007LL), y(1000000007LL, 1);
    CHECK(x * y == Rational(1));
}

TEST_CASE("hash respects equality") {
    const std::hash<Rational> h;
    CHECK(h(Rational(2, 4)) == h(Rational(1, 2)));
}
