#include "lstirling/exact_core.hpp"

#include "lstirling/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lstirling;

namespace {
Rational rat(int p, int q = 1) { return Rational(p, q); }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(parse_rational("7") == rat(7));
    CHECK(parse_rational("+7") == rat(7));
    CHECK(parse_rational("0.5") == rat(1, 2));
    CHECK(parse_rational("-2.25") == rat(-9, 4));
    CHECK(parse_rational(".5") == rat(1, 2));
    CHECK(format_rational(rat(-3, 4)) == "-3/4");
    CHECK(format_rational(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("rational round trip and exact double conversion") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> num(-999, 999);
    std::uniform_int_distribution<int> den(1, 999);
    for (int i = 0; i < 200; ++i) {
        Rational q(num(rng), den(rng));
        CHECK(parse_rational(format_rational(q)) == q);
    }
    CHECK(rational_from_double(0.5) == rat(1, 2));
    CHECK(rational_from_double(-1.25) == rat(-5, 4));
}

TEST_CASE("falling factorial values") {
    CHECK(falling_factorial_eval(5, 0, 7) == 1);
    CHECK(falling_factorial_eval(5, 3, 2) == 15);
    CHECK(falling_factorial_eval(3, 4, 1) == 0);
}

TEST_CASE("rising factorial values") {
    CHECK(rising_factorial_eval(2, 3, 1) == 24);
    CHECK(rising_factorial_eval(1, 0, 5) == 1);
    CHECK(rising_factorial_eval(-1, 2, 1) == 0);
}

TEST_CASE("rising factorial polynomial") {
    CHECK(rising_factorial_poly(2, 1, 1) == Poly{rat(2), rat(3), rat(1)});
    CHECK(rising_factorial_poly(0, 3, 2) == Poly::constant(1));
    CHECK(rising_factorial_poly(3, 2, 0) == Poly{rat(0), rat(8), rat(6), rat(1)});
}

TEST_CASE("falling factorial polynomial") {
    CHECK(falling_factorial_poly(3, 1) == Poly{rat(0), rat(2), rat(-3), rat(1)});
    CHECK(falling_factorial_poly(1, 9) == Poly{rat(0), rat(1)});
    CHECK(falling_factorial_poly(2, rat(1, 2)) == Poly{rat(0), rat(-1, 2), rat(1)});
}

TEST_CASE("lambda binomial values") {
    CHECK(lambda_binomial(6, 2, 2) == 12);
    CHECK(lambda_binomial(7, 0, 1) == 1);
    CHECK(lambda_binomial(4, 2, 1) == 6);
}

TEST_CASE("lambda binomial reduces to classical binomial at lambda=1") {
    for (unsigned x = 0; x <= 10; ++x)
        for (unsigned n = 0; n <= x; ++n)
            CHECK(lambda_binomial(x, n, 1) == Rational(oracles::binomial_by_factorials(x, n)));
}

TEST_CASE("reflection: falling(x) = (-1)^n rising(-x)") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        Rational x(num(rng), den(rng)), lam(num(rng), den(rng));
        unsigned n = static_cast<unsigned>(trial % 9);
        Rational lhs = falling_factorial_eval(x, n, lam);
        Rational rhs = rising_factorial_eval(-x, n, lam);
        CHECK(lhs == (n % 2 == 1 ? -rhs : rhs));
    }
}

TEST_CASE("polynomial expansions agree with pointwise products") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        Rational x0(num(rng), den(rng)), lam(num(rng), den(rng)), r(num(rng), den(rng));
        unsigned n = static_cast<unsigned>(trial % 7);
        CHECK(rising_factorial_poly(n, lam, r).eval(x0) ==
              rising_factorial_eval(x0 + r, n, lam));
        CHECK(falling_factorial_poly(n, lam).eval(x0) == falling_factorial_eval(x0, n, lam));
    }
}

TEST_CASE("scaling: (x)_{n,lambda} = lambda^n (x/lambda)_{n,1}") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> num(-15, 15);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 80; ++trial) {
        Rational lam(num(rng), den(rng));
        if (lam == 0) continue;
        Rational x(num(rng), den(rng));
        unsigned n = static_cast<unsigned>(trial % 13);
        CHECK(falling_factorial_eval(x, n, lam) ==
              rational_pow(lam, n) * falling_factorial_eval(x / lam, n, 1));
    }
}

TEST_CASE("lambda = 0 degenerates to plain powers") {
    CHECK(falling_factorial_eval(rat(3, 2), 4, 0) == rational_pow(rat(3, 2), 4));
    CHECK(rising_factorial_eval(rat(-2), 3, 0) == rat(-8));
}
