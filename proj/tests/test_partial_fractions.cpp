#include "lstirling/partial_fractions.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/exact_core.hpp"

#include <doctest.h>

#include <random>

using namespace lstirling;

namespace {
Rational rat(int p, int q = 1) { return Rational(p, q); }
}

TEST_CASE("coefficient examples") {
    CHECK(pf_coefficients(1, 0, 1).coefficients == std::vector<Rational>{1, -1});
    CHECK(pf_coefficients(2, 0, 1).coefficients == std::vector<Rational>{rat(1, 2), -1, rat(1, 2)});
    CHECK(pf_coefficients(2, 5, 3).coefficients ==
          std::vector<Rational>{rat(1, 18), rat(-1, 9), rat(1, 18)});
    CHECK_THROWS_AS(pf_coefficients(2, 1, 0), DegenerateLambda);
}

TEST_CASE("evaluation examples") {
    CHECK(pf_evaluate(pf_coefficients(1, 0, 1), 1) == rat(1, 2));
    CHECK(pf_evaluate(pf_coefficients(2, 0, 1), 2) == rat(1, 24));
    CHECK(pf_evaluate(pf_coefficients(0, 3, 7), 1) == rat(1, 4));
    CHECK_THROWS_AS(pf_evaluate(pf_coefficients(2, 0, 1), -1), PoleHit);
}

TEST_CASE("symbolic recombination is the constant 1") {
    CHECK(pf_verify(1, 0, 1));
    CHECK(pf_verify(8, 2, rat(1, 3)));
    CHECK(pf_verify(5, 0, -2));
    for (unsigned k = 0; k <= 10; ++k)
        for (const auto& lam : {rat(1), rat(1, 3), rat(-2)})
            for (int ri : {0, 5}) CHECK(pf_verify(k, ri, lam));
}

TEST_CASE("coefficients sum to zero for k >= 1") {
    for (unsigned k = 1; k <= 10; ++k) {
        auto form = pf_coefficients(k, rat(7, 2), rat(-3, 5));
        Rational sum(0);
        for (const auto& c : form.coefficients) sum += c;
        CHECK(sum == 0);
    }
}

TEST_CASE("coefficients do not depend on r") {
    for (unsigned k = 0; k <= 6; ++k)
        for (const auto& r : {rat(1), rat(5), rat(-2, 3), rat(11, 4)})
            CHECK(pf_coefficients(k, r, rat(2, 7)).coefficients ==
                  pf_coefficients(k, 0, rat(2, 7)).coefficients);
}

TEST_CASE("evaluation equals the reciprocal rising factorial at random points") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 11);
    for (unsigned k : {0u, 1u, 3u, 6u})
        for (const auto& lam : {rat(1), rat(1, 3), rat(-2)})
            for (const auto& r : {rat(0), rat(5)}) {
                auto form = pf_coefficients(k, r, lam);
                int accepted = 0;
                while (accepted < 20) {
                    Rational x(num(rng), den(rng));
                    bool pole = false;
                    for (unsigned l = 0; l <= k; ++l)
                        if (x + r + Rational(l) * lam == 0) pole = true;
                    if (pole) continue;
                    CHECK(pf_evaluate(form, x) == 1 / rising_factorial_eval(x + r, k + 1, lam));
                    ++accepted;
                }
            }
}
