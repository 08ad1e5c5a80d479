#include "lstirling/integrals.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/stirling.hpp"

#include <doctest.h>

#include <cmath>

using namespace lstirling;

TEST_CASE("closed-form tail integrals") {
    CHECK(tail_integral_closed_form({1, 1, 0, 1}) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(tail_integral_closed_form({1, 2, 0, 1}) ==
          doctest::Approx(0.5 * (2 * std::log(2.0) - std::log(3.0))).epsilon(1e-13));
    CHECK(tail_integral_closed_form({1, 1, 1, 1}) ==
          doctest::Approx(std::log(3.0) - std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(tail_integral_closed_form({-1, 1, 0, 1}), DomainError);
    CHECK_THROWS_AS(tail_integral_closed_form({1, 0, 0, 1}), DomainError);
    CHECK_THROWS_AS(tail_integral_closed_form({1, 1, 0, -2}), DomainError);
}

TEST_CASE("quadrature reproduces the closed forms") {
    CHECK(std::fabs(tail_integral_quadrature({1, 1, 0, 1}, 1e-10) - std::log(2.0)) < 1e-10);
    TailIntegralSpec spec{2, 3, 0, 2};
    CHECK(std::fabs(tail_integral_quadrature(spec, 1e-9) - tail_integral_closed_form(spec)) <
          1e-9);
    CHECK(std::fabs(tail_integral_quadrature({1, 1, 0, 0.5}, 1e-9) - 2 * std::log(1.5)) < 1e-9);
    CHECK_THROWS_AS(tail_integral_quadrature({1, 1, 0, 1}, -1.0), DomainError);
}

TEST_CASE("closed form vs quadrature over the full grid") {
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double lam : {0.5, 1.0, 2.0})
            for (unsigned k = 1; k <= 5; ++k)
                for (int ri : {0, 1, 2}) {
                    TailIntegralSpec spec{a, k, ri, lam};
                    CHECK(std::fabs(tail_integral_closed_form(spec) -
                                    tail_integral_quadrature(spec, 1e-10)) <= 1e-9);
                }
}

TEST_CASE("inverse power series partial sums") {
    CHECK(inverse_power_series(1, 1, 0, 1, 1) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    double three_terms = inverse_power_series(1, 1, 0, 1, 3);
    // log2 + (1/2)(2log2 - log3) + (1/3)(3log2 - 3log3 + log4)
    double expected = std::log(2.0) + 0.5 * (2 * std::log(2.0) - std::log(3.0)) +
                      (1.0 / 3.0) * (3 * std::log(2.0) - 3 * std::log(3.0) + std::log(4.0));
    CHECK(three_terms == doctest::Approx(expected).epsilon(1e-12));
    CHECK(three_terms == doctest::Approx(0.894).epsilon(1e-3));
    CHECK_THROWS_AS(inverse_power_series(0.0, 1, 0, 1, 5), DomainError);
}

TEST_CASE("inverse power series converges to 1/(k a^k)") {
    auto res = inverse_power_series_adaptive(3, 2, 0, 1, 1e-7);
    CHECK(res.converged);
    CHECK(res.terms_used <= 500);
    CHECK(std::fabs(res.value - 1.0 / 18.0) <= 1e-6);
}

TEST_CASE("series terms match closed-form tail integrals termwise") {
    // each term of the series is the first-kind number times the tail
    // integral with k replaced by n
    for (unsigned n = 2; n <= 8; ++n) {
        double term = inverse_power_series(2, 1, 1, 0.5, n) -
                      inverse_power_series(2, 1, 1, 0.5, n - 1);
        Rational coeff = stirling1_unsigned_r(n, 1, 1, Rational(1, 2));
        double integral = tail_integral_closed_form({2, n, 1, 0.5});
        CHECK(term == doctest::Approx(to_double(coeff) * integral).epsilon(1e-10));
    }
}

TEST_CASE("frullani log sums") {
    CHECK(frullani_log_sum(1, 1, 1) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
    CHECK(frullani_log_sum(1e6, 1, 1) == doctest::Approx(-1e-6).epsilon(1e-5));
    CHECK(std::fabs(frullani_log_sum(1e4, 3, 1)) < 1e-11);
    CHECK_THROWS_AS(frullani_log_sum(-1, 1, 1), DomainError);
    CHECK_THROWS_AS(frullani_log_sum(1, 0, 1), DomainError);
}

TEST_CASE("frullani decay in b with an empirical C/b envelope") {
    for (double lam : {0.5, 1.0, 2.0})
        for (unsigned k = 1; k <= 3; ++k) {
            double c_fit = std::fabs(frullani_log_sum(1e2, k, lam)) * 1e2;
            double prev = std::fabs(frullani_log_sum(1e2, k, lam));
            for (double b : {1e3, 1e4, 1e5, 1e6}) {
                double cur = std::fabs(frullani_log_sum(b, k, lam));
                CHECK(cur < prev);
                CHECK(cur <= c_fit / b * 10.0);
                prev = cur;
            }
        }
}
