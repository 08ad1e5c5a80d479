#include "lstirling/transforms.hpp"

#include "lstirling/errors.hpp"

#include <doctest.h>

#include <random>

using namespace lstirling;

namespace {
Rational rat(int p, int q = 1) { return Rational(p, q); }
}

TEST_CASE("orthogonality defect examples") {
    CHECK(orthogonality_defect(2, 1, 0, 2, OrthogonalitySide::a) == 0);
    CHECK(orthogonality_defect(3, 3, 1, 1, OrthogonalitySide::b) == 0);
    CHECK(orthogonality_defect(4, 0, 0, 1, OrthogonalitySide::a) == 0);
    CHECK_THROWS_AS(orthogonality_defect(2, 1, 0, 0, OrthogonalitySide::a), DegenerateLambda);
}

TEST_CASE("orthogonality holds across the parameter grid") {
    for (int ri : {0, 1, 2, 3})
        for (const auto& lam : {rat(1, 2), rat(1), rat(2), rat(3), rat(-1)})
            for (unsigned n = 0; n <= 12; ++n)
                for (unsigned l = 0; l <= n; ++l) {
                    CHECK(orthogonality_defect(n, l, ri, lam, OrthogonalitySide::a) == 0);
                    CHECK(orthogonality_defect(n, l, ri, lam, OrthogonalitySide::b) == 0);
                }
}

TEST_CASE("second-kind transform examples") {
    CHECK(stirling2_transform({1, 0, 0}, 0, 1) == FiniteSequence{1, 0, 0});
    CHECK(stirling2_transform({0, 1, 0, 0}, 0, 2) == FiniteSequence{0, 1, 2, 4});
    CHECK(stirling2_transform({0, 0, 1}, 1, 1) == FiniteSequence{0, 0, 1});
}

TEST_CASE("inverse transform examples") {
    CHECK(stirling1_inverse_transform({1, 0, 0}, 0, 1) == FiniteSequence{1, 0, 0});
    CHECK(stirling1_inverse_transform({0, 1, 2, 4}, 0, 2) == FiniteSequence{0, 1, 0, 0});
    CHECK(stirling1_inverse_transform({1, 1, 1}, 0, 1) == FiniteSequence{1, 1, 0});
}

TEST_CASE("dual transform examples") {
    // c = e_m picks out a single triangle column
    FiniteSequence c{0, 0, 1};
    auto t = cached_triangle(Kind::second, 1, rat(1, 2), 2);
    FiniteSequence a = dual_stirling2_transform(c, 2, 1, rat(1, 2));
    for (unsigned n = 0; n <= 2; ++n) CHECK(a[n] == t->at(2, n));

    CHECK(dual_stirling2_transform({1, 0, 0}, 2, 0, 1) == FiniteSequence{1, 0, 0});
    CHECK(dual_stirling2_transform({0, 1, 1}, 2, 0, 1) == FiniteSequence{0, 2, 1});
}

TEST_CASE("round trips recover random rational sequences") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 10);
    std::uniform_int_distribution<int> len(1, 12);
    for (int ri : {0, 2})
        for (const auto& lam : {rat(1, 2), rat(1), rat(3), rat(-1)})
            for (int trial = 0; trial < 50; ++trial) {
                FiniteSequence c(static_cast<unsigned>(len(rng)));
                for (auto& q : c) q = Rational(num(rng), den(rng));
                auto a = stirling2_transform(c, ri, lam);
                CHECK(stirling1_inverse_transform(a, ri, lam) == c);
                CHECK(stirling2_transform(stirling1_inverse_transform(c, ri, lam), ri, lam) == c);

                unsigned m = static_cast<unsigned>(c.size()) - 1;
                auto ad = dual_stirling2_transform(c, m, ri, lam);
                CHECK(dual_stirling1_inverse_transform(ad, m, ri, lam) == c);
                CHECK(dual_stirling2_transform(
                          dual_stirling1_inverse_transform(c, m, ri, lam), m, ri, lam) == c);
            }
}

TEST_CASE("empty and mismatched sequences") {
    CHECK(stirling2_transform({}, 0, 1).empty());
    CHECK_THROWS_AS(dual_stirling2_transform({1, 2}, 2, 0, 1), DomainError);
    CHECK_THROWS_AS(stirling2_transform({1}, 0, 0), DegenerateLambda);
}

TEST_CASE("cached triangles grow and stay consistent") {
    auto small = cached_triangle(Kind::second, 0, rat(5, 7), 3);
    auto large = cached_triangle(Kind::second, 0, rat(5, 7), 9);
    REQUIRE(large->n_max >= 9);
    for (unsigned n = 0; n <= 3; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(small->at(n, k) == large->at(n, k));
}
