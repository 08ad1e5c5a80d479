#pragma once

#include "lstirling/rational.hpp"

#include <optional>
#include <vector>

namespace lstirling {

enum class SeriesKind { recip_rising_to_powers, powers_to_recip_rising, ogf, egf };

/// Ordered coefficient list for one of the series expansions.
/// coeffs[i] is the coefficient for index n = k + i, k <= n <= order.
struct SeriesTruncation {
    SeriesKind kind;
    unsigned k = 0;
    Rational r;
    Rational lambda;
    unsigned order = 0;  // N
    std::vector<Rational> coeffs;
    std::optional<double> remainder_estimate;  // absent on exact coefficient paths
};

struct SeriesEval {
    double value = 0.0;
    double remainder_estimate = 0.0;
};

/// Coefficients of the reciprocal rising factorial as a series in 1/x:
/// coeffs for n = k..N are (-1)^(n-k) {n+r brace k+r}_{r,lambda}, each the
/// coefficient of (1/x)^(n+1).
SeriesTruncation recip_rising_series(unsigned k, const Rational& r, const Rational& lambda,
                                     unsigned N);

/// Partial sum of the series above at a binary64 point; requires lambda > 0
/// and x > k*lambda + max(-r, 0) so every ratio (r+l*lambda)/x is below 1.
SeriesEval recip_rising_series_eval(unsigned k, const Rational& r, const Rational& lambda,
                                    double x, unsigned N);

/// Partial sum of (1/x)^(k+1) = sum_n [n+r brack k+r]_{r,lambda} over the
/// reciprocal rising factorials; requires lambda > 0, x > 0, x + r > 0.
double power_to_recip_rising(unsigned k, const Rational& r, const Rational& lambda, double x,
                             unsigned N);

/// x^n coefficients (n = k..N) of x^k / ((1-rx)(1-(r+lambda)x)...(1-(r+k lambda)x)),
/// by exact power-series long division; these are {n+r brace k+r}_{r,lambda}.
std::vector<Rational> ogf_coefficients(unsigned k, const Rational& r, const Rational& lambda,
                                       unsigned N);

/// n! [t^n] of (1/(lambda^k k!)) (e^{lambda t} - 1)^k e^{r t} for n = k..N,
/// via exact truncated series arithmetic; same numbers as the ogf route.
std::vector<Rational> egf_coefficients(unsigned k, const Rational& r, const Rational& lambda,
                                       unsigned N);

/// Partial sum of (1/(x-lambda))^k = sum_{n>=k-1} [n+1 brack k]_lambda over
/// x(x+lambda)...(x+n*lambda); requires lambda > 0 and x > lambda.
double shifted_identity_eval(unsigned k, const Rational& lambda, double x, unsigned N);

}  // namespace lstirling
