#pragma once

#include "lstirling/rational.hpp"

namespace lstirling {

/// Parameters of the tail integral over (a, infinity) of the reciprocal of
/// (x+r)(x+r+lambda)...(x+r+k*lambda). Requires a > 0, lambda > 0, k >= 1.
struct TailIntegralSpec {
    double a = 1.0;
    unsigned k = 1;
    Rational r;
    double lambda = 1.0;
};

/// (1/(k! lambda^k)) sum_l C(k,l)(-1)^(l+1) log(a+r+l*lambda).
/// Terms are accumulated in ascending magnitude with compensated summation;
/// the alternating log sum cancels heavily for large a.
double tail_integral_closed_form(const TailIntegralSpec& spec);

/// Adaptive Gauss-Kronrod quadrature of the tail integral after the
/// substitution x = a + t/(1-t) onto t in [0,1). Absolute error target tol;
/// throws ToleranceNotMet if refinement cannot certify it.
double tail_integral_quadrature(const TailIntegralSpec& spec, double tol);

/// Partial sum (n = k..N) of the series for 1/(k a^k):
/// sum_n [n+r brack k+r]_{r,lambda} (1/(n! lambda^n)) sum_l C(n,l)(-1)^(l+1) log(a+r+l*lambda).
/// The inner alternating sums cancel like 2^n, so they are evaluated with
/// exact binomials and extended-precision logs before rounding to binary64.
double inverse_power_series(double a, unsigned k, const Rational& r, double lambda, unsigned N);

struct InversePowerResult {
    double value = 0.0;
    unsigned terms_used = 0;  // last n included
    bool converged = false;
};

/// Same series with the stopping rule: halt once three consecutive terms are
/// below tol*|partial sum|, never exceeding n = n_cap.
InversePowerResult inverse_power_series_adaptive(double a, unsigned k, const Rational& r,
                                                 double lambda, double tol,
                                                 unsigned n_cap = 500);

/// sum_l C(k,l)(-1)^l log(b+l*lambda); tends to 0 as b grows.
double frullani_log_sum(double b, unsigned k, double lambda);

}  // namespace lstirling
