#pragma once

#include "lstirling/poly.hpp"
#include "lstirling/rational.hpp"

namespace lstirling {

/// x(x-lambda)(x-2 lambda)...(x-(n-1) lambda); 1 for n = 0.
Rational falling_factorial_eval(const Rational& x, unsigned n, const Rational& lambda);

/// x(x+lambda)...(x+(n-1) lambda); 1 for n = 0.
Rational rising_factorial_eval(const Rational& x, unsigned n, const Rational& lambda);

/// (x+r)(x+r+lambda)...(x+r+(n-1) lambda) expanded in powers of x.
/// Degree n, monic. Its x^k coefficients are the unsigned first-kind numbers.
Poly rising_factorial_poly(unsigned n, const Rational& lambda, const Rational& r);

/// x(x-lambda)...(x-(n-1) lambda) expanded in powers of x.
/// Its x^k coefficients are the signed first-kind numbers.
Poly falling_factorial_poly(unsigned n, const Rational& lambda);

/// Generalized binomial coefficient: falling factorial over n!.
Rational lambda_binomial(const Rational& x, unsigned n, const Rational& lambda);

}  // namespace lstirling
