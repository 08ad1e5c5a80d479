#include "lstirling/exact_core.hpp"

namespace lstirling {

Rational falling_factorial_eval(const Rational& x, unsigned n, const Rational& lambda) {
    Rational p(1);
    for (unsigned i = 0; i < n; ++i) p *= x - Rational(i) * lambda;
    return p;
}

Rational rising_factorial_eval(const Rational& x, unsigned n, const Rational& lambda) {
    Rational p(1);
    for (unsigned i = 0; i < n; ++i) p *= x + Rational(i) * lambda;
    return p;
}

Poly rising_factorial_poly(unsigned n, const Rational& lambda, const Rational& r) {
    Poly p = Poly::constant(1);
    for (unsigned i = 0; i < n; ++i)
        p *= Poly{r + Rational(i) * lambda, Rational(1)};  // x + r + i*lambda
    return p;
}

Poly falling_factorial_poly(unsigned n, const Rational& lambda) {
    Poly p = Poly::constant(1);
    for (unsigned i = 0; i < n; ++i) p *= Poly{-Rational(i) * lambda, Rational(1)};
    return p;
}

Rational lambda_binomial(const Rational& x, unsigned n, const Rational& lambda) {
    return falling_factorial_eval(x, n, lambda) / Rational(factorial(n));
}

}  // namespace lstirling
