#include "lstirling/partial_fractions.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/poly.hpp"

namespace lstirling {

PartialFractionForm pf_coefficients(unsigned k, const Rational& r, const Rational& lambda) {
    if (lambda == 0) throw DegenerateLambda("partial fractions need distinct poles (lambda != 0)");
    PartialFractionForm form{k, r, lambda, {}};
    Rational scale = 1 / (rational_pow(lambda, k) * Rational(factorial(k)));
    form.coefficients.reserve(k + 1);
    for (unsigned l = 0; l <= k; ++l) {
        Rational c = Rational(binomial(k, l)) * scale;
        form.coefficients.push_back(l % 2 == 1 ? -c : c);
    }
    return form;
}

Rational pf_evaluate(const PartialFractionForm& form, const Rational& x) {
    Rational sum(0);
    for (unsigned l = 0; l <= form.k; ++l) {
        Rational d = x + form.r + Rational(l) * form.lambda;
        if (d == 0) throw PoleHit("evaluation point hits pole l=" + std::to_string(l));
        sum += form.coefficients[l] / d;
    }
    return sum;
}

bool pf_verify(unsigned k, const Rational& r, const Rational& lambda) {
    PartialFractionForm form = pf_coefficients(k, r, lambda);
    Poly sum;
    for (unsigned l = 0; l <= k; ++l) {
        Poly prod = Poly::constant(form.coefficients[l]);
        for (unsigned j = 0; j <= k; ++j) {
            if (j == l) continue;
            prod *= Poly{r + Rational(j) * lambda, Rational(1)};
        }
        sum += prod;
    }
    return sum == Poly::constant(1);
}

}  // namespace lstirling
