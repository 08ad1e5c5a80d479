#pragma once

#include "lstirling/rational.hpp"

#include <vector>

namespace lstirling {

/// 1/((x+r)(x+r+lambda)...(x+r+k*lambda)) = sum_l coefficients[l]/(x+r+l*lambda).
/// coefficients[l] = (-1)^l C(k,l) / (lambda^k k!); independent of r.
struct PartialFractionForm {
    unsigned k = 0;
    Rational r;
    Rational lambda;
    std::vector<Rational> coefficients;  // index l = 0..k, pole at x = -r - l*lambda
};

/// Closed-form residue coefficients. Throws DegenerateLambda for lambda = 0
/// (poles collide).
PartialFractionForm pf_coefficients(unsigned k, const Rational& r, const Rational& lambda);

/// sum_l coefficients[l]/(x+r+l*lambda); equals the reciprocal rising
/// factorial at x. Throws PoleHit if x lands on a pole.
Rational pf_evaluate(const PartialFractionForm& form, const Rational& x);

/// Recombines sum_l K_l prod_{j != l}(x+r+j*lambda) symbolically and checks
/// it is the constant polynomial 1.
bool pf_verify(unsigned k, const Rational& r, const Rational& lambda);

}  // namespace lstirling
