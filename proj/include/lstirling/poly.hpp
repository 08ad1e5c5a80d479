#pragma once

#include "lstirling/rational.hpp"

#include <initializer_list>
#include <vector>

namespace lstirling {

/// Dense univariate polynomial over Rational, coefficients by ascending power.
/// Invariant: leading coefficient nonzero unless the polynomial is zero
/// (empty coefficient list, degree -1).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly zero() { return Poly{}; }
    static Poly constant(Rational c);
    /// c * x^n
    static Poly monomial(Rational c, int n);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace lstirling
