#include "lstirling/poly.hpp"

#include <algorithm>
#include <utility>

namespace lstirling {

namespace {
const Rational kZero{0};
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(Rational c) {
    Poly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(Rational c, int n) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(n) + 1, Rational(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace lstirling
