#include "lstirling/rational.hpp"

#include "lstirling/errors.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace lstirling {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);  // cpp_int rejects an explicit plus sign
    return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash));
        Integer den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view head = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || !is_integer_literal(frac) || frac[0] == '+' || frac[0] == '-')
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        bool negative = !head.empty() && head[0] == '-';
        Integer whole = head.empty() || head == "+" || head == "-" ? Integer(0)
                                                                   : abs(parse_integer(head));
        Integer den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        Integer num = whole * den + Integer(std::string(frac));
        if (negative) num = -num;
        return Rational(num, den);
    }

    return Rational(parse_integer(text));
}

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite double cannot become a rational");
    return Rational(x);  // exact: binary64 values are dyadic rationals
}

Rational rational_pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw DomainError("0 raised to a negative power");
        return 1 / rational_pow(q, -e);
    }
    Rational result(1), base(q);
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1u;
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer b(1);
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;  // exact: C(n,i+1) is an integer
    }
    return b;
}

}  // namespace lstirling
