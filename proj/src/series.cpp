#include "lstirling/series.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/exact_core.hpp"
#include "lstirling/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace lstirling {

namespace {

void require_lambda_nonzero(const Rational& lambda) {
    if (lambda == 0) throw DegenerateLambda("series expansion needs lambda != 0");
}

double max_neg_r(const Rational& r) { return std::max(-to_double(r), 0.0); }

}  // namespace

SeriesTruncation recip_rising_series(unsigned k, const Rational& r, const Rational& lambda,
                                     unsigned N) {
    require_lambda_nonzero(lambda);
    if (N < k) throw DomainError("truncation order below leading index k");
    auto t = cached_triangle(Kind::second, r, lambda, N);
    SeriesTruncation s{SeriesKind::recip_rising_to_powers, k, r, lambda, N, {}, std::nullopt};
    s.coeffs.reserve(N - k + 1);
    for (unsigned n = k; n <= N; ++n) {
        Rational c = t->at(n, k);
        s.coeffs.push_back((n - k) % 2 == 1 ? -c : c);
    }
    return s;
}

SeriesEval recip_rising_series_eval(unsigned k, const Rational& r, const Rational& lambda,
                                    double x, unsigned N) {
    if (!(to_double(lambda) > 0)) throw ConvergenceDomain("needs lambda > 0");
    double bound = k * to_double(lambda) + max_neg_r(r);
    if (!(x > bound)) throw ConvergenceDomain("x must exceed k*lambda + max(-r,0)");

    SeriesTruncation s = recip_rising_series(k, r, lambda, N);
    // terms are computed in exact arithmetic and rounded once each; the
    // triangle entries grow like x^n so naive double powers could overflow
    Rational xr = rational_from_double(x);
    Rational inv_x = 1 / xr;
    Rational power = rational_pow(inv_x, static_cast<long>(k) + 1);
    Rational sum(0);
    Rational last(0);
    for (unsigned n = k; n <= N; ++n) {
        last = s.coeffs[n - k] * power;
        sum += last;
        power *= inv_x;
    }
    double last_abs = std::fabs(to_double(last));
    double estimate = N > k ? last_abs * static_cast<double>(N) / static_cast<double>(N - k)
                            : last_abs;
    return {to_double(sum), estimate};
}

double power_to_recip_rising(unsigned k, const Rational& r, const Rational& lambda, double x,
                             unsigned N) {
    if (!(to_double(lambda) > 0)) throw ConvergenceDomain("needs lambda > 0");
    if (!(x > 0) || !(x + to_double(r) > 0)) throw ConvergenceDomain("needs x > 0 and x + r > 0");
    if (N < k) throw DomainError("truncation order below leading index k");

    auto t = cached_triangle(Kind::first_unsigned, r, lambda, N);
    Rational xr = rational_from_double(x);
    Rational denom = rising_factorial_eval(xr + r, k + 1, lambda);
    double sum = 0.0, comp = 0.0;
    for (unsigned n = k; n <= N; ++n) {
        double term = to_double(t->at(n, k) / denom);
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        denom *= xr + r + Rational(n + 1) * lambda;
    }
    return sum;
}

std::vector<Rational> ogf_coefficients(unsigned k, const Rational& r, const Rational& lambda,
                                       unsigned N) {
    require_lambda_nonzero(lambda);
    if (N < k) throw DomainError("truncation order below leading index k");
    // denominator prod_{j=0..k} (1 - (r+j*lambda) x), expanded once
    std::vector<Rational> den{Rational(1)};
    for (unsigned j = 0; j <= k; ++j) {
        Rational root = r + Rational(j) * lambda;
        std::vector<Rational> next(den.size() + 1, Rational(0));
        for (std::size_t i = 0; i < den.size(); ++i) {
            next[i] += den[i];
            next[i + 1] -= root * den[i];
        }
        den = std::move(next);
    }
    // long division: sum_j den[j] * s[n-j] = [n == k]
    std::vector<Rational> series(N + 1, Rational(0));
    for (unsigned n = 0; n <= N; ++n) {
        Rational acc = n == k ? Rational(1) : Rational(0);
        for (std::size_t j = 1; j < den.size() && j <= n; ++j) acc -= den[j] * series[n - j];
        series[n] = acc;  // den[0] == 1
    }
    return {series.begin() + k, series.end()};
}

std::vector<Rational> egf_coefficients(unsigned k, const Rational& r, const Rational& lambda,
                                       unsigned N) {
    require_lambda_nonzero(lambda);
    if (N < k) throw DomainError("truncation order below leading index k");

    auto truncated_mul = [N](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> out(N + 1, Rational(0));
        for (std::size_t i = 0; i < a.size() && i <= N; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j + i <= N && j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };

    // e^{lambda t} - 1 and e^{r t}, coefficients of t^m to order N
    std::vector<Rational> expm1(N + 1), expr(N + 1);
    Rational lp(1), rp(1);
    for (unsigned m = 0; m <= N; ++m) {
        Rational inv_fact = 1 / Rational(factorial(m));
        expm1[m] = m == 0 ? Rational(0) : lp * inv_fact;
        expr[m] = rp * inv_fact;
        lp *= lambda;
        rp *= r;
    }

    std::vector<Rational> acc(N + 1, Rational(0));
    acc[0] = 1;
    for (unsigned i = 0; i < k; ++i) acc = truncated_mul(acc, expm1);
    acc = truncated_mul(acc, expr);

    Rational scale = 1 / (rational_pow(lambda, k) * Rational(factorial(k)));
    std::vector<Rational> out;
    out.reserve(N - k + 1);
    for (unsigned n = k; n <= N; ++n) out.push_back(acc[n] * scale * Rational(factorial(n)));
    return out;
}

double shifted_identity_eval(unsigned k, const Rational& lambda, double x, unsigned N) {
    if (k < 1) throw DomainError("shifted identity needs k >= 1");
    if (!(to_double(lambda) > 0)) throw ConvergenceDomain("needs lambda > 0");
    if (!(x > to_double(lambda))) throw ConvergenceDomain("needs x > lambda");
    if (N + 1 < k) throw DomainError("truncation order below leading index k-1");

    auto t = cached_triangle(Kind::first_unsigned, Rational(0), lambda, N + 1);
    Rational xr = rational_from_double(x);
    Rational denom = rising_factorial_eval(xr, k, lambda);  // x(x+lambda)...(x+(k-1)lambda)
    double sum = 0.0, comp = 0.0;
    for (unsigned n = k - 1; n <= N; ++n) {
        double term = to_double(t->at(n + 1, k) / denom);
        double y = term - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        denom *= xr + Rational(n + 1) * lambda;
    }
    return sum;
}

}  // namespace lstirling
