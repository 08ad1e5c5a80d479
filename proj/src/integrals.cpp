#include "lstirling/integrals.hpp"

#include "lstirling/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace lstirling {

namespace {

// precision for the inner alternating log sums: exact up to ~2^660 worth of
// binomial cancellation, enough for the n <= 500 cap
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>>;

void check_spec(const TailIntegralSpec& spec) {
    if (!(spec.a > 0)) throw DomainError("tail integral needs a > 0");
    if (!(spec.lambda > 0)) throw DomainError("tail integral needs lambda > 0");
    if (spec.k < 1) throw DomainError("tail integral needs k >= 1");
    if (spec.r < 0) throw DomainError("tail integral needs r >= 0");
}

/// Compensated sum in ascending order of magnitude.
double sorted_kahan_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    double sum = 0.0, comp = 0.0;
    for (double t : terms) {
        double y = t - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum;
}

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1]
struct GK15Result {
    double value;
    double error;
};

template <typename F>
GK15Result gk15(const F& f, double a, double b) {
    static const double node[8] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
        0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
    static const double wk[8] = {
        0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
        0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
    static const double wg[8] = {
        0.417959183673469, 0.0, 0.381830050505119, 0.0,
        0.279705391489277, 0.0, 0.129484966168870, 0.0};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double f0 = f(mid);
    double kron = wk[0] * f0;
    double gauss = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        double fi = f(mid - half * node[i]) + f(mid + half * node[i]);
        kron += wk[i] * fi;
        gauss += wg[i] * fi;
    }
    kron *= half;
    gauss *= half;
    double err = 200.0 * std::fabs(kron - gauss);
    err *= std::sqrt(err);
    return {kron, std::max(err, 1e-300)};
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double tol, int depth) {
    GK15Result whole = gk15(f, a, b);
    if (whole.error <= tol) return whole.value;
    if (depth <= 0)
        throw ToleranceNotMet("adaptive quadrature exhausted subdivision depth");
    double mid = 0.5 * (a + b);
    // left before right: deterministic accumulation order
    return adaptive_gk(f, a, mid, 0.5 * tol, depth - 1) +
           adaptive_gk(f, mid, b, 0.5 * tol, depth - 1);
}

BigFloat to_bigfloat(const Rational& q) {
    return BigFloat(numerator(q)) / BigFloat(denominator(q));
}

// shared body for the fixed-N and adaptive variants; stop() sees each term
double inverse_power_sum(double a, unsigned k, const Rational& r, double lambda, unsigned n_cap,
                         const std::function<bool(unsigned, double, double)>& stop,
                         unsigned* last_n, bool* converged) {
    if (!(a > 0)) throw DomainError("series needs a > 0");
    if (!(lambda > 0)) throw DomainError("series needs lambda > 0");
    if (k < 1) throw DomainError("series needs k >= 1");
    if (r < 0) throw DomainError("series needs r >= 0");
    if (n_cap < k) throw DomainError("truncation below leading index k");

    Rational lam = rational_from_double(lambda);
    Rational a_rat = rational_from_double(a);

    std::vector<BigFloat> logs{log(to_bigfloat(a_rat + r))};  // log(a + r + l*lambda)
    std::vector<Rational> row{Rational(1)};                   // [n+r brack j+r], j = 0..n
    std::vector<Integer> binom{Integer(1)};                   // Pascal row n

    BigFloat partial = 0;
    Rational n_fact(1), lam_pow(1);
    unsigned n_used = k;
    bool done = false;
    for (unsigned n = 1; n <= n_cap; ++n) {
        n_fact *= n;
        lam_pow *= lam;
        binom.push_back(0);
        for (unsigned l = n; l >= 1; --l) binom[l] += binom[l - 1];
        Rational factor = Rational(n - 1) * lam + r;
        std::vector<Rational> next(n + 1, Rational(0));
        for (unsigned j = 0; j <= n; ++j) {
            if (j > 0) next[j] += row[j - 1];
            if (j < n) next[j] += factor * row[j];
        }
        row = std::move(next);
        logs.push_back(log(to_bigfloat(a_rat + r + Rational(n) * lam)));
        if (n < k) continue;

        BigFloat inner = 0;
        for (unsigned l = 0; l <= n; ++l) {
            BigFloat t = BigFloat(binom[l]) * logs[l];
            inner += l % 2 == 0 ? -t : t;
        }
        BigFloat term = to_bigfloat(row[k] / (n_fact * lam_pow)) * inner;
        partial += term;
        n_used = n;
        if (stop(n, term.convert_to<double>(), partial.convert_to<double>())) {
            done = true;
            break;
        }
    }
    if (last_n) *last_n = n_used;
    if (converged) *converged = done;
    return partial.convert_to<double>();
}

}  // namespace

double tail_integral_closed_form(const TailIntegralSpec& spec) {
    check_spec(spec);
    double rd = to_double(spec.r);
    std::vector<double> terms;
    terms.reserve(spec.k + 1);
    for (unsigned l = 0; l <= spec.k; ++l) {
        double t = to_double(Rational(binomial(spec.k, l))) *
                   std::log(spec.a + rd + l * spec.lambda);
        terms.push_back(l % 2 == 0 ? -t : t);
    }
    double sum = sorted_kahan_sum(std::move(terms));
    double prefactor = 1.0;
    for (unsigned i = 1; i <= spec.k; ++i) prefactor /= i * spec.lambda;
    return prefactor * sum;
}

double tail_integral_quadrature(const TailIntegralSpec& spec, double tol) {
    check_spec(spec);
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    double rd = to_double(spec.r);
    auto integrand = [&](double t) {
        double u = 1.0 - t;
        double x = spec.a + t / u;
        double denom = 1.0;
        for (unsigned l = 0; l <= spec.k; ++l) denom *= x + rd + l * spec.lambda;
        return 1.0 / (denom * u * u);
    };
    return adaptive_gk(integrand, 0.0, 1.0, tol, 40);
}

double inverse_power_series(double a, unsigned k, const Rational& r, double lambda, unsigned N) {
    auto never = [N](unsigned n, double, double) { return n >= N; };
    return inverse_power_sum(a, k, r, lambda, N, never, nullptr, nullptr);
}

InversePowerResult inverse_power_series_adaptive(double a, unsigned k, const Rational& r,
                                                 double lambda, double tol, unsigned n_cap) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    InversePowerResult result;
    unsigned small_streak = 0;
    auto stop = [&](unsigned, double term, double partial) {
        if (std::fabs(term) < tol * std::fabs(partial))
            ++small_streak;
        else
            small_streak = 0;
        return small_streak >= 3;
    };
    result.value = inverse_power_sum(a, k, r, lambda, n_cap, stop, &result.terms_used,
                                     &result.converged);
    return result;
}

double frullani_log_sum(double b, unsigned k, double lambda) {
    if (!(b > 0) || !(lambda > 0) || k < 1)
        throw DomainError("frullani log sum needs b, lambda > 0 and k >= 1");
    // the k-th finite difference of log cancels far below double precision
    // (about lambda^k (k-1)!/b^k), so accumulate in extended precision
    BigFloat sum(0);
    for (unsigned l = 0; l <= k; ++l) {
        BigFloat t = BigFloat(binomial(k, l)) * log(BigFloat(b) + BigFloat(l) * BigFloat(lambda));
        sum += l % 2 == 0 ? t : -t;
    }
    return sum.convert_to<double>();
}

}  // namespace lstirling
