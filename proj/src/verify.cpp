#include "lstirling/verify.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/exact_core.hpp"
#include "lstirling/integrals.hpp"
#include "lstirling/partial_fractions.hpp"
#include "lstirling/series.hpp"
#include "lstirling/stirling.hpp"
#include "lstirling/transforms.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace lstirling {

namespace {

struct Checker {
    unsigned checks = 0;
    std::string first_failure;

    bool ok() const { return first_failure.empty(); }

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && first_failure.empty()) first_failure = what;
    }
};

std::vector<Rational> grid_or(const std::optional<Rational>& fixed,
                              std::vector<Rational> defaults) {
    if (fixed) return {*fixed};
    return defaults;
}

std::string describe(const char* tag, unsigned n, unsigned k, const Rational& r,
                     const Rational& lambda) {
    std::ostringstream out;
    out << tag << " n=" << n << " k=" << k << " r=" << format_rational(r)
        << " lambda=" << format_rational(lambda);
    return out.str();
}

void suite_orthogonality(Checker& c, const VerifyBounds& b) {
    unsigned n_max = std::min(b.n_max, 20u);
    auto rs = grid_or(b.r, {0, 1, 2, 3});
    auto lambdas = grid_or(b.lambda, {Rational(1, 2), 1, 2, 3, -1});
    for (const auto& r : rs)
        for (const auto& lam : lambdas)
            for (unsigned n = 0; n <= n_max; ++n)
                for (unsigned l = 0; l <= n; ++l)
                    for (auto side : {OrthogonalitySide::a, OrthogonalitySide::b})
                        c.expect(orthogonality_defect(n, l, r, lam, side) == 0,
                                 describe("orthogonality defect", n, l, r, lam));
}

void suite_scaling(Checker& c, const VerifyBounds& b) {
    unsigned n_max = std::min(b.n_max, 20u);
    auto lambdas = grid_or(b.lambda, {Rational(1, 2), 2, 3, -1, Rational(7, 3)});
    for (const auto& lam : lambdas)
        for (unsigned n = 0; n <= n_max; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                Rational scale = rational_pow(lam, static_cast<long>(n - k));
                c.expect(stirling2(n, k, lam) == scale * stirling2(n, k, 1),
                         describe("second-kind scaling", n, k, 0, lam));
                c.expect(stirling1_unsigned_r(n, k, 0, lam) ==
                             scale * stirling1_unsigned_r(n, k, 0, 1),
                         describe("first-kind scaling", n, k, 0, lam));
            }
}

void suite_inversion(Checker& c, const VerifyBounds& b) {
    unsigned len = std::min(b.n_max, 20u) + 1;
    std::mt19937_64 rng(20240814);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    auto rs = grid_or(b.r, {0, 1, 2});
    auto lambdas = grid_or(b.lambda, {Rational(1, 2), 1, 2, -1});
    for (const auto& r : rs)
        for (const auto& lam : lambdas)
            for (int trial = 0; trial < 50; ++trial) {
                FiniteSequence seq(len);
                for (auto& q : seq) q = Rational(num(rng), den(rng));
                c.expect(stirling1_inverse_transform(stirling2_transform(seq, r, lam), r, lam) ==
                             seq,
                         describe("lower round trip", len - 1, trial, r, lam));
                c.expect(dual_stirling1_inverse_transform(
                             dual_stirling2_transform(seq, len - 1, r, lam), len - 1, r, lam) ==
                             seq,
                         describe("dual round trip", len - 1, trial, r, lam));
            }
}

void suite_pf(Checker& c, const VerifyBounds& b) {
    unsigned k_max = std::min(b.k_max, 10u);
    auto rs = grid_or(b.r, {0, 5});
    auto lambdas = grid_or(b.lambda, {1, Rational(1, 3), -2});
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 9);
    for (const auto& r : rs)
        for (const auto& lam : lambdas)
            for (unsigned k = 0; k <= k_max; ++k) {
                c.expect(pf_verify(k, r, lam), describe("pf recombination", k, 0, r, lam));
                auto form = pf_coefficients(k, r, lam);
                Rational coeff_sum(0);
                for (const auto& q : form.coefficients) coeff_sum += q;
                c.expect(k == 0 || coeff_sum == 0, describe("pf coefficient sum", k, 0, r, lam));
                c.expect(form.coefficients == pf_coefficients(k, 0, lam).coefficients,
                         describe("pf r-independence", k, 0, r, lam));
                for (int trial = 0; trial < 20; ++trial) {
                    Rational x(num(rng), den(rng));
                    bool pole = false;
                    for (unsigned l = 0; l <= k; ++l)
                        if (x + r + Rational(l) * lam == 0) pole = true;
                    if (pole) continue;
                    c.expect(pf_evaluate(form, x) ==
                                 1 / rising_factorial_eval(x + r, k + 1, lam),
                             describe("pf evaluation", k, trial, r, lam));
                }
            }
}

void suite_series(Checker& c, const VerifyBounds& b) {
    unsigned k_max = std::min(b.k_max, 8u);
    unsigned N = std::min(b.n_max + 8, 20u);
    auto rs = grid_or(b.r, {0, 1, 2});
    auto lambdas = grid_or(b.lambda, {Rational(1, 2), 1, 2});
    for (const auto& r : rs)
        for (const auto& lam : lambdas)
            for (unsigned k = 0; k <= k_max; ++k) {
                auto signed_coeffs = recip_rising_series(k, r, lam, N);
                auto ogf = ogf_coefficients(k, r, lam, N);
                auto egf = egf_coefficients(k, r, lam, N);
                bool agree = ogf == egf;
                for (unsigned i = 0; i < ogf.size() && agree; ++i) {
                    Rational unsigned_coeff =
                        i % 2 == 1 ? -signed_coeffs.coeffs[i] : signed_coeffs.coeffs[i];
                    agree = unsigned_coeff == ogf[i];
                }
                c.expect(agree, describe("gf coefficient equivalence", N, k, r, lam));

                // truncation identity: series(1/x) * <x+r>_{k+1} = 1 + O((1/x)^(N-k+1))
                Poly series_in_u;  // u = 1/x
                for (unsigned n = k; n <= N; ++n)
                    series_in_u +=
                        Poly::monomial(signed_coeffs.coeffs[n - k], static_cast<int>(n) + 1);
                Poly rising = rising_factorial_poly(k + 1, lam, r);
                Poly reversed;  // u^(k+1) * rising(1/u)
                for (int j = 0; j <= rising.degree(); ++j)
                    reversed += Poly::monomial(rising.coeff(j), static_cast<int>(k) + 1 - j);
                Poly product = series_in_u * reversed;  // want u^(k+1) + 0*u^(k+2) ... 0*u^(N+1)
                bool identity = product.coeff(static_cast<int>(k) + 1) == 1;
                for (unsigned d = k + 2; d <= N + 1 && identity; ++d)
                    identity = product.coeff(static_cast<int>(d)) == 0;
                c.expect(identity, describe("series truncation identity", N, k, r, lam));
            }

    auto spot = recip_rising_series_eval(2, 0, 1, 10.0, 60);
    c.expect(std::fabs(spot.value - 1.0 / 1320.0) < 1e-12, "recip series spot value x=10 k=2");
    // telescoping partial sums are exactly 1 - 1/(N+2) and
    // 1/9 - (2/3)/((N+1)(N+2)(N+3)); the limits are approached like 1/N^p
    c.expect(std::fabs(shifted_identity_eval(1, 1, 2.0, 60) - (1.0 - 1.0 / 62.0)) < 1e-12,
             "shifted identity k=1 x=2 partial sum");
    c.expect(std::fabs(power_to_recip_rising(1, 0, 1, 3.0, 60) -
                       (1.0 / 9.0 - (2.0 / 3.0) / (61.0 * 62.0 * 63.0))) < 1e-12,
             "inverse power series k=1 x=3 partial sum");
}

void suite_integral(Checker& c, const VerifyBounds& b) {
    double tol = b.tol > 0 ? b.tol : 1e-9;
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double lam : {0.5, 1.0, 2.0})
            for (unsigned k = 1; k <= 5; ++k)
                for (int ri : {0, 1, 2}) {
                    TailIntegralSpec spec{a, k, Rational(ri), lam};
                    double closed = tail_integral_closed_form(spec);
                    double quad = tail_integral_quadrature(spec, tol * 0.5);
                    std::ostringstream what;
                    what << "tail integral a=" << a << " k=" << k << " r=" << ri
                         << " lambda=" << lam << " diff=" << std::fabs(closed - quad);
                    c.expect(std::fabs(closed - quad) <= tol, what.str());
                }
}

void suite_frullani(Checker& c, const VerifyBounds& b) {
    for (double lam : {0.5, 1.0, 2.0})
        for (unsigned k = 1; k <= 3; ++k) {
            double prev = std::fabs(frullani_log_sum(1e2, k, lam));
            for (double bb : {1e3, 1e4, 1e5, 1e6}) {
                double cur = std::fabs(frullani_log_sum(bb, k, lam));
                std::ostringstream what;
                what << "frullani decay b=" << bb << " k=" << k << " lambda=" << lam;
                c.expect(cur < prev, what.str());
                prev = cur;
            }
        }
    double v = frullani_log_sum(1e6, 1, 1.0);
    c.expect(std::fabs(v - (-1e-6)) <= b.tol, "frullani first-order value at b=1e6");
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"orthogonality", "scaling", "inversion", "pf", "series", "integral", "frullani"};
}

VerifyReport run_suite(const std::string& name, const VerifyBounds& bounds) {
    Checker checker;
    if (name == "orthogonality")
        suite_orthogonality(checker, bounds);
    else if (name == "scaling")
        suite_scaling(checker, bounds);
    else if (name == "inversion")
        suite_inversion(checker, bounds);
    else if (name == "pf")
        suite_pf(checker, bounds);
    else if (name == "series")
        suite_series(checker, bounds);
    else if (name == "integral")
        suite_integral(checker, bounds);
    else if (name == "frullani")
        suite_frullani(checker, bounds);
    else
        throw UnknownSuite("unknown verification suite '" + name + "'");

    VerifyReport report;
    report.suite = name;
    report.passed = checker.ok();
    report.checks = checker.checks;
    report.first_failure = checker.first_failure;
    std::ostringstream summary;
    if (report.passed)
        summary << "suite " << name << ": pass, " << checker.checks << " checks, 0 defects";
    else
        summary << "suite " << name << ": FAIL at [" << checker.first_failure << "] ("
                << checker.checks << " checks)";
    report.summary = summary.str();
    return report;
}

}  // namespace lstirling
