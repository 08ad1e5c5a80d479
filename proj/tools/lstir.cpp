#include "lstirling/errors.hpp"
#include "lstirling/exact_core.hpp"
#include "lstirling/integrals.hpp"
#include "lstirling/partial_fractions.hpp"
#include "lstirling/series.hpp"
#include "lstirling/stirling.hpp"
#include "lstirling/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using nlohmann::json;
using namespace lstirling;

Rational parse_rat_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

json rational_list(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"lambda-Stirling numbers: exact triangles, transforms, series and tail integrals"};
    app.require_subcommand(1);

    // table
    std::string table_kind = "s2", table_lambda = "1", table_r = "0", table_format = "csv";
    unsigned table_nmax = 8;
    auto* table = app.add_subcommand("table", "print a Stirling triangle");
    table->add_option("--kind", table_kind, "triangle kind")
        ->check(CLI::IsMember({"s2", "s1u", "s1s"}))
        ->required();
    table->add_option("--nmax", table_nmax, "largest row index")->required();
    table->add_option("--lambda", table_lambda, "lambda as p/q, integer or decimal")->required();
    table->add_option("--r", table_r, "shift r as p/q, integer or decimal")->required();
    table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

    // verify
    std::string verify_suite;
    unsigned verify_nmax = 12, verify_kmax = 8;
    std::string verify_lambda, verify_r;
    double verify_tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "run an identity verification suite");
    verify->add_option("--suite", verify_suite, "suite name")
        ->check(CLI::IsMember(suite_names()))
        ->required();
    verify->add_option("--nmax", verify_nmax, "exact-path bound (<= 20)")
        ->check(CLI::Range(0u, 20u));
    verify->add_option("--kmax", verify_kmax, "factor-count bound (<= 10)")
        ->check(CLI::Range(0u, 10u));
    verify->add_option("--lambda", verify_lambda, "restrict lambda grid to one value");
    verify->add_option("--r", verify_r, "restrict r grid to one value");
    verify->add_option("--tol", verify_tol, "numeric tolerance");

    // series
    std::string series_mode, series_lambda = "1", series_r = "0";
    unsigned series_k = 0, series_terms = 40;
    double series_x = 2.0;
    bool have_x = false;
    auto* series = app.add_subcommand("series", "series expansions and evaluations");
    series->add_option("mode", series_mode, "series family")
        ->check(CLI::IsMember({"recip-rising", "inverse-power", "ogf", "egf", "shifted"}))
        ->required();
    series->add_option("--k", series_k)->required();
    series->add_option("--lambda", series_lambda)->required();
    series->add_option("--r", series_r)->required();
    auto* xopt = series->add_option("--x", series_x, "evaluation point");
    series->add_option("--terms", series_terms, "truncation order N");

    // pf
    unsigned pf_k = 1;
    std::string pf_lambda = "1", pf_r = "0", pf_format = "plain";
    auto* pf = app.add_subcommand("pf", "partial fraction coefficients");
    pf->add_option("--k", pf_k)->required();
    pf->add_option("--lambda", pf_lambda)->required();
    pf->add_option("--r", pf_r)->required();
    pf->add_option("--format", pf_format)->check(CLI::IsMember({"plain", "json"}));

    // integrate
    double int_a = 1.0, int_lambda = 1.0, int_tol = 1e-10;
    unsigned int_k = 1;
    std::string int_r = "0";
    auto* integrate = app.add_subcommand("integrate", "tail integral: closed form vs quadrature");
    integrate->add_option("--a", int_a)->required();
    integrate->add_option("--k", int_k)->required();
    integrate->add_option("--lambda", int_lambda)->required();
    integrate->add_option("--r", int_r)->required();
    integrate->add_option("--tol", int_tol);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*table) {
        Triangle t = triangle(kind_from_name(table_kind), table_nmax,
                              parse_rat_flag(table_r, "--r"),
                              parse_rat_flag(table_lambda, "--lambda"));
        std::cout << (table_format == "json" ? t.to_json() + "\n" : t.to_csv());
        return 0;
    }

    if (*verify) {
        VerifyBounds bounds;
        bounds.n_max = verify_nmax;
        bounds.k_max = verify_kmax;
        bounds.tol = verify_tol;
        if (!verify_lambda.empty()) bounds.lambda = parse_rat_flag(verify_lambda, "--lambda");
        if (!verify_r.empty()) bounds.r = parse_rat_flag(verify_r, "--r");
        VerifyReport report = run_suite(verify_suite, bounds);
        std::cout << report.summary << "\n";
        return report.passed ? 0 : 1;
    }

    if (*series) {
        Rational lam = parse_rat_flag(series_lambda, "--lambda");
        Rational r = parse_rat_flag(series_r, "--r");
        have_x = xopt->count() > 0;
        json out{{"k", series_k}, {"r", format_rational(r)}, {"lambda", format_rational(lam)},
                 {"N", series_terms}};
        if (series_mode == "recip-rising") {
            out["kind"] = "recip_rising_to_powers";
            auto s = recip_rising_series(series_k, r, lam, series_terms);
            out["coeffs"] = rational_list(s.coeffs);
            if (have_x) {
                auto eval = recip_rising_series_eval(series_k, r, lam, series_x, series_terms);
                out["value"] = eval.value;
                out["remainder_estimate"] = eval.remainder_estimate;
            }
        } else if (series_mode == "inverse-power") {
            out["kind"] = "powers_to_recip_rising";
            if (!have_x) throw DomainError("inverse-power needs --x");
            out["value"] = power_to_recip_rising(series_k, r, lam, series_x, series_terms);
        } else if (series_mode == "ogf") {
            out["kind"] = "ogf";
            out["coeffs"] = rational_list(ogf_coefficients(series_k, r, lam, series_terms));
        } else if (series_mode == "egf") {
            out["kind"] = "egf";
            out["coeffs"] = rational_list(egf_coefficients(series_k, r, lam, series_terms));
        } else {  // shifted
            out["kind"] = "shifted";
            if (!have_x) throw DomainError("shifted needs --x");
            out["value"] = shifted_identity_eval(series_k, lam, series_x, series_terms);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (*pf) {
        auto form = pf_coefficients(pf_k, parse_rat_flag(pf_r, "--r"),
                                    parse_rat_flag(pf_lambda, "--lambda"));
        if (pf_format == "json") {
            json out{{"k", form.k},
                     {"r", format_rational(form.r)},
                     {"lambda", format_rational(form.lambda)},
                     {"coefficients", rational_list(form.coefficients)}};
            std::cout << out.dump() << "\n";
        } else {
            for (const auto& c : form.coefficients) std::cout << format_rational(c) << "\n";
        }
        return 0;
    }

    if (*integrate) {
        TailIntegralSpec spec{int_a, int_k, parse_rat_flag(int_r, "--r"), int_lambda};
        double closed = tail_integral_closed_form(spec);
        double quad = tail_integral_quadrature(spec, int_tol);
        json out{{"a", int_a},          {"k", int_k},
                 {"r", format_rational(spec.r)}, {"lambda", int_lambda},
                 {"closed_form", closed}, {"quadrature", quad},
                 {"abs_diff", std::abs(closed - quad)}};
        std::cout << out.dump() << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
