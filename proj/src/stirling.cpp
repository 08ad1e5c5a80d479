#include "lstirling/stirling.hpp"

#include "lstirling/errors.hpp"
#include "lstirling/exact_core.hpp"

#include <sstream>

namespace lstirling {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::second: return "second";
        case Kind::first_unsigned: return "first_unsigned";
        case Kind::first_signed: return "first_signed";
    }
    return "?";
}

Kind kind_from_name(const std::string& name) {
    if (name == "second" || name == "s2") return Kind::second;
    if (name == "first_unsigned" || name == "s1u") return Kind::first_unsigned;
    if (name == "first_signed" || name == "s1s") return Kind::first_signed;
    throw ParseError("unknown triangle kind '" + name + "'");
}

Rational stirling2_r(unsigned n, unsigned k, const Rational& r, const Rational& lambda) {
    if (lambda == 0) throw DegenerateLambda("stirling2_r needs lambda != 0");
    Rational sum(0);
    for (unsigned l = 0; l <= k; ++l) {
        Rational term = Rational(binomial(k, l)) * rational_pow(Rational(l) * lambda + r, n);
        if ((k - l) % 2 == 1) term = -term;
        sum += term;
    }
    return sum / (rational_pow(lambda, k) * Rational(factorial(k)));
}

Rational stirling2(unsigned n, unsigned k, const Rational& lambda) {
    if (k > n) return 0;
    Rational sum(0);
    for (unsigned l = 0; l <= k; ++l) {
        Rational term = Rational(binomial(k, l)) * rational_pow(Rational(l), n);
        if ((k - l) % 2 == 1) term = -term;
        sum += term;
    }
    return rational_pow(lambda, static_cast<long>(n - k)) * sum / Rational(factorial(k));
}

Rational stirling1_unsigned_r(unsigned n, unsigned k, const Rational& r, const Rational& lambda) {
    if (k > n) return 0;
    return rising_factorial_poly(n, lambda, r).coeff(static_cast<int>(k));
}

Rational stirling1_signed(unsigned n, unsigned k, const Rational& lambda) {
    if (k > n) return 0;
    return falling_factorial_poly(n, lambda).coeff(static_cast<int>(k));
}

Rational stirling_number(const StirlingQuery& q) {
    if (q.k > q.n) return 0;
    switch (q.kind) {
        case Kind::second: return stirling2_r(q.n, q.k, q.r, q.lambda);
        case Kind::first_unsigned: return stirling1_unsigned_r(q.n, q.k, q.r, q.lambda);
        case Kind::first_signed: {
            Rational u = stirling1_unsigned_r(q.n, q.k, q.r, q.lambda);
            return (q.n - q.k) % 2 == 1 ? -u : u;
        }
    }
    return 0;
}

Triangle triangle(Kind kind, unsigned n_max, const Rational& r, const Rational& lambda) {
    if (kind == Kind::second && lambda == 0 && r != 0)
        throw DegenerateLambda("second-kind triangle needs lambda != 0 when r != 0");

    Triangle t{kind, r, lambda, n_max, {}};
    t.rows.reserve(n_max + 1);
    t.rows.push_back({Rational(1)});
    for (unsigned n = 0; n < n_max; ++n) {
        const auto& prev = t.rows.back();
        std::vector<Rational> row(n + 2, Rational(0));
        for (unsigned k = 0; k <= n + 1; ++k) {
            if (k > 0) row[k] += prev[k - 1];
            if (k <= n) {
                // second kind: factor k*lambda + r; first kind: n*lambda + r
                Rational factor = kind == Kind::second ? Rational(k) * lambda + r
                                                       : Rational(n) * lambda + r;
                row[k] += factor * prev[k];
            }
        }
        t.rows.push_back(std::move(row));
    }
    if (kind == Kind::first_signed) {
        for (unsigned n = 0; n <= n_max; ++n)
            for (unsigned k = 0; k <= n; ++k)
                if ((n - k) % 2 == 1) t.rows[n][k] = -t.rows[n][k];
    }
    return t;
}

std::string Triangle::to_csv() const {
    std::ostringstream out;
    out << "n,k,value\n";
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            out << n << ',' << k << ',' << format_rational(rows[n][k]) << '\n';
    return out.str();
}

std::string Triangle::to_json() const {
    std::ostringstream out;
    out << "{\"kind\":\"" << kind_name(kind) << "\",\"r\":\"" << format_rational(r)
        << "\",\"lambda\":\"" << format_rational(lambda) << "\",\"rows\":[";
    for (unsigned n = 0; n <= n_max; ++n) {
        if (n) out << ',';
        out << '[';
        for (unsigned k = 0; k <= n; ++k) {
            if (k) out << ',';
            out << '"' << format_rational(rows[n][k]) << '"';
        }
        out << ']';
    }
    out << "]}";
    return out.str();
}

}  // namespace lstirling
