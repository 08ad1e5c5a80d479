#pragma once

#include "lstirling/rational.hpp"

#include <string>
#include <vector>

namespace lstirling {

enum class Kind { second, first_unsigned, first_signed };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);  // accepts full names and s2/s1u/s1s

/// One number in a triangle: (kind, n, k, r, lambda). Queries with k > n are 0.
struct StirlingQuery {
    Kind kind;
    unsigned n = 0;
    unsigned k = 0;
    Rational r;
    Rational lambda;
};

/// Second kind, r-shifted, via the explicit alternating sum
/// (1/(lambda^k k!)) sum_l C(k,l)(-1)^(k-l)(l*lambda+r)^n.
/// Throws DegenerateLambda for lambda = 0.
Rational stirling2_r(unsigned n, unsigned k, const Rational& r, const Rational& lambda);

/// Second kind, r = 0: lambda^(n-k) times the classical explicit sum.
/// Defined for every lambda including 0 (delta_{n,k} there).
Rational stirling2(unsigned n, unsigned k, const Rational& lambda);

/// Unsigned first kind, r-shifted: x^k coefficient of the rising factorial
/// (x+r)(x+r+lambda)...(x+r+(n-1)lambda).
Rational stirling1_unsigned_r(unsigned n, unsigned k, const Rational& r, const Rational& lambda);

/// Signed first kind: (-1)^(n-k) times the unsigned number at r = 0; equals
/// the x^k coefficient of the falling factorial.
Rational stirling1_signed(unsigned n, unsigned k, const Rational& lambda);

/// Dispatches on query.kind (first_signed uses r = 0 semantics only when
/// query.r is 0; with r it applies the same (-1)^(n-k) sign to the r-shifted
/// unsigned number).
Rational stirling_number(const StirlingQuery& q);

/// Row-indexed table of entries for 0 <= k <= n <= n_max at fixed (kind, r, lambda).
struct Triangle {
    Kind kind;
    Rational r;
    Rational lambda;
    unsigned n_max = 0;
    std::vector<std::vector<Rational>> rows;

    const Rational& at(unsigned n, unsigned k) const { return rows[n][k]; }

    /// "n,k,value" header, one entry per line, exact rational strings.
    std::string to_csv() const;
    /// {"kind":..., "r":"p/q", "lambda":"p/q", "rows":[["1"],["0","1"],...]}
    std::string to_json() const;
};

/// Builds the full triangle by the row recurrence (explicit sums are used as
/// spot checks in tests). Throws DegenerateLambda for kind=second with
/// lambda = 0 and r != 0, where the explicit-sum route is undefined.
Triangle triangle(Kind kind, unsigned n_max, const Rational& r, const Rational& lambda);

}  // namespace lstirling
