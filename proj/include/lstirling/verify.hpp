#pragma once

#include "lstirling/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lstirling {

struct VerifyBounds {
    unsigned n_max = 12;
    unsigned k_max = 8;
    std::optional<Rational> lambda;  // restrict the parameter grid when set
    std::optional<Rational> r;
    double tol = 1e-9;
};

struct VerifyReport {
    std::string suite;
    bool passed = false;
    unsigned checks = 0;
    std::string first_failure;  // empty when passed
    std::string summary;        // one human-readable line
};

/// Suites: orthogonality, scaling, inversion, pf, series, integral, frullani.
/// Throws UnknownSuite for any other name.
VerifyReport run_suite(const std::string& name, const VerifyBounds& bounds);

std::vector<std::string> suite_names();

}  // namespace lstirling
