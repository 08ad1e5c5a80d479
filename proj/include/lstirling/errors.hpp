#pragma once

#include <stdexcept>
#include <string>

namespace lstirling {

/// lambda = 0 where a formula needs distinct poles or a 1/lambda^k prefactor.
struct DegenerateLambda : std::domain_error {
    explicit DegenerateLambda(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation point coincides with a pole of a partial-fraction form.
struct PoleHit : std::domain_error {
    explicit PoleHit(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation point outside the guaranteed convergence region of a series.
struct ConvergenceDomain : std::domain_error {
    explicit ConvergenceDomain(const std::string& what) : std::domain_error(what) {}
};

/// Parameter outside the domain of an analytic formula (a <= 0, lambda <= 0, k < 1, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature could not certify the requested absolute error.
struct ToleranceNotMet : std::runtime_error {
    explicit ToleranceNotMet(const std::string& what) : std::runtime_error(what) {}
};

/// Verification suite name not recognized.
struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed rational literal.
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace lstirling
