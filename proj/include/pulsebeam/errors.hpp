#ifndef PULSEBEAM_ERRORS_HPP
#define PULSEBEAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pulsebeam {

// Evaluation requested too close to the branch circle, the disk, or the
// shell band where the field or its derivatives are undefined.
struct SingularPointError : std::domain_error {
    explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

struct ZeroSourceVectorError : std::domain_error {
    explicit ZeroSourceVectorError(const std::string& what) : std::domain_error(what) {}
};

struct InvalidParameterError : std::invalid_argument {
    explicit InvalidParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A quadrature node landed on the singular set of the integrand.
struct SingularEncounterError : std::domain_error {
    explicit SingularEncounterError(const std::string& what) : std::domain_error(what) {}
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

struct PeakNotFoundError : std::runtime_error {
    explicit PeakNotFoundError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuiteError : std::invalid_argument {
    explicit UnknownSuiteError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace pulsebeam

#endif
