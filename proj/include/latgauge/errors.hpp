#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latgauge {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix that cannot be projected because it is (numerically) rank-deficient.
struct SingularInput : Error {
    using Error::Error;
};

/// Rectangle side exceeds L/2 on a torus of side L.
struct SideTooLong : Error {
    using Error::Error;
};

/// Fewer post-burn-in measurements than the estimator needs.
struct InsufficientSamples : Error {
    using Error::Error;
};

/// The group has trivial center, so center-symmetry arguments do not apply.
struct NoCenter : Error {
    using Error::Error;
};

/// Langevin step size outside the supported range.
struct StepTooLarge : Error {
    using Error::Error;
};

/// Operation not defined for the requested group family.
struct UnsupportedFamily : Error {
    using Error::Error;
};

/// Log-linear fitting requires strictly positive magnitudes.
struct NonPositiveMagnitude : Error {
    using Error::Error;
};

/// Violated precondition that is not covered by a more specific type.
struct InvalidArgument : Error {
    using Error::Error;
};

/// Config text is not valid JSON.
struct ParseError : Error {
    using Error::Error;
};

/// Config parsed but violates one or more constraints; lists all of them.
struct ValidationError : Error {
    explicit ValidationError(std::vector<std::string> violations_)
        : Error(join(violations_)), violations(std::move(violations_)) {}

    std::vector<std::string> violations;

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "config validation failed:";
        for (const auto& x : v) {
            s += "\n  - " + x;
        }
        return s;
    }
};

} // namespace latgauge
