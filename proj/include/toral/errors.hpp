#ifndef TORAL_ERRORS_HPP
#define TORAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toral {

// Input could not be parsed (bad JSON, non-integer entries, ragged rows...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix determinant is not +-1, so it does not define a toral automorphism.
struct NonUnimodularError : std::runtime_error {
    explicit NonUnimodularError(const std::string& msg) : std::runtime_error(msg) {}
};

// Some eigenvalue is a root of unity; periodic-point counts are not finite.
struct NonErgodicError : std::runtime_error {
    explicit NonErgodicError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two numeric quantities fall inside the ambiguity band: the requested
// precision cannot separate them. Retry with a higher precision.
struct PrecisionAmbiguityError : std::runtime_error {
    explicit PrecisionAmbiguityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative root refinement failed to converge within the iteration budget.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fit window is invalid (too small, out of range).
struct WindowError : std::runtime_error {
    explicit WindowError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace toral

#endif
