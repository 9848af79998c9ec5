#ifndef SEPVAR_ERRORS_HPP
#define SEPVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sepvar {

// Invalid user-supplied input (bad sigma, out-of-range indices, ...).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// lambda_prime requested for a sigma with Gamma empty (sigma not in Sigma^0).
struct EmptyGammaError : InputError {
    explicit EmptyGammaError(const std::string& msg) : InputError(msg) {}
};

// Gamma has no unique dominance-minimum.  Never observed; hard error rather
// than a guess.
struct NoUniqueMinimumError : std::logic_error {
    explicit NoUniqueMinimumError(const std::string& msg) : std::logic_error(msg) {}
};

// weight_of applied to something that is not a simultaneous h_ii eigenvector.
struct NotWeightVectorError : std::runtime_error {
    explicit NotWeightVectorError(const std::string& msg) : std::runtime_error(msg) {}
};

// basis_of_F closure stabilized at a size different from the target dimension.
struct DimensionMismatchError : std::runtime_error {
    explicit DimensionMismatchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Oracle guardrail: a monomial basis larger than the configured column bound.
struct ColumnBoundError : std::runtime_error {
    explicit ColumnBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sepvar

#endif
