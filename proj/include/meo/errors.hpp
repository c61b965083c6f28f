#pragma once

#include <stdexcept>
#include <string>

namespace meo {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefinite : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlphaOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

// gamma_alpha underflows the stopping rule when alpha is this close to 1
struct AlphaNearOne : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotConverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct QuadratureNonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace meo
