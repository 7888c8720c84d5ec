#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace vfw {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input vectors/matrices whose sizes do not agree with the model.
struct DimensionError : Error {
    using Error::Error;
};

/// Operation not available for the given configuration (e.g. sampling a
/// general polytope, or solving with a cone that has no max-linear form).
struct UnsupportedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InfeasibleStartError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// Violation of an internal contract; indicates a bug, not bad user input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace vfw
