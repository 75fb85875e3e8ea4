#pragma once

#include <stdexcept>
#include <string>

namespace dse {

struct NumericOverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quote or price violates a no-arbitrage precondition.
struct BadQuoteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IvBoundsError : BadQuoteError {
    using BadQuoteError::BadQuoteError;
};

struct IvConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResampleExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EstimationDivergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dse
