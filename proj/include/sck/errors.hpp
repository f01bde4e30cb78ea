#pragma once

#include <stdexcept>
#include <string>

namespace sck {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonZeroRemainder : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct IndexTooSmall : Error {
    using Error::Error;
};
struct DegenerateCoefficient : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct PoleAtEvaluation : Error {
    using Error::Error;
};
struct ConvergenceFailure : Error {
    using Error::Error;
};
struct NonPositiveLambda0 : Error {
    using Error::Error;
};

} // namespace sck
