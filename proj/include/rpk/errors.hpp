#pragma once

#include <stdexcept>
#include <string>

namespace rpk {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// argument outside the exponential-moment domain of the driver
struct DomainError : Error {
    using Error::Error;
};

struct NegativeTime : Error {
    using Error::Error;
};

// t > T where an ordered pair was required
struct OrderError : Error {
    using Error::Error;
};

struct MissingFixing : Error {
    using Error::Error;
};

struct MissingLiborCurve : Error {
    using Error::Error;
};

struct NonPositiveCurve : Error {
    using Error::Error;
};

struct EmptySchedule : Error {
    using Error::Error;
};

struct WrongSpecKind : Error {
    using Error::Error;
};

struct NonAdditiveSpec : Error {
    using Error::Error;
};

struct DegenerateVariance : Error {
    using Error::Error;
};

struct DampingInfeasible : Error {
    using Error::Error;
};

struct QuadratureNoConvergence : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvariantViolation : Error {
    using Error::Error;
};

struct NoOverlap : Error {
    using Error::Error;
};

struct InsufficientStrikes : Error {
    using Error::Error;
};

struct PriceOutOfBounds : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct NoRoot : Error {
    using Error::Error;
};

struct SolverFail : Error {
    using Error::Error;
};

struct UnsupportedTrade : Error {
    using Error::Error;
};

struct SeedMissing : Error {
    using Error::Error;
};

}  // namespace rpk
