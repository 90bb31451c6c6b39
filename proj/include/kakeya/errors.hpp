#pragma once

#include <stdexcept>
#include <string>

namespace kakeya {

// Base class for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// alpha is a point reflection (u = -1): no canonical elementary movement.
struct HalfTurnError : Error {
    using Error::Error;
};

struct TimeOutOfRangeError : Error {
    using Error::Error;
};

// Endpoint of the spliced segment does not match beta.
struct SpliceMismatchError : Error {
    using Error::Error;
};

// The spliced segment wanders farther from the identity than allowed.
struct SpliceDriftError : Error {
    using Error::Error;
};

struct SceneOutOfBoundsError : Error {
    using Error::Error;
};

struct GridMismatchError : Error {
    using Error::Error;
};

struct NotParallelError : Error {
    using Error::Error;
};

struct NotConcentricError : Error {
    using Error::Error;
};

struct SlatsDontFitError : Error {
    using Error::Error;
};

struct PointOnCurveError : Error {
    using Error::Error;
};

struct TrajectoryEscapeError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

} // namespace kakeya
