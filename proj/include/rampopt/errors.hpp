#pragma once

#include <stdexcept>
#include <string>

namespace rampopt {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Both the energy and ramping marginal prices are (effectively) zero.
class DegeneratePrices : public Error {
public:
    using Error::Error;
};

/// A price or schedule field violates its domain (negative price, T <= 0, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The 2x2 parameter system could not be solved reliably.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Evaluation time outside [0, T].
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Operation requires a different price regime.
class WrongRegime : public Error {
public:
    using Error::Error;
};

/// Update interval does not evenly divide the horizon, or is not positive.
class BadStep : public Error {
public:
    using Error::Error;
};

/// Discrete trajectory with fewer than two samples.
class EmptyTrajectory : public Error {
public:
    using Error::Error;
};

/// Numeric oracle: ramp-sign iteration cycled without settling.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Numeric oracle: KKT factorization hit a vanishing pivot.
class SingularKKT : public Error {
public:
    using Error::Error;
};

/// Empty input where at least one element is required.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Solver failure inside a multi-hour simulation; carries the hour index.
class SimulationError : public Error {
public:
    SimulationError(int hour, const std::string& what)
        : Error("hour " + std::to_string(hour) + ": " + what), hour_(hour) {}
    int hour() const { return hour_; }

private:
    int hour_;
};

}  // namespace rampopt
