#pragma once

#include <stdexcept>
#include <string>

namespace becgate {

/// Base class for all becgate errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic or conversion between incompatible dimensions.
class DimensionError : public Error {
public:
    DimensionError(const std::string& what, std::string lhs, std::string rhs)
        : Error(what), lhs_dimension(std::move(lhs)), rhs_dimension(std::move(rhs)) {}
    std::string lhs_dimension;
    std::string rhs_dimension;
};

/// a01 >= a00: the effective trapping potential is not attractive and the
/// protocol cannot run.
class RepulsiveTrapError : public Error {
public:
    using Error::Error;
};

/// Requested a phase from a vanishing interaction rate.
class NoInteractionError : public Error {
public:
    using Error::Error;
};

/// The ramp phases alone already exceed the requested target phase.
class PhaseOvershootError : public Error {
public:
    using Error::Error;
};

/// A numerical oracle could not produce a trustworthy answer.
class OracleFailureError : public Error {
public:
    using Error::Error;
};

/// Adaptive ODE step size collapsed below the resolvable scale.
class StiffnessError : public Error {
public:
    using Error::Error;
};

/// Grid propagation lost more norm than allowed.
class NormDriftError : public Error {
public:
    using Error::Error;
};

/// Bad user-facing configuration (CLI flags or config file).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace becgate
