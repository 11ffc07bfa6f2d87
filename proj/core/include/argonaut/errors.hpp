#ifndef ARGONAUT_ERRORS_HPP
#define ARGONAUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argonaut {

/// Base class for every error the library raises on purpose.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested at a pole (Gamma factor, zeta at s=1, ...).
class PoleError : public Error {
  public:
    using Error::Error;
};

/// Dirichlet character is induced from a smaller modulus.
class NotPrimitive : public Error {
  public:
    using Error::Error;
};

/// Dirichlet-series evaluation requested outside the certified half plane.
class OutsideConvergence : public Error {
  public:
    using Error::Error;
};

/// Logarithmic derivative requested where |L| is numerically zero.
class ZeroOrPole : public Error {
  public:
    using Error::Error;
};

/// Operation not available for this descriptor (user-supplied data).
class Unsupported : public Error {
  public:
    using Error::Error;
};

/// Zero search could not reconcile the sign-change count with the
/// argument-principle count down to the minimum grid step.
class CompletenessFailure : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, long line) : Error(msg), line_number(line) {}
    long line_number;
};

class MonotonicityError : public Error {
  public:
    using Error::Error;
};

class QuadratureFailure : public Error {
  public:
    using Error::Error;
};

/// Horizontal ray passes too close to a zero for the argument integral.
class PathThroughZero : public Error {
  public:
    using Error::Error;
};

/// Contour count did not land near an integer.
class NonIntegerResult : public Error {
  public:
    NonIntegerResult(const std::string& msg, double value) : Error(msg), raw_value(value) {}
    double raw_value;
};

class IncompleteTable : public Error {
  public:
    using Error::Error;
};

/// Extremal LP has no feasible point on the constraint grid.
class Infeasible : public Error {
  public:
    using Error::Error;
};

/// Constructed one-sided approximation misses the closed-form distance
/// certificate by more than the allowed slack.
class OptimalityGap : public Error {
  public:
    OptimalityGap(const std::string& msg, double achieved, double certified)
        : Error(msg), achieved_distance(achieved), certified_distance(certified) {}
    double achieved_distance;
    double certified_distance;
};

/// Bound expression undefined at this conductor (log log too small).
class NotApplicable : public Error {
  public:
    using Error::Error;
};

}  // namespace argonaut

#endif  // ARGONAUT_ERRORS_HPP
