#ifndef BOOLSPECTRA_ERRORS_HPP
#define BOOLSPECTRA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace boolspectra {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed at all (CLI exit code 2).
class ParseError : public Error {
public:
    using Error::Error;
};

class BadLength : public ParseError {
public:
    using ParseError::ParseError;
};

class BadDigit : public ParseError {
public:
    using ParseError::ParseError;
};

class BadRow : public ParseError {
public:
    using ParseError::ParseError;
};

// An operation was called on values outside its domain (CLI exit code 4).
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotAFunctionSpectrum : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class EmptySupport : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotPlateaued : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotFiveValued : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class SupportNotPowerOfTwo : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ShapeMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class WrongSpectralShape : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class OddDimension : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A construction's stated condition failed on the given inputs (CLI exit
// code 3). The clause string names the exact violated condition so scripted
// searches over candidate inputs can dispatch on it.
class ConditionViolated : public Error {
public:
    explicit ConditionViolated(const std::string& clause)
        : Error("condition violated: " + clause), clause_(clause) {}
    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

class NotBent : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class WeightPrecondition : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class DualSumNotOne : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class SupportsOverlap : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class CaseConditionViolated : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class NotInjective : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

class Infeasible : public ConditionViolated {
public:
    using ConditionViolated::ConditionViolated;
};

// A spectrum assembled from candidate supports/duals does not invert to a
// Boolean function. Carries the first offending point and the raw integer
// sum seen there; spectral assembly treats this as the failure signal.
class NotBooleanSpectrum : public Error {
public:
    NotBooleanSpectrum(std::uint32_t point, std::int64_t raw_sum)
        : Error("not a Boolean spectrum: at x=" + std::to_string(point) +
                " the inverse transform sum is " + std::to_string(raw_sum) +
                ", not +-2^n"),
          point_(point),
          raw_sum_(raw_sum) {}
    std::uint32_t point() const { return point_; }
    std::int64_t raw_sum() const { return raw_sum_; }

private:
    std::uint32_t point_;
    std::int64_t raw_sum_;
};

// Internal assertion: a bent 4-decomposition produced restrictions outside
// the bent / semi-bent / 5-valued trichotomy. Unreachable for correct
// inputs; hitting it means an implementation bug, not a user error.
class TrichotomyViolated : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace boolspectra

#endif
