#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fairshare {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Instance data violates a model constraint. `code` identifies which one.
class ValidationError : public Error {
public:
    enum class Code {
        DimensionMismatch,
        CapacitySum,
        BadCapacity,
        NegativeValue,
        NegativeExternality,
        SelfExternality,
        BadAssignment,
        BadIndex,
        ParseError,
    };

    ValidationError(Code code, const std::string& what) : Error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// An operation was called outside its supported domain
/// (e.g. the capacity-2 solver on a non-dorm instance).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Raised by prop_share when n = 1 (the proportional benchmark divides by n-1).
class DegenerateInstanceError : public Error {
public:
    using Error::Error;
};

/// Brute-force enumeration refused: the search space exceeds the limit.
/// Carries the exact assignment count (saturated at 2^128-1).
class LimitExceededError : public Error {
public:
    LimitExceededError(const std::string& what, unsigned __int128 count)
        : Error(what), count_(count) {}
    unsigned __int128 count() const { return count_; }

private:
    unsigned __int128 count_;
};

/// Exact rational arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace fairshare
