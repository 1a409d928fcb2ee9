#pragma once

#include <stdexcept>
#include <string>

namespace coxid {

// Malformed input to an operation (bad permutation, non-partition, wrong index).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size cap was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text that could not be parsed (weights, order files, JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity or structural property the engine certifies turned out false.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace coxid
