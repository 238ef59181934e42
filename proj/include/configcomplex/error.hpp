#pragma once

#include <stdexcept>
#include <string>

namespace configcomplex {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic overflowed.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Malformed arguments or precondition violations on caller input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A text file could not be parsed.
class FormatError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Reaching one of these means a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace configcomplex
