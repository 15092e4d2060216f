#pragma once

#include <stdexcept>
#include <string>

namespace kakimizu {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input text or structure does not match the expected schema.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on a well-formed value does not hold (e.g. a non-special diagram).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace kakimizu
