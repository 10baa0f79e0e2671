#pragma once

#include <stdexcept>
#include <string>

namespace antiramsey {

/// Base class of everything the library throws on bad input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text: forest grammar, coloring files, graph files.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A value outside the accepted domain (vertex index, n too small, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

/// The input is well formed but violates a hypothesis a result is stated under,
/// e.g. spider legs of length 1 for beta, or palette caps above n/3.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// The family or pattern kind is not handled by the requested operation.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Two inputs that must agree do not (certificate vs coloring, forced edges).
class MismatchError : public Error {
public:
    using Error::Error;
};

} // namespace antiramsey
