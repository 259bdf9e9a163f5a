#pragma once

#include <stdexcept>
#include <string>

namespace corrhom {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct GridMismatchError : Error {
    using Error::Error;
};

// A combinatorial map would acquire an empty value set.
struct EmptyValueError : Error {
    using Error::Error;
};

struct NotInscribedError : Error {
    using Error::Error;
};

struct NotAChainMapError : Error {
    using Error::Error;
};

// A quotient-induced map is not well defined on the chosen subgroups.
struct IllDefinedError : Error {
    using Error::Error;
};

struct NotEndomorphismError : Error {
    using Error::Error;
};

struct DivergedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct CoverError : Error {
    using Error::Error;
};

// Raised when an internal consistency check fails; indicates a bug, not bad input.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

}  // namespace corrhom
