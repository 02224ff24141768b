#pragma once

#include <stdexcept>
#include <string>

namespace qpsum {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two objects were required to have the same size (degree) but do not.
struct SizeError : Error {
    using Error::Error;
};

/// An operation required one composition to refine another.
struct RefinementError : Error {
    using Error::Error;
};

/// A subset of [n-1] was malformed (out of range or not strictly increasing).
struct SubsetError : Error {
    using Error::Error;
};

/// A quasisymmetric/noncommutative side mismatch.
struct SideError : Error {
    using Error::Error;
};

/// A permutation is not consistent with the given refinement pair.
struct ConsistencyError : Error {
    using Error::Error;
};

/// A (set) partition or partition-shaped argument is malformed.
struct PartitionError : Error {
    using Error::Error;
};

/// A permutation or cycle form fails its structural invariants.
struct ValidityError : Error {
    using Error::Error;
};

/// Generic precondition violation on an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

/// An enumeration exceeded the configured cap.
struct ResourceError : Error {
    using Error::Error;
};

/// Text or JSON input could not be parsed; carries a 1-based position.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace qpsum
