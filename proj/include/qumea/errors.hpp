#pragma once

#include <stdexcept>

namespace qumea {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Values from two different sample spaces were combined.
class SpaceMismatchError : public Error {
public:
    using Error::Error;
};

/// An enumeration or scan would exceed a configured guard.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A decoherence-functional axiom (hermiticity or strong positivity) failed.
class AxiomViolationError : public Error {
public:
    using Error::Error;
};

/// An operation precondition failed (disjointness, unknown label, bad sizes).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A model document does not match the expected schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// A numerical self-check failed, e.g. an imaginary residue above tolerance.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace qumea
