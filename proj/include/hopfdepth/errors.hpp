#pragma once

#include <stdexcept>
#include <string>

namespace hopfdepth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A Hopf structure failed one of its axioms.
class AxiomError : public Error {
public:
    using Error::Error;
};

/// No idempotent integral exists (ε vanishes on the integral space).
class NotSemisimple : public Error {
public:
    using Error::Error;
};

/// The integral space does not have dimension one.
class MalformedAlgebra : public Error {
public:
    using Error::Error;
};

class SubalgebraError : public Error {
public:
    using Error::Error;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class GroupError : public Error {
public:
    using Error::Error;
};

/// An order or size cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Character data is internally inconsistent (non-integral multiplicity,
/// failed splitting, degree imbalance).
class CharacterError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hopfdepth
