/// @file errors.hpp
/// @brief Exception taxonomy for the qso4 library.
///
/// Every failure mode that a caller can meaningfully react to gets its own
/// type. All of them derive from qso4::Error, which itself derives from
/// std::runtime_error, so catching either the precise type or the base works.
#pragma once

#include <stdexcept>
#include <string>

namespace qso4 {

/// Base class of all qso4 exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Matrix dimensions do not match the operation's requirements.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// A spin parameter is not a non-negative half-integer.
struct InvalidSpin : Error {
    using Error::Error;
};

/// An irreducible-representation label is malformed or violates the
/// parity/range rules of its family.
struct InvalidLabel : Error {
    using Error::Error;
};

/// A matrix expected to be a scalar multiple of the identity is not.
struct NotScalar : Error {
    using Error::Error;
};

/// A diagonal factor that must be inverted during the two-copy assembly has a
/// vanishing entry (the excluded phase/spin families).
struct NonInvertibleDenominator : Error {
    using Error::Error;
};

/// Numeric evaluation was requested at (or suspiciously near) a root of unity,
/// where the generic-q theory does not apply.
struct RootOfUnity : Error {
    using Error::Error;
};

/// Numeric evaluation hit a vanishing denominator.
struct DivisionByZero : Error {
    using Error::Error;
};

/// Two matrices that must commute exactly do not.
struct NotCommuting : Error {
    using Error::Error;
};

/// A weight spectrum mixes the two eigenvalue families (purely-imaginary
/// i-times-bracket values and real plus-bracket values) where uniformity is
/// required.
struct MixedTypes : Error {
    using Error::Error;
};

/// An exact linear solve has no (unique) solution where one is required.
struct SingularSystem : Error {
    using Error::Error;
};

/// The defining relations fail on the given matrices.
struct NotARepresentation : Error {
    using Error::Error;
};

/// classify/decompose could not match the input against the irreducible
/// catalog.
struct Unclassifiable : Error {
    using Error::Error;
};

/// The two printed forms of the second Casimir disagree where they are known
/// to coincide (classical weight type) — signals a transcription defect.
struct FormMismatch : Error {
    using Error::Error;
};

/// A Casimir eigenvalue matches no admissible spin below the dimension bound.
struct UnrecognizedEigenvalue : Error {
    using Error::Error;
};

/// A computed tensor-product decomposition deviates from the closed-form
/// prediction.
struct MismatchAgainstFormula : Error {
    using Error::Error;
};

/// Text input (scalar strings, labels, JSON payloads) failed to parse.
struct ParseError : Error {
    using Error::Error;
};

/// Filesystem / stream I/O failure.
struct IoError : Error {
    using Error::Error;
};

}  // namespace qso4
