#pragma once

#include <stdexcept>
#include <string>

namespace tabprime {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (tableau / monomial / column syntax).
struct ParseError : Error {
    using Error::Error;
};

// A size or cost guard was exceeded (enumeration too large, permutation
// group bound, counting formula used outside its regime).
struct GuardError : Error {
    using Error::Error;
};

// Semantically invalid input for an operation.
struct DomainError : Error {
    using Error::Error;
};

struct NotSemistandardError : DomainError {
    using DomainError::DomainError;
};

struct EntryOutOfRangeError : DomainError {
    using DomainError::DomainError;
};

struct NotAFactorError : DomainError {
    using DomainError::DomainError;
};

struct SizeMismatchError : DomainError {
    using DomainError::DomainError;
};

struct WrongColumnCountError : DomainError {
    using DomainError::DomainError;
};

struct InvalidParityError : DomainError {
    using DomainError::DomainError;
};

struct OutOfWindowError : DomainError {
    using DomainError::DomainError;
};

struct NotSmallGapError : DomainError {
    using DomainError::DomainError;
};

// A structural guarantee failed (would contradict a proved uniqueness or
// existence statement). Always a bug signal, never expected at runtime.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

} // namespace tabprime
