#pragma once

#include <stdexcept>

namespace qspread {

// Error taxonomy shared by the library. The CLI maps these onto its exit-code
// contract: InputError -> 2, CapacityError -> 3, anything else that fails -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Qubit budget exceeded (state allocation, phase-estimation width).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed structure: bad qubit index, register overlap, width mismatch.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A value lies outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unusable user input (files, flag combinations).
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace qspread
