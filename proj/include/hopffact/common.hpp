#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopffact {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Thrown by make_field when a PrimeField modulus is composite.
struct NotPrimeError : Error {
    using Error::Error;
};

/// Thrown when the field has no element of multiplicative order m.
struct NoPrimitiveRootError : Error {
    using Error::Error;
};

/// Thrown when a supplied omega does not satisfy omega^n = 1.
struct NotARootError : Error {
    using Error::Error;
};

/// Thrown when a supplied q is not a primitive m-th root of unity.
struct BadRootError : Error {
    using Error::Error;
};

/// Thrown by exhaustive searches whose candidate grid exceeds the budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

struct NotIsomorphicError : Error {
    using Error::Error;
};

struct InvalidMatchedPairError : Error {
    using Error::Error;
};

struct NotModuleAlgebraError : Error {
    using Error::Error;
};

struct SymmetryFailsError : Error {
    using Error::Error;
};

}  // namespace hopffact
