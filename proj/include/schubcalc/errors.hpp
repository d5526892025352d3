#pragma once

#include <stdexcept>
#include <string>

namespace schubcalc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition was violated: index out of range, mismatched variable
/// counts, malformed partition, non-reduced word, ...
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact division by x_i - x_{i+1} left a remainder. Only reachable through
/// a kernel bug, since every caller divides antisymmetric input.
class DivisionFailure : public Error {
public:
    using Error::Error;
};

/// Request beyond the documented desk-scale bounds (n > 5 for word
/// enumeration, k(n-k) > 9 for the Chow/K sweep, ...).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace schubcalc
