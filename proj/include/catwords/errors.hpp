#pragma once

#include <stdexcept>
#include <string>

namespace catwords {

// Base class for every precondition failure reported by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A substitution value mentions a variable that is itself being substituted.
class RecursiveAssignment : public Error {
public:
    using Error::Error;
};

// Series inversion requires the constant coefficient to be exactly 1.
class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class InsufficientQuotients : public Error {
public:
    using Error::Error;
};

// Monomial multiset requested with fewer tracked letters than the word length.
class UnderTracked : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace catwords
