#pragma once

#include <stdexcept>
#include <string>

namespace primelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violated by a caller-supplied parameter or document.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// No closed-form labeling is implemented for these parameters.
class UnsupportedScheme : public Error {
public:
    using Error::Error;
};

// The graph is known to have no prime vertex labeling at all.
class NotApplicable : public Error {
public:
    using Error::Error;
};

}  // namespace primelab
