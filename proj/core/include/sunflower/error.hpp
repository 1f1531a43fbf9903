#pragma once

#include <stdexcept>
#include <string>

namespace sunflower {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class SignatureMismatch : public Error {
public:
    SignatureMismatch() : Error("signature mismatch") {}
    using Error::Error;
};

// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Something that cannot happen did; indicates a bug rather than bad input.
class InternalConsistency : public Error {
public:
    using Error::Error;
};

} // namespace sunflower
