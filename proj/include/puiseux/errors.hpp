#ifndef PUISEUX_ERRORS_HPP
#define PUISEUX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace puiseux {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition / input outside the mathematical domain of an
// operation (zero series where nonzero required, wrong transversality
// class, no root in the session field, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Division by an exact zero. Kept distinct from DomainError so callers can
// tell an unlucky pivot from a bad argument.
class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    using Error::Error;
};

// An internal invariant failed. These indicate a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

// Desk-scale resource guardrail tripped (root order, orbit size, ...).
class GuardrailError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position)
        : Error(std::move(message) + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace puiseux

#endif
