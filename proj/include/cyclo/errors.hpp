#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain errors: bad parameters for an otherwise well-formed request.
struct InvalidPrimes : Error {
    explicit InvalidPrimes(const std::string& msg) : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& msg) : Error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

// The numerical-semigroup operations below require gcd(generators) == 1.
struct NotNumerical : Error {
    explicit NotNumerical(const std::string& msg) : Error(msg) {}
};

struct BadMirrorPrime : Error {
    explicit BadMirrorPrime(const std::string& msg) : Error(msg) {}
};

// Resource refusals: the request is well-formed but too big to honour.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& msg) : Error(msg) {}
};

// Internal failures: these indicate a bug, not a bad request.
struct Overflow : Error {
    explicit Overflow(const std::string& msg) : Error(msg) {}
};

struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error(msg) {}
};

struct CrossCheckFailure : Error {
    explicit CrossCheckFailure(const std::string& msg) : Error(msg) {}
};

}  // namespace cyclo
