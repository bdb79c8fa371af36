#pragma once

#include <stdexcept>
#include <string>

namespace sincpow {

// Input outside the admissible (n, q) range or other precondition failure.
struct InvalidDomain : std::domain_error {
    explicit InvalidDomain(const std::string& msg) : std::domain_error(msg) {}
};

// The excluded corner q = 1 with even n: sin^n x / x is not integrable at infinity.
struct DivergentIntegral : std::domain_error {
    explicit DivergentIntegral(const std::string& msg) : std::domain_error(msg) {}
};

// The adaptive integrator exhausted its panel budget before reaching the tolerance.
struct ToleranceUnreachable : std::runtime_error {
    explicit ToleranceUnreachable(const std::string& msg) : std::runtime_error(msg) {}
};

// A resource cap was exceeded (e.g. the decimal-digit limit).
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text handed to one of the value parsers.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace sincpow
