#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gl2skein {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class NotExactDivision : public Error {
public:
    explicit NotExactDivision(const std::string& what = "division is not exact") : Error(what) {}
};

class UnsupportedGcd : public Error {
public:
    explicit UnsupportedGcd(const std::string& what) : Error(what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

class StepLimitExceeded : public Error {
public:
    explicit StepLimitExceeded(const std::string& what = "rewrite step budget exhausted")
        : Error(what) {}
};

class WindowTooSmall : public Error {
public:
    explicit WindowTooSmall(const std::string& what) : Error(what) {}
};

/// Parse failure with byte position and a description of what was expected.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : Error("parse error at position " + std::to_string(position) + ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Torus and annulus atoms mixed inside one expression.
class SortError : public Error {
public:
    explicit SortError(const std::string& what) : Error(what) {}
};

/// An internal algebraic identity failed to hold.  Reaching this indicates a
/// bug in the rewriting engine, never bad user input.
class IdentityCheckError : public std::logic_error {
public:
    explicit IdentityCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gl2skein
