#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lgp {

// Base class for every error the library raises on invalid input or an
// operation leaving its domain. Usage errors (bad flags etc.) are the CLI's
// business and do not use this hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

class DimMismatchError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what_arg, std::size_t position)
        : Error(what_arg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// The mutation substitution does not produce a Laurent polynomial: f^|j| does
// not divide the coefficient of the pivot power j.
class DivisibilityError : public Error {
public:
    explicit DivisibilityError(std::int64_t exponent)
        : Error("mutation undefined at this seed: factor^" +
                std::to_string(-exponent) + " does not divide the coefficient of pivot power " +
                std::to_string(exponent)),
          exponent_(exponent) {}
    std::int64_t exponent() const { return exponent_; }

private:
    std::int64_t exponent_;
};

class MatrixError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonBalancedError : public Error {
public:
    using Error::Error;
};

class ZeroVectorError : public Error {
public:
    using Error::Error;
};

// A terminal matrix of the reduction failed the expected basis-group pattern.
// Surfaced as data, never silently valued.
class ReductionIncompleteError : public Error {
public:
    using Error::Error;
};

class InvalidStepError : public Error {
public:
    InvalidStepError(const std::string& path, const std::string& reason)
        : Error("invalid certificate step at " + path + ": " + reason), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace lgp
