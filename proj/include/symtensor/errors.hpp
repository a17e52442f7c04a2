#ifndef SYMTENSOR_ERRORS_HPP
#define SYMTENSOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symtensor {

// Shape, order, or character-weight mismatch between arguments.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Input exceeds a documented desk-scale cap (factorial or exponential cost).
class SizeCapError : public std::length_error {
public:
  explicit SizeCapError(const std::string& what) : std::length_error(what) {}
};

// Two routes that must agree (exactly or within tolerance) did not.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (rational literals, matrix JSON, partitions).
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace symtensor

#endif
