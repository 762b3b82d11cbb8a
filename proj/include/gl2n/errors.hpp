#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gl2n {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different ranks n.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible (Q, S) has zero determinant.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Precondition violations that are not rank or singularity problems.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind { syntax, index_out_of_range, exponent_overflow, nonlinear };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : Error(std::string(kind_name(kind)) + ": " + what + " at position " +
              std::to_string(position)),
        kind_(kind),
        position_(position) {}

  static const char* kind_name(Kind kind) noexcept {
    switch (kind) {
      case Kind::syntax: return "syntax error";
      case Kind::index_out_of_range: return "index out of range";
      case Kind::exponent_overflow: return "exponent overflow";
      case Kind::nonlinear: return "nonlinear";
    }
    return "error";
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace gl2n
