#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qframe {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or index mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Complex matrix is not in the image of the quaternionic embedding.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Eigen-solver or iterative-generation failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Violated precondition on a generator argument (e.g. rank > dimension).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Matrix is singular within the relative rank tolerance.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double condition)
      : Error(what), condition_{condition} {}
  /// Ratio smallest/largest singular value of the complex embedding.
  [[nodiscard]] double condition() const { return condition_; }

 private:
  double condition_;
};

/// The rank-n family at a quadrature point is linearly dependent.
class IndependenceError : public Error {
 public:
  IndependenceError(const std::string& what, std::size_t point)
      : Error(what), point_{point} {}
  [[nodiscard]] std::size_t point() const { return point_; }

 private:
  std::size_t point_;
};

/// Frame operator fails to be invertible.
class NotAFrameError : public Error {
 public:
  using Error::Error;
};

/// Sample field does not lie in the range of the analysis map.
class OffRangeError : public DomainError {
 public:
  OffRangeError(const std::string& what, double residual)
      : DomainError(what), residual_{residual} {}
  [[nodiscard]] double residual() const { return residual_; }

 private:
  double residual_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_{line}, column_{column} {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a schema invariant (version, w > 0, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// File cannot be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qframe
