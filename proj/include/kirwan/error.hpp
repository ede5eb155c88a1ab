#pragma once

#include <stdexcept>
#include <string>

namespace kirwan {

enum class ErrorKind {
  ZeroEuler,
  DivisionByZero,
  SingularDiagonal,
  NotTriangular,
  DimensionMismatch,
  Parse,
  Schema,
  Validation,
  NotRegularValue,
  UnknownFixedPoint,
  OddDegree,
  Spec,
  MissingAlphaPlus,
  NotInImage,
  NotInKernel,
  InternalContradiction,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kirwan
