#pragma once

#include <stdexcept>
#include <string>

namespace hmorita {

/// Coarse error classes; the CLI maps each one to its own exit status.
enum class ErrorClass { Parse, Math, Invariant };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), class_(cls), name_(std::move(name)) {}

  ErrorClass error_class() const noexcept { return class_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorClass class_;
  std::string name_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorClass::Parse, "ParseError", what) {}
};

class MathError : public Error {
 protected:
  MathError(std::string name, const std::string& what) : Error(ErrorClass::Math, std::move(name), what) {}
};

#define HMORITA_MATH_ERROR(Name)                                             \
  class Name : public MathError {                                            \
   public:                                                                   \
    explicit Name(const std::string& what) : MathError(#Name, what) {}       \
  };

HMORITA_MATH_ERROR(DivisionByZero)
HMORITA_MATH_ERROR(NotDivision)
HMORITA_MATH_ERROR(DescriptorMismatch)
HMORITA_MATH_ERROR(ShapeMismatch)
HMORITA_MATH_ERROR(IndexOutOfRange)
HMORITA_MATH_ERROR(Singular)
HMORITA_MATH_ERROR(NotEpsilonHermitian)
HMORITA_MATH_ERROR(SideMismatch)
HMORITA_MATH_ERROR(EpsilonMismatch)
HMORITA_MATH_ERROR(InvalidDescriptor)
HMORITA_MATH_ERROR(InconsistentEvaluator)

#undef HMORITA_MATH_ERROR

/// An internal exact identity failed to hold. Always a bug or a malformed input
/// that slipped past validation.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorClass::Invariant, "InvariantViolation", what) {}
};

}  // namespace hmorita
