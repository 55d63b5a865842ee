#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plateau {

// Error categories map 1:1 onto the CLI exit codes: parse -> 2,
// precondition -> 3, certificate -> 4, io -> 5.
enum class ErrorCategory { Parse, Precondition, Certificate, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// ---- boolfun ----

class NonPowerOfTwoLength : public Error {
 public:
  explicit NonPowerOfTwoLength(const std::string& message)
      : Error(ErrorCategory::Parse, message) {}
};

class TooManyVariables : public Error {
 public:
  explicit TooManyVariables(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCategory::Parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class VariableOutOfRange : public ParseError {
 public:
  VariableOutOfRange(const std::string& message, std::size_t position)
      : ParseError(message, position) {}
};

// ---- transform ----

class KindMismatch : public Error {
 public:
  explicit KindMismatch(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

// ---- classify ----

class SpecialWeightError : public Error {
 public:
  explicit SpecialWeightError(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class ParityError : public Error {
 public:
  explicit ParityError(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class PaperConsistencyViolation : public Error {
 public:
  explicit PaperConsistencyViolation(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

// ---- cayley ----

class LoopedGraph : public Error {
 public:
  explicit LoopedGraph(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class TooLargeForDense : public Error {
 public:
  explicit TooLargeForDense(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class CertificateFailure : public Error {
 public:
  explicit CertificateFailure(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

// ---- exact matrix ----

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

// ---- regularity ----

class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class NotThreeEigenvalues : public Error {
 public:
  explicit NotThreeEigenvalues(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

class NonIntegerParameters : public Error {
 public:
  explicit NonIntegerParameters(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class IdentityFailure : public Error {
 public:
  explicit IdentityFailure(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class RootFailure : public Error {
 public:
  explicit RootFailure(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class DegreeEquationFailure : public Error {
 public:
  explicit DegreeEquationFailure(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class NotConstant : public Error {
 public:
  explicit NotConstant(const std::string& message)
      : Error(ErrorCategory::Certificate, message) {}
};

class DenominatorZero : public Error {
 public:
  explicit DenominatorZero(const std::string& message)
      : Error(ErrorCategory::Precondition, message) {}
};

// ---- io ----

class IoError : public Error {
 public:
  explicit IoError(const std::string& message)
      : Error(ErrorCategory::Io, message) {}
};

}  // namespace plateau
