#pragma once

#include <stdexcept>
#include <string>

namespace xmodcat {

enum class ErrorKind {
  NotClosed,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotNormal,
  NotAHomomorphism,
  ShapeMismatch,
  MatrixShapeMismatch,
  QuotientNotAbelian,
  NotGammaStable,
  NotValidated,
  NotComposable,
  NotNormalized,
  BadChoice,
  NotRegular,
  NotCoherent,
  FNotConstantOnCosets,
  NotStrict,
  NotRegularFactorSet,
  SearchSpaceTooLarge,
  NotWellDefined,
  WrongType,
  BadSection,
  ParseError,
  SchemaError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace xmodcat
