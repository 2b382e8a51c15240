#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normtori {

enum class ErrorKind {
  ZeroInput,
  IncompatibleModulus,
  NotPrime,
  ResidueNotOne,
  WildCharacteristic,
  PrecisionExhausted,
  NormNotOne,
  NotAField,
  TowerMismatch,
  DependentGenerators,
  UnsupportedShape,
  PoleAtPoint,
  UnknownComponent,
  EmptyModel,
  NotATree,
  MissingEdgeValue,
  DimensionMismatch,
  EvidenceFailed,
  VerificationMismatch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace normtori
