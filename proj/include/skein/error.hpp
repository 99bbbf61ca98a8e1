#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skein {

enum class ErrorKind {
  DivisionByZero,
  MixedEtaParity,
  FieldMismatch,
  InvalidParameters,
  AmbiguousFactorization,
  NoFramingParameter,
  CalibrationFailure,
  EtaMismatch,
  InvalidForest,
  ModulusParity,
  BadLensParameters,
  NotBlowdownable,
  WouldCreateCycle,
  InvalidStructure,
  NonIntegerDimension,
  TooLarge,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries one of the kinds above so the
// CLI can map it onto a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skein
