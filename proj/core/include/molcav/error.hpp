#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace molcav {

enum class ErrorKind {
  InvalidParams,
  NonConvergence,
  EigenFailure,
  UnstableSystem,
  SolverFailure,
  StepSizeTooLarge,
  NonPhysicalCM,
  DegenerateCouplings,
  UnknownPreset,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries its kind so sweep drivers can
// record it per grid point instead of aborting.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace molcav
