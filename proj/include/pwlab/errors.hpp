#pragma once

#include <stdexcept>
#include <string>

namespace pwlab {

// Base class for all runtime failures raised by the library. `name()` is the
// stable machine-readable identifier that ends up in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define PWLAB_DEFINE_ERROR(E)                                  \
  class E : public Error {                                     \
   public:                                                     \
    explicit E(const std::string& what) : Error(#E, what) {}   \
  }

PWLAB_DEFINE_ERROR(OutOfDomain);
PWLAB_DEFINE_ERROR(GridMismatch);
PWLAB_DEFINE_ERROR(StabilityFailure);
PWLAB_DEFINE_ERROR(NoConvergence);
PWLAB_DEFINE_ERROR(NodeEncounter);
PWLAB_DEFINE_ERROR(RejectionStall);
PWLAB_DEFINE_ERROR(AbortFractionExceeded);
PWLAB_DEFINE_ERROR(NullSlice);
PWLAB_DEFINE_ERROR(NoBranches);
PWLAB_DEFINE_ERROR(InsufficientSeparation);
PWLAB_DEFINE_ERROR(StiffnessFailure);
PWLAB_DEFINE_ERROR(TurningPointInDomain);
PWLAB_DEFINE_ERROR(ConstraintViolation);
PWLAB_DEFINE_ERROR(InsufficientOverlap);

#undef PWLAB_DEFINE_ERROR

// Configuration-file failure with source position for diagnostics.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0, int col = 0)
      : Error("ConfigError", format(what, line, col)), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string format(const std::string& what, int line, int col) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", col " + std::to_string(col) +
           ": " + what;
  }
  int line_;
  int col_;
};

}  // namespace pwlab
