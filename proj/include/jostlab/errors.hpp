#pragma once

#include <stdexcept>
#include <string>

namespace jostlab {

//! Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

//! Caller broke a documented precondition (bad parameters, wrong domain).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

//! Failures of numerical procedures. The CLI maps these to exit status 3.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

#define JOSTLAB_NUMERICAL_ERROR(Name)                              \
  class Name : public NumericalError {                             \
   public:                                                         \
    explicit Name(const std::string& msg) : NumericalError(msg) {} \
  }

JOSTLAB_NUMERICAL_ERROR(ZeroEnergyOnSheetII);
JOSTLAB_NUMERICAL_ERROR(SingularMatching);
JOSTLAB_NUMERICAL_ERROR(PoleAtRequestedPoint);
JOSTLAB_NUMERICAL_ERROR(ZeroOnContour);
JOSTLAB_NUMERICAL_ERROR(NonIntegerWinding);
JOSTLAB_NUMERICAL_ERROR(ConvergenceFailure);
JOSTLAB_NUMERICAL_ERROR(PoleInLowerHalfPlane);
JOSTLAB_NUMERICAL_ERROR(DivergentIntegrand);
JOSTLAB_NUMERICAL_ERROR(MissingRadius);
JOSTLAB_NUMERICAL_ERROR(IllConditionedFit);
JOSTLAB_NUMERICAL_ERROR(TailNotControlled);
JOSTLAB_NUMERICAL_ERROR(PoleOnRealAxis);

#undef JOSTLAB_NUMERICAL_ERROR

//! Malformed or incomplete experiment configuration. Exit status 2.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, int line, const std::string& msg)
      : Error(format(field, line, msg)), field_(field), line_(line) {}

  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  static std::string format(const std::string& field, int line,
                            const std::string& msg) {
    std::string out = "config error";
    if (line > 0) out += " (line " + std::to_string(line) + ")";
    if (!field.empty()) out += " in '" + field + "'";
    return out + ": " + msg;
  }

  std::string field_;
  int line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace jostlab
