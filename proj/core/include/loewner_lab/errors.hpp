#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loewner_lab {

enum class ErrorKind {
  NonConvergence,
  NotPositiveDefinite,
  DimensionMismatch,
  BadExponent,
  BadParameters,
  PreconditionViolated,
  BudgetExhausted,
  NumericalFailure,
  InvalidTarget,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Base class for every failure raised by the library.
class LabError : public std::runtime_error {
 public:
  LabError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define LOEWNER_LAB_ERROR_TYPE(Name)                                    \
  class Name : public LabError {                                        \
   public:                                                              \
    explicit Name(const std::string& what) : LabError(ErrorKind::Name, what) {} \
  }

LOEWNER_LAB_ERROR_TYPE(NonConvergence);
LOEWNER_LAB_ERROR_TYPE(NotPositiveDefinite);
LOEWNER_LAB_ERROR_TYPE(DimensionMismatch);
LOEWNER_LAB_ERROR_TYPE(BadExponent);
LOEWNER_LAB_ERROR_TYPE(BadParameters);
LOEWNER_LAB_ERROR_TYPE(PreconditionViolated);
LOEWNER_LAB_ERROR_TYPE(BudgetExhausted);
LOEWNER_LAB_ERROR_TYPE(NumericalFailure);
LOEWNER_LAB_ERROR_TYPE(InvalidTarget);

#undef LOEWNER_LAB_ERROR_TYPE

}  // namespace loewner_lab
