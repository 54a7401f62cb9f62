#include "loewner_lab/errors.hpp"

#include <cmath>

#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
  }
  return "Unknown";
}

void ToleranceModel::validate() const {
  if (!std::isfinite(rel) || !std::isfinite(abs) || rel < 0.0 || abs < 0.0) {
    throw BadParameters("ToleranceModel: rel and abs must be finite and nonnegative");
  }
}

}  // namespace loewner_lab
