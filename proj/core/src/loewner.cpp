#include "loewner_lab/loewner.hpp"

#include <algorithm>
#include <cmath>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/matcore.hpp"

namespace loewner_lab {

namespace {

void require_same_dim(const SymMatrix& a, const SymMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": operands have dimensions " +
                            std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

}  // namespace

OrderVerdict make_verdict(double margin, const ToleranceModel& tol) {
  if (!std::isfinite(margin)) throw NumericalFailure("non-finite Löwner margin");
  return {margin >= -tol.rel, margin};
}

double margin_scale(const SymMatrix& a, const SymMatrix& b) {
  return std::max({1.0, a.frobenius_norm(), b.frobenius_norm()});
}

OrderVerdict loewner_geq(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol) {
  require_same_dim(a, b, "loewner_geq");
  return make_verdict(min_eigenvalue(a - b) / margin_scale(a, b), tol);
}

OrderVerdict chaotic_geq(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol) {
  require_same_dim(a, b, "chaotic_geq");
  return loewner_geq(mat_log(a, tol), mat_log(b, tol), tol);
}

OrderVerdict loewner_heinz_check(const SymMatrix& a, const SymMatrix& b, double alpha,
                                 const ToleranceModel& tol) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw BadExponent("loewner_heinz_check: alpha must lie in [0, 1]");
  }
  require_same_dim(a, b, "loewner_heinz_check");
  const auto ea = eigh(a);
  const auto eb = eigh(b);
  require_positive_definite(ea, tol, "loewner_heinz_check");
  require_positive_definite(eb, tol, "loewner_heinz_check");
  if (alpha == 1.0) return loewner_geq(a, b, tol);
  return loewner_geq(mat_pow(ea, alpha, tol), mat_pow(eb, alpha, tol), tol);
}

OrderVerdict equality_verdict(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol) {
  require_same_dim(a, b, "equality_verdict");
  const double scale = margin_scale(a, b);
  const auto d = eigh(a - b);
  const double margin = std::min(d.eigenvalues.front(), -d.eigenvalues.back()) / scale;
  return make_verdict(margin, tol);
}

}  // namespace loewner_lab
