#pragma once

#include "loewner_lab/matrix.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

/// Outcome of one Löwner comparison X ≥ Y.
///
/// `margin` is λmin(X − Y) / max(1, ‖X‖_F, ‖Y‖_F); the comparison holds when
/// margin ≥ −tol.rel for the tolerance used to produce it.
struct OrderVerdict {
  bool holds = false;
  double margin = 0.0;
};

OrderVerdict make_verdict(double margin, const ToleranceModel& tol);

/// Normalization used by every margin: max(1, ‖a‖_F, ‖b‖_F).
double margin_scale(const SymMatrix& a, const SymMatrix& b);

/// a ≥ b in the Löwner order. Throws DimensionMismatch.
OrderVerdict loewner_geq(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol = {});

/// log a ≥ log b. Throws NotPositiveDefinite or DimensionMismatch.
OrderVerdict chaotic_geq(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol = {});

/// a^alpha ≥ b^alpha for alpha in [0, 1]. When a ≥ b > 0 this is a theorem,
/// so a failing verdict points at a numerical problem rather than an error.
/// Throws BadExponent outside [0, 1] and NotPositiveDefinite.
OrderVerdict loewner_heinz_check(const SymMatrix& a, const SymMatrix& b, double alpha,
                                 const ToleranceModel& tol = {});

/// Two-sided comparison: margin is the smaller of the margins of a ≥ b and b ≥ a.
OrderVerdict equality_verdict(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol = {});

}  // namespace loewner_lab
