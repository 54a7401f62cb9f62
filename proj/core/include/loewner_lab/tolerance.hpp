#pragma once

namespace loewner_lab {

/// Margin policy shared by every Löwner comparison.
///
/// `rel` is the one-sided slack on scale-normalized margins: a verdict holds
/// when its margin is at least `-rel`. `abs` is the positivity gate applied to
/// eigenvalues before fractional powers and logarithms.
struct ToleranceModel {
  double rel = 1e-8;
  double abs = 1e-12;

  /// Throws BadParameters unless both fields are finite and nonnegative.
  void validate() const;
};

}  // namespace loewner_lab
