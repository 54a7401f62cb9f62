#pragma once

#include <string>
#include <variant>

#include "loewner_lab/rational.hpp"

namespace loewner_lab {

/// Chain with A^{(s−t)/n} repeated n times and outer power n/((n+2)s+(n−2)t).
struct GrandN {
  int n = 2;
};

/// Five-factor chain over denominator p with outer power p/(4s).
struct PVersion {
  ParamValue p;
};

/// Validated (s, t, variant) tuple. Both variants share one shape: a
/// palindromic product B^{s/d} (A^{(s−t)/d} B^{2t/d})^{m−1} A^{(s−t)/d} B^{s/d}
/// with m repetitions of the A factor over denominator d (m = d = n for
/// GrandN; m = 2, d = p for PVersion).
class ChainParams {
 public:
  /// Throws BadParameters unless t > s > 0 and n ≥ 2.
  static ChainParams grand(ParamValue s, ParamValue t, int n);
  /// Throws BadParameters unless t > s > 0 and p > 0.
  static ChainParams p_version(ParamValue s, ParamValue t, ParamValue p);

  const ParamValue& s() const noexcept { return s_; }
  const ParamValue& t() const noexcept { return t_; }
  const std::variant<GrandN, PVersion>& variant() const noexcept { return variant_; }
  bool is_grand() const noexcept { return std::holds_alternative<GrandN>(variant_); }

  int repetitions() const noexcept;
  /// n for GrandN, p for PVersion.
  ParamValue denominator() const;
  /// (n+2)s + (n−2)t for GrandN, 4s for PVersion.
  ParamValue outer_denominator() const;
  /// outer_denominator / denominator; the exponent that collapses the chain when A = B.
  ParamValue total_exponent() const;
  /// Total power of B in the chain: (2s + 2(m−1)t)/d.
  ParamValue b_exponent() const;
  /// Total power of A in the chain: m(s−t)/d.
  ParamValue a_exponent() const;

  /// "n" or "p".
  const char* variant_name() const noexcept;
  /// Text form of n or p.
  std::string variant_value() const;
  std::string describe() const;

 private:
  ChainParams(ParamValue s, ParamValue t, std::variant<GrandN, PVersion> v);

  ParamValue s_;
  ParamValue t_;
  std::variant<GrandN, PVersion> variant_;
};

/// Raw l = D/n (GrandN) or 4s/p (PVersion); not necessarily above 1.
double exponent_total(const ChainParams& params);

}  // namespace loewner_lab
