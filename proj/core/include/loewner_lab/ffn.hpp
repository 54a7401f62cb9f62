#pragma once

#include "loewner_lab/matcore.hpp"
#include "loewner_lab/matrix.hpp"
#include "loewner_lab/params.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

/// Decomposes A and B once and serves every power a chain evaluation needs.
/// Throws DimensionMismatch or NotPositiveDefinite on construction.
class ChainContext {
 public:
  ChainContext(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol);

  PowerCache& a() noexcept { return a_; }
  PowerCache& b() noexcept { return b_; }
  const ToleranceModel& tol() const noexcept { return tol_; }

  /// B^{e} (A^{(s−t)/d} B^{2t/d})^{m−1} A^{(s−t)/d} B^{e}, multiplied left to
  /// right and re-symmetrized.
  SymMatrix chain_with_ends(const ChainParams& params, double end_exponent);
  /// chain_with_ends at e = s/d.
  SymMatrix chain(const ChainParams& params);
  /// chain(params)^{d/D}.
  SymMatrix lhs(const ChainParams& params);

 private:
  PowerCache a_;
  PowerCache b_;
  ToleranceModel tol_;
};

/// GrandN chain: B^{s/n} (A^{(s−t)/n} B^{2t/n})^{n−1} A^{(s−t)/n} B^{s/n}.
SymMatrix grand_chain(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                      const ToleranceModel& tol = {});

/// grand_chain(...)^{n/((n+2)s+(n−2)t)}.
SymMatrix grand_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                    const ToleranceModel& tol = {});

/// (B^{s/p} A^{(s−t)/p} B^{2t/p} A^{(s−t)/p} B^{s/p})^{p/(4s)}.
SymMatrix p_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                const ToleranceModel& tol = {});

/// grand_lhs or p_lhs according to the variant.
SymMatrix hypothesis_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                         const ToleranceModel& tol = {});

// Literal transcriptions of the fixed-shape special cases. They share no
// code with the generic chain beyond matcore, so they double as
// cross-checks of the repetition bookkeeping.

/// (B^{1/2} A^{(1−t)/2} B^{t} A^{(1−t)/2} B^{1/2})^{1/2}.
SymMatrix fujii_furuta_kamei_lhs(const SymMatrix& a, const SymMatrix& b, double t,
                                 const ToleranceModel& tol = {});
/// (B^{s/2} A^{(s−t)/2} B^{t} A^{(s−t)/2} B^{s/2})^{1/(2s)}.
SymMatrix fujii_fujii_nakamoto_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                                   const ToleranceModel& tol = {});
/// (B^{s/3} A^{(s−t)/3} B^{2t/3} A^{(s−t)/3} B^{2t/3} A^{(s−t)/3} B^{s/3})^{3/(5s+t)}.
SymMatrix literal_n3_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                           const ToleranceModel& tol = {});
/// (B^{s/3} A^{(s−t)/3} B^{2t/3} A^{(s−t)/3} B^{s/3})^{3/(4s)}.
SymMatrix literal_p3_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                           const ToleranceModel& tol = {});

}  // namespace loewner_lab
