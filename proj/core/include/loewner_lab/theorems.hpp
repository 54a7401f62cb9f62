#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loewner_lab/loewner.hpp"
#include "loewner_lab/matrix.hpp"
#include "loewner_lab/params.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

enum class Region { I, II, None };

std::string_view to_string(Region region) noexcept;

struct RegionClass {
  Region region = Region::None;
  /// t − s ≥ n (GrandN) or t − s ≥ p (PVersion).
  bool operator_order_condition = false;
};

/// Primary regions come from the general (n or p) statement. Legacy regions
/// reproduce the original two-parameter statement literally:
/// I ⇔ t ≥ 3s − 2 ≥ 0, II ⇔ 0 < s < 1/2, operator condition ⇔ t ≥ s + 2.
/// Legacy is only defined for n = 2 and p = 2.
enum class RegionPolicy { Primary, Legacy };

RegionClass classify_region(const ChainParams& params);
/// Throws BadParameters unless the chain is n = 2 or p = 2.
RegionClass classify_region_legacy(const ChainParams& params);
RegionClass classify(const ChainParams& params, RegionPolicy policy);

/// How a failed implication is filed: within 10·tol.rel of the slack it is a
/// tolerance breach, beyond that a counterexample candidate.
enum class Triage { None, ToleranceBreach, CounterexampleCandidate };

std::string_view to_string(Triage triage) noexcept;

Triage triage_margin(double margin, const ToleranceModel& tol);

struct OrderReport {
  OrderVerdict hypothesis;
  RegionClass region;
  /// log B ≥ log A.
  OrderVerdict chaotic;
  /// B ≥ A.
  OrderVerdict operator_order;
  bool implication_ok = true;
  Triage triage = Triage::None;
};

/// hypothesis_lhs(A, B) ≥ B.
OrderVerdict check_hypothesis(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                              const ToleranceModel& tol = {});

OrderReport verify_theorem(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                           const ToleranceModel& tol = {},
                           RegionPolicy policy = RegionPolicy::Primary);

struct ProofStep {
  std::string label;
  OrderVerdict verdict;
};

struct ProofTrace {
  std::vector<ProofStep> steps;
  bool all_hold = true;

  void add(std::string label, OrderVerdict verdict);
};

/// Both Furuta inequalities for A ≥ B. Throws BadParameters unless r ≥ 0,
/// p ≥ 0, q ≥ 1 and (1+r)q ≥ p+r.
ProofTrace furuta_check(const SymMatrix& a, const SymMatrix& b, double p, double r, double q,
                        const ToleranceModel& tol = {});

/// Evaluates every intermediate inequality of the implication proof for
/// either variant. Throws PreconditionViolated unless the hypothesis holds
/// and the parameters sit in region I or II.
ProofTrace proof_trace(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                       const ToleranceModel& tol = {});

/// proof_trace restricted to GrandN parameters.
ProofTrace proof_trace_grand(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                             const ToleranceModel& tol = {});

}  // namespace loewner_lab
