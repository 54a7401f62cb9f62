#include "loewner_lab/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/ffn.hpp"
#include "loewner_lab/matcore.hpp"

namespace loewner_lab {

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::None: return "None";
  }
  return "None";
}

std::string_view to_string(Triage triage) noexcept {
  switch (triage) {
    case Triage::None: return "none";
    case Triage::ToleranceBreach: return "numerical-tolerance breach";
    case Triage::CounterexampleCandidate: return "counterexample candidate";
  }
  return "none";
}

RegionClass classify_region(const ChainParams& params) {
  const ParamValue& s = params.s();
  const ParamValue& t = params.t();
  const ParamValue d = params.denominator();
  const ParamValue outer = params.outer_denominator();
  const ParamValue three_s_minus_t = ParamValue(3) * s - t;

  RegionClass out;
  // GrandN: D > n ≥ 3s−t / D ≤ n.  PVersion: 4s > p ≥ 3s−t / p ≥ 4s.
  if (strictly_greater(outer, d) && at_least(d, three_s_minus_t)) {
    out.region = Region::I;
  } else if (at_least(d, outer)) {
    out.region = Region::II;
  }
  out.operator_order_condition = at_least(t - s, d);
  return out;
}

RegionClass classify_region_legacy(const ChainParams& params) {
  const bool two = params.is_grand() ? params.repetitions() == 2
                                     : compare(params.denominator(), ParamValue(2)) == 0;
  if (!two) {
    throw BadParameters("legacy regions are only defined for n = 2 or p = 2 (" +
                        params.describe() + ")");
  }
  const ParamValue& s = params.s();
  const ParamValue& t = params.t();
  const ParamValue three_s_minus_two = ParamValue(3) * s - ParamValue(2);

  RegionClass out;
  if (at_least(t, three_s_minus_two) && at_least(three_s_minus_two, ParamValue(0))) {
    out.region = Region::I;
  } else if (strictly_greater(ParamValue(Rational(1, 2)), s)) {
    out.region = Region::II;
  }
  out.operator_order_condition = at_least(t, s + ParamValue(2));
  return out;
}

RegionClass classify(const ChainParams& params, RegionPolicy policy) {
  return policy == RegionPolicy::Legacy ? classify_region_legacy(params) : classify_region(params);
}

Triage triage_margin(double margin, const ToleranceModel& tol) {
  if (margin >= -tol.rel) return Triage::None;
  if (margin >= -10.0 * tol.rel) return Triage::ToleranceBreach;
  return Triage::CounterexampleCandidate;
}

OrderVerdict check_hypothesis(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                              const ToleranceModel& tol) {
  return loewner_geq(hypothesis_lhs(a, b, params, tol), b, tol);
}

OrderReport verify_theorem(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                           const ToleranceModel& tol, RegionPolicy policy) {
  OrderReport report;
  report.region = classify(params, policy);
  report.hypothesis = check_hypothesis(a, b, params, tol);
  report.chaotic = chaotic_geq(b, a, tol);
  report.operator_order = loewner_geq(b, a, tol);

  double worst = 0.0;
  bool failed = false;
  if (report.hypothesis.holds && report.region.region != Region::None) {
    if (!report.chaotic.holds) {
      failed = true;
      worst = std::min(worst, report.chaotic.margin);
    }
    if (report.region.operator_order_condition && !report.operator_order.holds) {
      failed = true;
      worst = std::min(worst, report.operator_order.margin);
    }
  }
  report.implication_ok = !failed;
  report.triage = failed ? triage_margin(worst, tol) : Triage::None;
  return report;
}

void ProofTrace::add(std::string label, OrderVerdict verdict) {
  all_hold = all_hold && verdict.holds;
  steps.push_back({std::move(label), verdict});
}

ProofTrace furuta_check(const SymMatrix& a, const SymMatrix& b, double p, double r, double q,
                        const ToleranceModel& tol) {
  if (!std::isfinite(p) || !std::isfinite(r) || !std::isfinite(q) || r < 0.0 || p < 0.0 ||
      q < 1.0) {
    throw BadParameters("furuta_check: need r >= 0, p >= 0, q >= 1");
  }
  if ((1.0 + r) * q - (p + r) < -kRegionEqualityBand) {
    throw BadParameters("furuta_check: need (1+r)q >= p+r");
  }
  if (a.dim() != b.dim()) throw DimensionMismatch("furuta_check: A and B differ in dimension");

  PowerCache pa(a, tol);
  PowerCache pb(b, tol);
  const double inv_q = 1.0 / q;
  auto sandwich = [&](PowerCache& outer, PowerCache& inner) {
    const SymMatrix& o = outer.pow(r / 2);
    return mat_pow(SymMatrix(o.matrix() * inner.pow(p).matrix() * o.matrix()), inv_q, tol);
  };

  ProofTrace trace;
  trace.add("furuta-A: (A^{r/2} A^p A^{r/2})^{1/q} >= (A^{r/2} B^p A^{r/2})^{1/q}",
            loewner_geq(sandwich(pa, pa), sandwich(pa, pb), tol));
  trace.add("furuta-B: (B^{r/2} A^p B^{r/2})^{1/q} >= (B^{r/2} B^p B^{r/2})^{1/q}",
            loewner_geq(sandwich(pb, pa), sandwich(pb, pb), tol));
  return trace;
}

namespace {

SymMatrix sandwich(const SymMatrix& outer, const SymMatrix& inner) {
  return SymMatrix(outer.matrix() * inner.matrix() * outer.matrix());
}

}  // namespace

ProofTrace proof_trace(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                       const ToleranceModel& tol) {
  const RegionClass region = classify_region(params);
  if (region.region == Region::None) {
    throw PreconditionViolated("proof_trace: parameters " + params.describe() +
                               " lie outside both theorem regions");
  }
  ChainContext ctx(a, b, tol);
  const SymMatrix lhs = ctx.lhs(params);
  const OrderVerdict hypothesis = loewner_geq(lhs, b, tol);
  if (!hypothesis.holds) {
    throw PreconditionViolated("proof_trace: hypothesis fails for " + params.describe());
  }

  const ParamValue& s = params.s();
  const ParamValue& t = params.t();
  const ParamValue d = params.denominator();
  const ParamValue m(params.repetitions());
  const ParamValue l = params.total_exponent();
  const ParamValue r = ParamValue(2) * (t - s) / d;
  const ParamValue one(1);

  auto& pa = ctx.a();
  auto& pb = ctx.b();
  // X = B^{t/d} A^{(s−t)/d} B^{t/d}; the chain with B^{t/d} ends is X^m.
  const SymMatrix x = sandwich(pb.pow((t / d).value()), pa.pow(((s - t) / d).value()));
  const SymMatrix c = ctx.chain_with_ends(params, (t / d).value());
  const SymMatrix& b_s_plus_t = pb.pow(((s + t) / d).value());

  ProofTrace trace;
  if (region.region == Region::I) {
    const ParamValue beta = (one + r) / (l + r);
    const SymMatrix lifted = mat_pow(lhs, l.value(), tol);
    trace.add("furuta: (B^{(t-s)/d} A1^l B^{(t-s)/d})^{(1+r)/(l+r)} >= B^{1+r}",
              loewner_geq(mat_pow(sandwich(pb.pow(((t - s) / d).value()), lifted), beta.value(), tol),
                          pb.pow((one + r).value()), tol));
    const SymMatrix c_beta = mat_pow(c, beta.value(), tol);
    trace.add("lift: C^{(1+r)/(l+r)} >= B^{1+r}",
              loewner_geq(c_beta, pb.pow((one + r).value()), tol));
    trace.add("lift-identity: C^{(1+r)/(l+r)} == X^{m(1+r)/(l+r)}",
              equality_verdict(c_beta, mat_pow(x, (m * beta).value(), tol), tol));
  } else {
    trace.add("chain-bound: chain >= B^l", loewner_geq(ctx.chain(params), pb.pow(l.value()), tol));
    trace.add("lift: C >= B^{m(s+t)/d}",
              loewner_geq(c, pb.pow((m * (s + t) / d).value()), tol));
    trace.add("lift-identity: C == X^m", equality_verdict(c, mat_pow(x, m.value(), tol), tol));
  }
  trace.add("middle: X >= B^{(s+t)/d}",
            loewner_geq(x, b_s_plus_t, tol));
  const double shrink = ((s - t) / d).value();
  trace.add("shrink: A^{(s-t)/d} >= B^{(s-t)/d}", loewner_geq(pa.pow(shrink), pb.pow(shrink), tol));
  trace.add("reverse: B^{(t-s)/d} >= A^{(t-s)/d}",
            loewner_geq(pb.pow(-shrink), pa.pow(-shrink), tol));
  trace.add("log: log B >= log A",
            loewner_geq(mat_log(pb.decomposition(), tol), mat_log(pa.decomposition(), tol), tol));
  if (region.operator_order_condition) trace.add("operator: B >= A", loewner_geq(b, a, tol));
  return trace;
}

ProofTrace proof_trace_grand(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                             const ToleranceModel& tol) {
  if (!params.is_grand()) {
    throw PreconditionViolated("proof_trace_grand: needs GrandN parameters, got " +
                               params.describe());
  }
  return proof_trace(a, b, params, tol);
}

}  // namespace loewner_lab
