#include "loewner_lab/ffn.hpp"

#include <initializer_list>
#include <string>

#include "loewner_lab/errors.hpp"

namespace loewner_lab {

namespace {

const SymMatrix& check_pair(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("chain: A has dimension " + std::to_string(a.dim()) +
                            " but B has dimension " + std::to_string(b.dim()));
  }
  return a;
}

PowerCache positive_cache(const SymMatrix& m, const ToleranceModel& tol, const char* name) {
  PowerCache cache(m, tol);
  require_positive_definite(cache.decomposition(), tol, name);
  return cache;
}

SymMatrix product(std::initializer_list<const SymMatrix*> factors) {
  auto it = factors.begin();
  Matrix acc = (*it)->matrix();
  for (++it; it != factors.end(); ++it) acc = acc * (*it)->matrix();
  return SymMatrix(acc);
}

void require_variant(const ChainParams& params, bool want_grand, const char* op) {
  if (params.is_grand() != want_grand) {
    throw BadParameters(std::string(op) + ": wrong chain variant (" + params.describe() + ")");
  }
}

}  // namespace

ChainContext::ChainContext(const SymMatrix& a, const SymMatrix& b, const ToleranceModel& tol)
    : a_(positive_cache(check_pair(a, b), tol, "chain operand A")),
      b_(positive_cache(b, tol, "chain operand B")),
      tol_(tol) {}

SymMatrix ChainContext::chain_with_ends(const ChainParams& params, double end_exponent) {
  const ParamValue d = params.denominator();
  const double a_power = ((params.s() - params.t()) / d).value();
  const double mid_power = ((ParamValue(2) * params.t()) / d).value();
  const int reps = params.repetitions();

  const SymMatrix& end = b_.pow(end_exponent);
  const SymMatrix& a_factor = a_.pow(a_power);
  const SymMatrix& mid = b_.pow(mid_power);

  Matrix acc = end.matrix() * a_factor.matrix();
  for (int k = 1; k < reps; ++k) {
    acc = acc * mid.matrix();
    acc = acc * a_factor.matrix();
  }
  acc = acc * end.matrix();
  return SymMatrix(acc);
}

SymMatrix ChainContext::chain(const ChainParams& params) {
  return chain_with_ends(params, (params.s() / params.denominator()).value());
}

SymMatrix ChainContext::lhs(const ChainParams& params) {
  const double outer = (params.denominator() / params.outer_denominator()).value();
  return mat_pow(chain(params), outer, tol_);
}

SymMatrix grand_chain(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                      const ToleranceModel& tol) {
  require_variant(params, true, "grand_chain");
  ChainContext ctx(a, b, tol);
  return ctx.chain(params);
}

SymMatrix grand_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                    const ToleranceModel& tol) {
  require_variant(params, true, "grand_lhs");
  ChainContext ctx(a, b, tol);
  return ctx.lhs(params);
}

SymMatrix p_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                const ToleranceModel& tol) {
  require_variant(params, false, "p_lhs");
  ChainContext ctx(a, b, tol);
  return ctx.lhs(params);
}

SymMatrix hypothesis_lhs(const SymMatrix& a, const SymMatrix& b, const ChainParams& params,
                         const ToleranceModel& tol) {
  ChainContext ctx(a, b, tol);
  return ctx.lhs(params);
}

SymMatrix fujii_furuta_kamei_lhs(const SymMatrix& a, const SymMatrix& b, double t,
                                 const ToleranceModel& tol) {
  return fujii_fujii_nakamoto_lhs(a, b, 1.0, t, tol);
}

SymMatrix fujii_fujii_nakamoto_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                                   const ToleranceModel& tol) {
  ChainContext ctx(a, b, tol);
  const SymMatrix& bs = ctx.b().pow(s / 2);
  const SymMatrix& ast = ctx.a().pow((s - t) / 2);
  const SymMatrix& bt = ctx.b().pow(t);
  return mat_pow(product({&bs, &ast, &bt, &ast, &bs}), 1.0 / (2 * s), tol);
}

SymMatrix literal_n3_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                           const ToleranceModel& tol) {
  ChainContext ctx(a, b, tol);
  const SymMatrix& bs = ctx.b().pow(s / 3);
  const SymMatrix& ast = ctx.a().pow((s - t) / 3);
  const SymMatrix& b2t = ctx.b().pow((2 * t) / 3);
  return mat_pow(product({&bs, &ast, &b2t, &ast, &b2t, &ast, &bs}), 3 / (5 * s + t), tol);
}

SymMatrix literal_p3_lhs(const SymMatrix& a, const SymMatrix& b, double s, double t,
                           const ToleranceModel& tol) {
  ChainContext ctx(a, b, tol);
  const SymMatrix& bs = ctx.b().pow(s / 3);
  const SymMatrix& ast = ctx.a().pow((s - t) / 3);
  const SymMatrix& b2t = ctx.b().pow((2 * t) / 3);
  return mat_pow(product({&bs, &ast, &b2t, &ast, &bs}), 3 / (4 * s), tol);
}

}  // namespace loewner_lab
