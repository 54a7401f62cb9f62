#include "loewner_lab/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/ffn.hpp"
#include "loewner_lab/format.hpp"
#include "loewner_lab/loewner.hpp"
#include "loewner_lab/matcore.hpp"
#include "loewner_lab/parallel.hpp"
#include "loewner_lab/theorems.hpp"

namespace loewner_lab {

std::string_view to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::Commuting: return "commuting";
    case Strategy::ScaledRandom: return "scaled";
    case Strategy::RejectionRandom: return "rejection";
  }
  return "scaled";
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  if (text == "commuting") return Strategy::Commuting;
  if (text == "scaled") return Strategy::ScaledRandom;
  if (text == "rejection") return Strategy::RejectionRandom;
  return std::nullopt;
}

std::string_view to_string(HuntTarget target) noexcept {
  return target == HuntTarget::Chaotic ? "chaotic" : "operator";
}

std::optional<HuntTarget> parse_hunt_target(std::string_view text) {
  if (text == "chaotic") return HuntTarget::Chaotic;
  if (text == "operator") return HuntTarget::Operator;
  return std::nullopt;
}

void SampleSpec::validate() const {
  if (dim < 1 || dim > kMaxSampleDim) {
    throw BadParameters("SampleSpec: dim must lie in [1, " + std::to_string(kMaxSampleDim) + "]");
  }
  if (budget < 1) throw BadParameters("SampleSpec: budget must be at least 1");
  if (!std::isfinite(spread) || !(spread > 0.0)) {
    throw BadParameters("SampleSpec: spread must be positive");
  }
}

Matrix random_orthogonal(std::size_t dim, RandomStream& rng) {
  Matrix q(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) q(i, j) = rng.normal();

  for (std::size_t k = 0; k < dim; ++k) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        double dot = 0.0;
        for (std::size_t i = 0; i < dim; ++i) dot += q(i, j) * q(i, k);
        for (std::size_t i = 0; i < dim; ++i) q(i, k) -= dot * q(i, j);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < dim; ++i) norm += q(i, k) * q(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) throw NumericalFailure("random_orthogonal: degenerate Gaussian draw");
    for (std::size_t i = 0; i < dim; ++i) q(i, k) /= norm;
  }
  return q;
}

namespace {

constexpr double kMaxLog10Magnitude = 250.0;

/// Extra amplification of the outer power when it exceeds 1.
double chain_weight(const ChainParams& params) {
  return std::max(1.0, 1.0 / params.total_exponent().value());
}

double log_uniform(RandomStream& rng, double spread) {
  const double half_width = std::log(spread);
  return std::exp(half_width * (2.0 * rng.uniform() - 1.0));
}

SymMatrix conjugate(const Matrix& q, const std::vector<double>& spectrum) {
  const std::size_t n = q.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * spectrum[k] * q(j, k);
      out(i, j) = acc;
    }
  return SymMatrix(out);
}

}  // namespace

SymMatrix random_pd(std::size_t dim, RandomStream& rng, double spread) {
  if (dim < 1) throw BadParameters("random_pd: dim must be at least 1");
  if (!(spread > 0.0) || !std::isfinite(spread)) throw BadParameters("random_pd: spread must be positive");
  if (spread == 1.0) return SymMatrix::identity(dim);
  const Matrix q = random_orthogonal(dim, rng);
  std::vector<double> spectrum(dim);
  for (double& v : spectrum) v = log_uniform(rng, spread);
  return conjugate(q, spectrum);
}

SymMatrix random_psd(std::size_t dim, RandomStream& rng, double scale) {
  const auto rank = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(dim)));
  Matrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.normal();
  return SymMatrix(g * g.transposed() * (scale / static_cast<double>(dim)));
}

bool scalar_hypothesis(double a, double b, const ChainParams& params) {
  const ParamValue outer = params.outer_denominator();
  const ParamValue excess = params.b_exponent() * params.denominator() / outer - ParamValue(1);
  const double a_power = (params.a_exponent() * params.denominator() / outer).value();
  // b^x a^y >= b  <=>  (x - 1) log b + y log a >= 0
  const double lb = excess.value() * std::log(b);
  const double la = a_power * std::log(a);
  return lb + la >= -1e-14 * (std::abs(lb) + std::abs(la));
}

double condition_number(const SymMatrix& pd) {
  const auto eig = eigh(pd);
  const double lmin = eig.eigenvalues.front();
  if (!(lmin > 0.0)) return std::numeric_limits<double>::infinity();
  return eig.eigenvalues.back() / lmin;
}

double evaluation_condition(double cond_a, double cond_b, const ChainParams& params) {
  const double weight = chain_weight(params);
  return std::exp(weight * (std::abs(params.a_exponent().value()) * std::log(cond_a) +
                            std::abs(params.b_exponent().value()) * std::log(cond_b)));
}

double evaluation_condition(const SymMatrix& a, const SymMatrix& b, const ChainParams& params) {
  return evaluation_condition(condition_number(a), condition_number(b), params);
}

double suggested_spread(const ChainParams& params, double max_log10_condition) {
  const double weight = chain_weight(params) * (std::abs(params.b_exponent().value()) +
                                                std::abs(params.a_exponent().value()));
  return std::min(kDefaultSpread, std::pow(10.0, max_log10_condition / (2.0 * weight)));
}

double scaling_excess(const ChainParams& params) {
  return (params.b_exponent() / params.total_exponent() - ParamValue(1)).value();
}

namespace {

void require_conditioned(double condition, const char* who) {
  if (!(condition <= kMaxChainCondition)) {
    throw NumericalFailure(std::string(who) + ": chain side condition number " +
                           format_double(condition) + " exceeds " +
                           format_double(kMaxChainCondition) + "; reduce spread");
  }
}

std::optional<MatrixPair> draw_commuting(const SampleSpec& spec, RandomStream& rng,
                                         std::uint64_t tries_per_index) {
  const Matrix q = random_orthogonal(spec.dim, rng);
  std::vector<double> as(spec.dim), bs(spec.dim);
  for (std::size_t i = 0; i < spec.dim; ++i) {
    bool accepted = false;
    for (std::uint64_t k = 0; k < tries_per_index && !accepted; ++k) {
      as[i] = log_uniform(rng, spec.spread);
      bs[i] = log_uniform(rng, spec.spread);
      accepted = scalar_hypothesis(as[i], bs[i], spec.params);
    }
    if (!accepted) return std::nullopt;
  }
  const auto spread_of = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi / *lo;
  };
  require_conditioned(evaluation_condition(spread_of(as), spread_of(bs), spec.params),
                      "sample_commuting_pair");
  return MatrixPair{conjugate(q, as), conjugate(q, bs)};
}

MatrixPair draw_scaled(const SampleSpec& spec, RandomStream& rng) {
  SymMatrix a = random_pd(spec.dim, rng, spec.spread);
  SymMatrix b0 = random_pd(spec.dim, rng, spec.spread);
  require_conditioned(evaluation_condition(a, b0, spec.params), "sample_scaled_pair");
  const auto eig = eigh(hypothesis_lhs(a, b0, spec.params));
  const double lmin = eig.eigenvalues.front();
  if (!(lmin > 0.0)) {
    throw NumericalFailure("sample_scaled_pair: chain side has non-positive eigenvalue " +
                           format_double(lmin));
  }
  const double excess = scaling_excess(spec.params);
  const double c = std::pow(max_eigenvalue(b0) / lmin, 1.0 / excess) * kScaleSafetyFactor;
  // Every power of c·B₀ the chain forms must stay far inside double range.
  const double b_spread = std::max(std::abs(std::log10(c * max_eigenvalue(b0))),
                                   std::abs(std::log10(c * min_eigenvalue(b0))));
  const double magnitude = b_spread * chain_weight(spec.params) *
                           std::max(1.0, std::abs(spec.params.b_exponent().value()));
  if (!(magnitude <= kMaxLog10Magnitude)) {
    throw NumericalFailure("sample_scaled_pair: scale factor " + format_double(c) +
                           " drives chain entries out of range (excess " + format_double(excess) + ")");
  }
  return MatrixPair{std::move(a), c * b0};
}

std::optional<MatrixPair> draw_rejection(const SampleSpec& spec, RandomStream& rng,
                                         const ToleranceModel& tol) {
  SymMatrix a = random_pd(spec.dim, rng, spec.spread);
  SymMatrix b = random_pd(spec.dim, rng, spec.spread);
  require_conditioned(evaluation_condition(a, b, spec.params), "sample_rejection_pair");
  if (check_hypothesis(a, b, spec.params, tol).margin < 0.0) return std::nullopt;
  return MatrixPair{std::move(a), std::move(b)};
}

}  // namespace

MatrixPair sample_commuting_pair(const SampleSpec& spec) {
  spec.validate();
  RandomStream rng(spec.seed);
  if (auto pair = draw_commuting(spec, rng, spec.budget)) return *std::move(pair);
  throw BudgetExhausted("sample_commuting_pair: no accepted eigenvalue pair within " +
                        std::to_string(spec.budget) + " draws for " + spec.params.describe());
}

MatrixPair sample_scaled_pair(const SampleSpec& spec) {
  spec.validate();
  RandomStream rng(spec.seed);
  return draw_scaled(spec, rng);
}

MatrixPair sample_rejection_pair(const SampleSpec& spec, const ToleranceModel& tol) {
  spec.validate();
  for (std::uint64_t attempt = 0; attempt < spec.budget; ++attempt) {
    RandomStream rng(spec.seed, attempt);
    if (auto pair = draw_rejection(spec, rng, tol)) return *std::move(pair);
  }
  throw BudgetExhausted("sample_rejection_pair: hypothesis never held within " +
                        std::to_string(spec.budget) + " attempts for " + spec.params.describe());
}

MatrixPair sample_pair(const SampleSpec& spec, const ToleranceModel& tol) {
  switch (spec.strategy) {
    case Strategy::Commuting: return sample_commuting_pair(spec);
    case Strategy::ScaledRandom: return sample_scaled_pair(spec);
    case Strategy::RejectionRandom: return sample_rejection_pair(spec, tol);
  }
  throw BadParameters("sample_pair: unknown strategy");
}

namespace {

struct AttemptOutcome {
  bool hypothesis = false;
  bool numerical_failure = false;
  double target_margin = 0.0;
  std::optional<MatrixPair> pair;
};

double target_margin(const MatrixPair& pair, HuntTarget target, const ToleranceModel& tol) {
  return target == HuntTarget::Chaotic ? chaotic_geq(pair.b, pair.a, tol).margin
                                       : loewner_geq(pair.b, pair.a, tol).margin;
}

AttemptOutcome run_attempt(const SampleSpec& spec, std::uint64_t attempt, HuntTarget target,
                           const ToleranceModel& tol) {
  RandomStream rng(spec.seed, attempt);
  std::optional<MatrixPair> pair;
  AttemptOutcome out;
  try {
    switch (spec.strategy) {
      case Strategy::Commuting: pair = draw_commuting(spec, rng, 1); break;
      case Strategy::ScaledRandom: pair = draw_scaled(spec, rng); break;
      case Strategy::RejectionRandom: pair = draw_rejection(spec, rng, tol); break;
    }
  } catch (const NumericalFailure&) {
    out.numerical_failure = true;
    return out;
  }
  if (!pair || check_hypothesis(pair->a, pair->b, spec.params, tol).margin < 0.0) return out;
  out.hypothesis = true;
  out.target_margin = target_margin(*pair, target, tol);
  if (out.target_margin < -10.0 * tol.rel) out.pair = std::move(pair);
  return out;
}

void require_legal_target(const ChainParams& params, HuntTarget target) {
  const RegionClass rc = classify_region(params);
  if (rc.region == Region::None) return;
  const std::string where = "region " + std::string(to_string(rc.region)) + " (" +
                            params.describe() + ")";
  if (target == HuntTarget::Chaotic) {
    throw InvalidTarget("hunt: " + where + " is covered by the proven chaotic-order conclusion "
                        "log B >= log A; use the verification suites instead");
  }
  if (rc.operator_order_condition) {
    throw InvalidTarget("hunt: " + where + " with t - s >= " + params.variant_value() +
                        " is covered by the proven operator-order conclusion B >= A");
  }
}

}  // namespace

HuntResult hunt_counterexample(const SampleSpec& spec, HuntTarget target,
                               const ToleranceModel& tol) {
  spec.validate();
  tol.validate();
  require_legal_target(spec.params, target);

  constexpr std::uint64_t kChunk = 64;
  HuntResult result;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t start = 0; start < spec.budget; start += kChunk) {
    const std::uint64_t count = std::min(kChunk, spec.budget - start);
    std::vector<AttemptOutcome> outcomes(count);
    parallel_for(count, [&](std::size_t k) {
      outcomes[k] = run_attempt(spec, start + k, target, tol);
    });
    for (std::uint64_t k = 0; k < count; ++k) {
      auto& o = outcomes[k];
      result.attempts = start + k + 1;
      if (o.numerical_failure) ++result.numerical_failures;
      if (!o.hypothesis) continue;
      ++result.hypothesis_hits;
      min_margin = std::min(min_margin, o.target_margin);
      if (o.pair) {
        result.found = true;
        result.pair = std::move(o.pair);
        result.violation_margin = o.target_margin;
        return result;
      }
    }
  }
  result.violation_margin = result.hypothesis_hits > 0
                                ? min_margin
                                : std::numeric_limits<double>::quiet_NaN();
  return result;
}

bool reverify_hunt(const HuntResult& result, const ChainParams& params, HuntTarget target,
                   const ToleranceModel& tol) {
  if (!result.found || !result.pair) return false;
  const MatrixPair& pair = *result.pair;
  // Fresh copies force new decompositions rather than any reuse.
  const SymMatrix a(pair.a.matrix());
  const SymMatrix b(pair.b.matrix());
  if (check_hypothesis(a, b, params, tol).margin < 0.0) return false;
  return target_margin({a, b}, target, tol) < -10.0 * tol.rel;
}

}  // namespace loewner_lab
