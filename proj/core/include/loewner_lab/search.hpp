#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "loewner_lab/matrix.hpp"
#include "loewner_lab/params.hpp"
#include "loewner_lab/rng.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab {

enum class Strategy { Commuting, ScaledRandom, RejectionRandom };

std::string_view to_string(Strategy strategy) noexcept;
std::optional<Strategy> parse_strategy(std::string_view text);

inline constexpr std::size_t kMaxSampleDim = 16;
inline constexpr double kDefaultSpread = 10.0;
/// Multiplier applied on top of the sufficient scale in sample_scaled_pair.
inline constexpr double kScaleSafetyFactor = 1.0 + 1e-6;

/// Largest evaluation_condition the samplers accept. Past this, rounding in
/// the chain product can exceed the small eigenvalues the margins resolve.
inline constexpr double kMaxChainCondition = 1e12;

struct SampleSpec {
  std::size_t dim = 3;
  ChainParams params;
  Strategy strategy = Strategy::ScaledRandom;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;
  /// Eigenvalues are drawn log-uniformly from [1/spread, spread].
  double spread = kDefaultSpread;

  /// Throws BadParameters unless 1 ≤ dim ≤ 16, budget ≥ 1 and spread > 0.
  void validate() const;
};

struct MatrixPair {
  SymMatrix a;
  SymMatrix b;
};

/// Haar-distributed orthogonal matrix: Gram–Schmidt (applied twice) on
/// Gaussian columns.
Matrix random_orthogonal(std::size_t dim, RandomStream& rng);

/// Q·diag(λ)·Qᵀ with λ log-uniform in [1/spread, spread]. spread = 1 yields the identity.
SymMatrix random_pd(std::size_t dim, RandomStream& rng, double spread = kDefaultSpread);

/// G·Gᵀ·(scale/dim) for a Gaussian G of random rank in [1, dim].
SymMatrix random_psd(std::size_t dim, RandomStream& rng, double scale = 1.0);

/// Scalar form of the hypothesis for one shared eigenvector:
/// b^{(2s+2(m−1)t)/D} · a^{m(s−t)/D} ≥ b.
bool scalar_hypothesis(double a, double b, const ChainParams& params);

/// Shared eigenbasis; each eigenvalue pair is redrawn up to spec.budget times
/// until scalar_hypothesis accepts it. Throws BudgetExhausted.
MatrixPair sample_commuting_pair(const SampleSpec& spec);

/// Random A, B₀ and the sufficient scale c; returns (A, c·B₀). Throws
/// NumericalFailure if the draw is too ill-conditioned to evaluate or the
/// scale overflows.
MatrixPair sample_scaled_pair(const SampleSpec& spec);

/// Random A, B until the hypothesis margin is nonnegative. The relative
/// slack alone is not accepted: when the chain side is large it can hide a
/// clearly negative eigenvalue of lhs − B. Throws BudgetExhausted.
MatrixPair sample_rejection_pair(const SampleSpec& spec, const ToleranceModel& tol = {});

/// Dispatches on spec.strategy.
MatrixPair sample_pair(const SampleSpec& spec, const ToleranceModel& tol = {});

/// λmax/λmin; infinity unless positive definite.
double condition_number(const SymMatrix& pd);

/// A priori error amplification of the hypothesis side:
/// (cond(A)^{|a_exp|} · cond(B)^{|b_exp|})^{max(1, 1/l)}, where a_exp and
/// b_exp are the total chain exponents and l the chain's total degree.
/// Every sampler refuses draws above kMaxChainCondition with NumericalFailure.
double evaluation_condition(double cond_a, double cond_b, const ChainParams& params);
double evaluation_condition(const SymMatrix& a, const SymMatrix& b, const ChainParams& params);

/// Largest spread (capped at kDefaultSpread) for which the hypothesis side
/// stays within roughly 10^max_log10_condition in condition number, based on
/// the total exponents of A and B in the chain and the outer power.
double suggested_spread(const ChainParams& params, double max_log10_condition = 8.0);

/// Exponent by which the hypothesis side outgrows B under B → cB:
/// (2s + 2(m−1)t)/D − 1 = m(t−s)/D.
double scaling_excess(const ChainParams& params);

enum class HuntTarget { Chaotic, Operator };

std::string_view to_string(HuntTarget target) noexcept;
std::optional<HuntTarget> parse_hunt_target(std::string_view text);

struct HuntResult {
  bool found = false;
  std::optional<MatrixPair> pair;
  /// Target margin of the reported pair when found; otherwise the smallest
  /// target margin seen over hypothesis-satisfying attempts (NaN if none).
  double violation_margin = 0.0;
  std::uint64_t attempts = 0;
  std::uint64_t hypothesis_hits = 0;
  /// Attempts whose draw was rejected as too ill-conditioned to evaluate.
  std::uint64_t numerical_failures = 0;
};

/// One candidate per attempt, attempt i drawing from stream (seed, i); the
/// first pair with a nonnegative hypothesis margin whose target conclusion fails by
/// more than 10·tol.rel is returned. Results do not depend on thread count.
/// Throws InvalidTarget when the parameters already prove the target.
HuntResult hunt_counterexample(const SampleSpec& spec, HuntTarget target,
                               const ToleranceModel& tol = {});

/// Recomputes hypothesis and target verdicts for a found pair from scratch.
bool reverify_hunt(const HuntResult& result, const ChainParams& params, HuntTarget target,
                   const ToleranceModel& tol = {});

}  // namespace loewner_lab
