#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loewner_lab/params.hpp"
#include "loewner_lab/search.hpp"
#include "loewner_lab/theorems.hpp"
#include "loewner_lab/tolerance.hpp"

namespace loewner_lab::cli {

std::string_view version() noexcept;

/// Exactly one of n or p.
struct VariantArg {
  std::optional<int> n;
  std::optional<ParamValue> p;
};

/// Throws InputError unless exactly one variant is set; ChainParams
/// validation errors propagate as BadParameters.
ChainParams make_params(const ParamValue& s, const ParamValue& t, const VariantArg& variant);

/// "lo:hi" with lo ≤ hi; either side may be a fraction.
struct GridRange {
  ParamValue lo;
  ParamValue hi;
};

std::optional<GridRange> parse_range(std::string_view text);

/// count evenly spaced points from lo to hi inclusive (count = 1 gives lo).
/// Exact inputs give exact points.
std::vector<ParamValue> grid_points(const GridRange& range, std::size_t count);

/// "auto" resolves per parameter point through suggested_spread.
struct SpreadArg {
  std::optional<double> fixed = kDefaultSpread;

  double resolve(const ChainParams& params) const;
  std::string describe() const;
};

std::optional<SpreadArg> parse_spread(std::string_view text);

struct ScanOptions {
  GridRange s_range;
  GridRange t_range;
  std::size_t grid = 5;
  VariantArg variant;
  std::size_t dim = 3;
  std::size_t pairs = 20;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::ScaledRandom;
  SpreadArg spread;
  std::uint64_t budget = 1000;
  ToleranceModel tol;
};

struct ScanRow {
  ChainParams params;
  RegionClass region;
  std::uint64_t pairs_tested = 0;
  std::uint64_t hypothesis_hits = 0;
  std::uint64_t chaotic_ok = 0;
  std::uint64_t operator_ok = 0;
  /// Draws the sampler could not produce (budget exhausted or ill-conditioned).
  std::uint64_t sample_errors = 0;
  /// Smallest chaotic-order margin over hypothesis hits; NaN when there are none.
  double min_margin = 0.0;

  /// A proven conclusion failed on some hypothesis hit.
  bool proven_failure() const noexcept;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  /// Grid points with t ≤ s.
  std::uint64_t skipped = 0;

  bool proven_failure() const noexcept;
};

/// Grid point (i, j) uses seed derive_seed(seed, i·grid + j) and pair k the
/// stream derive_seed of that with k, so rows do not depend on each other.
ScanResult run_scan(const ScanOptions& options);

void write_scan_csv(std::ostream& out, const ScanOptions& options, const ScanResult& result);

struct HuntOptions {
  ParamValue s;
  ParamValue t;
  VariantArg variant;
  HuntTarget target = HuntTarget::Operator;
  std::size_t dim = 3;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::ScaledRandom;
  SpreadArg spread;
  ToleranceModel tol;
};

struct HuntRun {
  ChainParams params;
  RegionClass region;
  HuntResult result;
};

/// Throws InvalidTarget for proven cases and BadParameters for budget 0.
HuntRun run_hunt(const HuntOptions& options);

void write_hunt_csv(std::ostream& out, const HuntOptions& options, const HuntRun& run);

}  // namespace loewner_lab::cli
