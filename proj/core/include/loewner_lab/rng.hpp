#pragma once

#include <cstdint>
#include <limits>

namespace loewner_lab {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Derives an independent seed for child `index` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed + kGoldenGamma) ^ mix64(index * kGoldenGamma + 0x632be59bd9b4e019ULL));
}

/// Counter-based stream: output k is mix64(key + k·γ), with the key obtained
/// by SplitMix seeding from (seed, stream id). Two streams with different
/// ids never share state, so attempts can run in any order.
///
/// Uniform and normal variates are produced by fixed formulas (53-bit
/// mantissa fill, Box–Muller) rather than std:: distributions, whose output
/// is implementation-defined.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0) noexcept
      : key_(derive_seed(seed, stream_id)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next_u64(); }
  std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGoldenGamma); }

  /// Uniform in [0, 1).
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) noexcept;
  double normal() noexcept;

  /// Child stream keyed on this stream's key (not its position).
  RandomStream substream(std::uint64_t id) const noexcept;

 private:
  RandomStream() = default;

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace loewner_lab
