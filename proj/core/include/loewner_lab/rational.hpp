#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace loewner_lab {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Reduced fraction over int64 with a positive denominator. Arithmetic
/// reports overflow through std::nullopt instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  /// Accepts "p", "-p", "p/q". Anything else (decimals, exponents) is rejected.
  static std::optional<Rational> parse(std::string_view text);

  friend std::optional<Rational> add(const Rational& a, const Rational& b);
  friend std::optional<Rational> sub(const Rational& a, const Rational& b);
  friend std::optional<Rational> mul(const Rational& a, const Rational& b);
  friend std::optional<Rational> div(const Rational& a, const Rational& b);

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  static std::optional<Rational> from_wide(detail::wide_int num, detail::wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A real parameter that remembers its exact rational value when it has one.
/// Arithmetic stays exact while both operands are exact and nothing overflows.
class ParamValue {
 public:
  ParamValue() = default;
  ParamValue(double value) : value_(value) {}
  ParamValue(int value) : ParamValue(Rational(value)) {}
  ParamValue(Rational exact) : value_(exact.to_double()), exact_(exact) {}

  /// Integers and "p/q" become exact; decimal or exponent notation stays floating.
  /// Returns nullopt when the text is not a finite number.
  static std::optional<ParamValue> parse(std::string_view text);

  double value() const noexcept { return value_; }
  const std::optional<Rational>& exact() const noexcept { return exact_; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  std::string to_string() const;

  friend ParamValue operator+(const ParamValue& a, const ParamValue& b);
  friend ParamValue operator-(const ParamValue& a, const ParamValue& b);
  friend ParamValue operator*(const ParamValue& a, const ParamValue& b);
  friend ParamValue operator/(const ParamValue& a, const ParamValue& b);

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

/// Band within which floating-point comparisons count as equality.
inline constexpr double kRegionEqualityBand = 1e-12;

/// Exact when both sides are exact; otherwise |a − b| ≤ kRegionEqualityBand
/// compares equal.
std::partial_ordering compare(const ParamValue& a, const ParamValue& b);

inline bool strictly_greater(const ParamValue& a, const ParamValue& b) { return compare(a, b) > 0; }
inline bool at_least(const ParamValue& a, const ParamValue& b) { return compare(a, b) >= 0; }

}  // namespace loewner_lab
