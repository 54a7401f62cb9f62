#include "loewner_lab/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "loewner_lab/errors.hpp"
#include "loewner_lab/format.hpp"

namespace loewner_lab {

using detail::wide_int;

namespace {

wide_int wide_gcd(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw BadParameters("Rational: zero denominator");
  auto r = from_wide(num, den);
  if (!r) throw BadParameters("Rational: value out of range");
  *this = *r;
}

std::optional<Rational> Rational::from_wide(wide_int num, wide_int den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const wide_int g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr wide_int lo = std::numeric_limits<std::int64_t>::min() + 1;
  constexpr wide_int hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) return std::nullopt;
  Rational out;
  out.num_ = static_cast<std::int64_t>(num);
  out.den_ = static_cast<std::int64_t>(den);
  return out;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_int(text);
    if (!n) return std::nullopt;
    return from_wide(*n, 1);
  }
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return from_wide(*n, *d);
}

std::optional<Rational> add(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ +
                                 static_cast<wide_int>(b.num_) * a.den_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

std::optional<Rational> sub(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ -
                                 static_cast<wide_int>(b.num_) * a.den_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

std::optional<Rational> mul(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.num_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

std::optional<Rational> div(const Rational& a, const Rational& b) {
  if (b.num_ == 0) return std::nullopt;
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_,
                             static_cast<wide_int>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<wide_int>(a.num_) * b.den_ <=> static_cast<wide_int>(b.num_) * a.den_;
}

std::optional<ParamValue> ParamValue::parse(std::string_view text) {
  if (auto r = Rational::parse(text)) return ParamValue(*r);
  auto v = parse_double(text);
  if (!v || !std::isfinite(*v)) return std::nullopt;
  return ParamValue(*v);
}

std::string ParamValue::to_string() const {
  if (exact_) return exact_->to_string();
  return format_double(value_);
}

namespace {

template <typename ExactOp>
ParamValue combine(const ParamValue& a, const ParamValue& b, double floating, ExactOp op) {
  if (a.is_exact() && b.is_exact()) {
    if (auto r = op(*a.exact(), *b.exact())) return ParamValue(*r);
  }
  return ParamValue(floating);
}

}  // namespace

ParamValue operator+(const ParamValue& a, const ParamValue& b) {
  return combine(a, b, a.value_ + b.value_, [](auto& x, auto& y) { return add(x, y); });
}

ParamValue operator-(const ParamValue& a, const ParamValue& b) {
  return combine(a, b, a.value_ - b.value_, [](auto& x, auto& y) { return sub(x, y); });
}

ParamValue operator*(const ParamValue& a, const ParamValue& b) {
  return combine(a, b, a.value_ * b.value_, [](auto& x, auto& y) { return mul(x, y); });
}

ParamValue operator/(const ParamValue& a, const ParamValue& b) {
  return combine(a, b, a.value_ / b.value_, [](auto& x, auto& y) { return div(x, y); });
}

std::partial_ordering compare(const ParamValue& a, const ParamValue& b) {
  if (a.is_exact() && b.is_exact()) return *a.exact() <=> *b.exact();
  const double diff = a.value() - b.value();
  if (std::isnan(diff)) return std::partial_ordering::unordered;
  if (std::abs(diff) <= kRegionEqualityBand) return std::partial_ordering::equivalent;
  return diff < 0 ? std::partial_ordering::less : std::partial_ordering::greater;
}

}  // namespace loewner_lab
