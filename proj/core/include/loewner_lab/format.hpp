#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace loewner_lab {

/// Shortest round-trip decimal form; always '.' as separator, independent of locale.
std::string format_double(double value);

/// Strict locale-independent parse of the whole string.
std::optional<double> parse_double(std::string_view text);

}  // namespace loewner_lab
