#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pathres {

/// Exact rational num/den in lowest terms with den > 0. Used for weights that
/// must sum to exactly one (1/3 or a decimal like 0.1 are not representable
/// as doubles).
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// "p/q", or "p" when den == 1.
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Reduces and normalizes the sign. Throws ValidationError when den == 0.
Ratio make_ratio(std::int64_t num, std::int64_t den);

/// Parses "p/q", an integer, or a plain decimal such as "0.125" or "1e-3",
/// exactly. Returns nullopt on malformed input or int64 overflow.
std::optional<Ratio> parse_ratio(std::string_view text);

/// Exact decimal value of the shortest round-trip representation of `v`, so
/// that 0.1 read from JSON becomes 1/10.
std::optional<Ratio> ratio_from_double(double v);

} // namespace pathres
