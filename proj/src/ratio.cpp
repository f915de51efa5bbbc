#include "pathres/ratio.hpp"

#include "pathres/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

namespace pathres {

namespace {

bool mul_checked(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_mul_overflow(a, b, &out); }

std::optional<std::int64_t> pow10(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i)
    if (!mul_checked(p, 10, p))
      return std::nullopt;
  return p;
}

std::optional<Ratio> parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::int64_t digits = 0;
  int frac_digits = 0;
  bool seen_digit = false;
  bool in_frac = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (in_frac)
        return std::nullopt;
      in_frac = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      break;
    seen_digit = true;
    if (!mul_checked(digits, 10, digits) || __builtin_add_overflow(digits, c - '0', &digits))
      return std::nullopt;
    if (in_frac)
      ++frac_digits;
  }
  if (!seen_digit)
    return std::nullopt;

  int exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E')
      return std::nullopt;
    const auto rest = s.substr(i + 1);
    const char* first = rest.data();
    if (!rest.empty() && rest.front() == '+')
      ++first;
    const auto [ptr, ec] = std::from_chars(first, rest.data() + rest.size(), exponent);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || first == rest.data() + rest.size())
      return std::nullopt;
  }

  const int scale = exponent - frac_digits;
  std::int64_t num = digits;
  std::int64_t den = 1;
  if (scale >= 0) {
    const auto p = pow10(scale);
    if (!p || !mul_checked(num, *p, num))
      return std::nullopt;
  } else {
    const auto p = pow10(-scale);
    if (!p)
      return std::nullopt;
    den = *p;
  }
  return make_ratio(negative ? -num : num, den);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    return std::nullopt;
  return v;
}

} // namespace

std::string Ratio::str() const {
  if (den == 1)
    return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw ValidationError("zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
      throw ValidationError("ratio overflow");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

std::optional<Ratio> parse_ratio(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty())
    return std::nullopt;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = parse_int(text.substr(0, slash));
    const auto q = parse_int(text.substr(slash + 1));
    if (!p || !q || *q == 0)
      return std::nullopt;
    return make_ratio(*p, *q);
  }
  return parse_decimal(text);
}

std::optional<Ratio> ratio_from_double(double v) {
  if (!std::isfinite(v))
    return std::nullopt;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return parse_decimal(std::string_view(buf, res.ptr));
}

} // namespace pathres
