#include "pathres/config.hpp"

#include "pathres/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pathres {

namespace {

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(',', pos);
    auto part = s.substr(pos, next == std::string_view::npos ? next : next - pos);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front())))
      part.remove_prefix(1);
    while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back())))
      part.remove_suffix(1);
    parts.push_back(part);
    if (next == std::string_view::npos)
      break;
    pos = next + 1;
  }
  return parts;
}

double parse_number(std::string_view token, std::string_view what) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+')
    ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last || !std::isfinite(v))
    throw ValidationError("invalid " + std::string(what) + " value '" + std::string(token) + "'");
  return v;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// JSON value (preset string, shorthand string or array) to the textual form.
std::string vector_spec(const nlohmann::json& j, std::string_view key) {
  if (j.is_string())
    return j.get<std::string>();
  if (!j.is_array())
    throw ValidationError("config field '" + std::string(key) + "' must be a string or an array");
  std::string out;
  for (const auto& item : j) {
    if (!out.empty())
      out += ',';
    if (item.is_number())
      out += format_number(item.get<double>());
    else if (item.is_string())
      out += item.get<std::string>();
    else
      throw ValidationError("config field '" + std::string(key) + "' has a non-numeric entry");
  }
  return out;
}

} // namespace

PcVector resolve_gamma(std::string_view spec, std::size_t k_bar) {
  if (const auto preset = parse_gamma_preset(spec))
    return gamma_preset(*preset, k_bar);
  std::vector<double> values;
  for (auto token : split_commas(spec))
    values.push_back(parse_number(token, "gamma"));
  if (values.size() != k_bar)
    throw ValidationError("gamma has " + std::to_string(values.size()) + " components but kbar is " +
                          std::to_string(k_bar));
  return PcVector(std::move(values));
}

ThetaVector resolve_theta(std::string_view spec, std::size_t k_bar) {
  if (const auto preset = parse_theta_preset(spec))
    return theta_preset(*preset, k_bar);
  std::vector<Ratio> values;
  for (auto token : split_commas(spec)) {
    const auto r = parse_ratio(token);
    if (!r)
      throw ValidationError("invalid theta value '" + std::string(token) + "'");
    values.push_back(*r);
  }
  if (values.size() != k_bar)
    throw ValidationError("theta has " + std::to_string(values.size()) + " components but kbar is " +
                          std::to_string(k_bar));
  return ThetaVector(std::move(values));
}

std::vector<double> parse_grid(std::string_view text) {
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
      throw ValidationError("grid shorthand must be start:stop:step");
    const auto start = parse_ratio(text.substr(0, c1));
    const auto stop = parse_ratio(text.substr(c1 + 1, c2 - c1 - 1));
    const auto step = parse_ratio(text.substr(c2 + 1));
    if (!start || !stop || !step)
      throw ValidationError("invalid grid shorthand '" + std::string(text) + "'");
    if (step->num <= 0)
      throw ValidationError("grid step must be positive");
    // Bring all three onto a common denominator and count in integers.
    const std::int64_t lcm = std::lcm(std::lcm(start->den, stop->den), step->den);
    std::int64_t a = 0, b = 0, s = 0;
    if (__builtin_mul_overflow(start->num, lcm / start->den, &a) ||
        __builtin_mul_overflow(stop->num, lcm / stop->den, &b) ||
        __builtin_mul_overflow(step->num, lcm / step->den, &s))
      throw ValidationError("grid shorthand out of range");
    if (b < a)
      throw ValidationError("grid stop is below start");
    const std::int64_t count = (b - a) / s + 1;
    if (count > 1'000'000)
      throw ValidationError("grid has too many points");
    for (std::int64_t i = 0; i < count; ++i)
      grid.push_back(static_cast<double>(a + i * s) / static_cast<double>(lcm));
  } else {
    for (auto token : split_commas(text))
      grid.push_back(parse_number(token, "grid"));
  }
  validate_grid(grid, "grid");
  return grid;
}

PcStrategy require_strategy(std::string_view token) {
  if (const auto s = parse_strategy(token))
    return *s;
  throw ValidationError("unknown strategy '" + std::string(token) + "' (valid: " + std::string(strategy_tokens()) +
                        ")");
}

SweepConfig apply_config(const nlohmann::json& j, SweepConfig base) {
  if (!j.is_object())
    throw ValidationError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "gamma") {
      base.gamma = vector_spec(value, key);
    } else if (key == "theta") {
      base.theta = vector_spec(value, key);
    } else if (key == "xi_grid" || key == "delta_grid") {
      auto& grid = key == "xi_grid" ? base.xi_grid : base.delta_grid;
      grid = parse_grid(vector_spec(value, key));
    } else if (key == "strategy") {
      if (!value.is_string())
        throw ValidationError("config field 'strategy' must be a string");
      base.strategy = require_strategy(value.get<std::string>());
    } else if (key == "emit_per_k") {
      if (!value.is_boolean())
        throw ValidationError("config field 'emit_per_k' must be a boolean");
      base.emit_per_k = value.get<bool>();
    } else {
      throw ValidationError("unknown config field '" + key + "'");
    }
  }
  return base;
}

SweepConfig load_config_file(const std::string& path, SweepConfig base) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return apply_config(j, std::move(base));
}

} // namespace pathres
