#include "pathres/propagation.hpp"

#include "pathres/error.hpp"

#include <cmath>
#include <string>

namespace pathres {

void validate(const Shock& shock) {
  if (!std::isfinite(shock.size) || shock.size < 0.0)
    throw ValidationError("shock size must be finite and >= 0");
  if (!std::isfinite(shock.delta) || shock.delta < 0.0)
    throw ValidationError("discount factor must be finite and >= 0");
}

PcVector::PcVector(std::vector<double> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty())
    throw ValidationError("PC vector must not be empty");
  for (double g : gammas_)
    if (!std::isfinite(g) || !(g > 0.0))
      throw ValidationError("PC vector components must be finite and > 0");
}

std::string_view to_string(PcStrategy strategy) {
  switch (strategy) {
  case PcStrategy::pre_traversal:
    return "pre-traversal";
  case PcStrategy::post_arrival:
    return "post-arrival";
  case PcStrategy::literal:
    return "literal";
  }
  return "?";
}

std::optional<PcStrategy> parse_strategy(std::string_view token) {
  for (PcStrategy s : kAllStrategies)
    if (to_string(s) == token)
      return s;
  return std::nullopt;
}

std::string_view strategy_tokens() { return "pre-traversal, post-arrival, literal"; }

void shock_trace(std::span<const double> weights, const Shock& shock, std::span<double> out) {
  double xi = shock.size;
  out[0] = xi;
  for (std::size_t h = 0; h < weights.size(); ++h) {
    xi = (xi + weights[h]) * shock.delta;
    out[h + 1] = xi;
  }
}

ShockTrace shock_trace(std::span<const double> weights, const Shock& shock) {
  if (weights.empty())
    throw ValidationError("shock trace needs at least one arc");
  ShockTrace trace(weights.size() + 1);
  shock_trace(weights, shock, trace);
  return trace;
}

bool pc_holds(std::span<const double> trace, const PcVector& gamma, PcStrategy strategy) {
  const std::size_t k = trace.size() - 1;
  switch (strategy) {
  case PcStrategy::pre_traversal:
    for (std::size_t h = 1; h <= k; ++h)
      if (trace[h - 1] < gamma[h - 1])
        return false;
    return true;
  case PcStrategy::post_arrival:
    for (std::size_t h = 1; h <= k; ++h)
      if (trace[h] < gamma[h - 1])
        return false;
    return true;
  case PcStrategy::literal:
    for (std::size_t s = 1; s < k; ++s)
      if (trace[s] < gamma[s - 1])
        return false;
    return true;
  }
  return false;
}

bool is_pc(std::span<const double> weights, const Shock& shock, const PcVector& gamma, PcStrategy strategy) {
  if (weights.empty())
    throw ValidationError("path must have at least one arc");
  if (weights.size() > gamma.size())
    throw ValidationError("path of length " + std::to_string(weights.size()) + " exceeds PC vector of length " +
                          std::to_string(gamma.size()));
  const ShockTrace trace = shock_trace(weights, shock);
  return pc_holds(trace, gamma, strategy);
}

bool pc_reaches_end(std::span<const double> weights, const Shock& shock, const PcVector& gamma,
                    PcStrategy strategy) {
  const std::size_t k = weights.size();
  double xi = shock.size;
  switch (strategy) {
  case PcStrategy::pre_traversal:
    for (std::size_t h = 0; h < k; ++h) {
      if (xi < gamma[h])
        return false;
      xi = (xi + weights[h]) * shock.delta;
    }
    return true;
  case PcStrategy::post_arrival:
    for (std::size_t h = 0; h < k; ++h) {
      xi = (xi + weights[h]) * shock.delta;
      if (xi < gamma[h])
        return false;
    }
    return true;
  case PcStrategy::literal:
    for (std::size_t h = 0; h + 1 < k; ++h) {
      xi = (xi + weights[h]) * shock.delta;
      if (xi < gamma[h])
        return false;
    }
    return true;
  }
  return false;
}

std::optional<GammaPreset> parse_gamma_preset(std::string_view name) {
  if (name == "gamma1")
    return GammaPreset::gamma1;
  if (name == "gamma2")
    return GammaPreset::gamma2;
  if (name == "gamma3")
    return GammaPreset::gamma3;
  return std::nullopt;
}

std::string_view to_string(GammaPreset preset) {
  switch (preset) {
  case GammaPreset::gamma1:
    return "gamma1";
  case GammaPreset::gamma2:
    return "gamma2";
  case GammaPreset::gamma3:
    return "gamma3";
  }
  return "?";
}

PcVector gamma_preset(GammaPreset preset, std::size_t k_bar) {
  if (k_bar < 1)
    throw ValidationError("gamma preset needs kbar >= 1");
  const auto kb = static_cast<long>(k_bar);
  const long half_up = (kb + 1) / 2;
  const long half_down = kb / 2;
  std::vector<double> g(k_bar, 1.0);
  for (long i = 1; i <= kb; ++i) {
    switch (preset) {
    case GammaPreset::gamma1:
      break;
    case GammaPreset::gamma2:
      if (i > half_up)
        g[i - 1] = std::ldexp(1.0, static_cast<int>(i - half_up + 1));
      break;
    case GammaPreset::gamma3:
      if (i <= half_down)
        g[i - 1] = std::ldexp(1.0, static_cast<int>(half_down - i + 1));
      break;
    }
  }
  return PcVector(std::move(g));
}

} // namespace pathres
