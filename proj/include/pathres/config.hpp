/// @file
/// Sweep configuration: preset/explicit vector specs, grid shorthand and the
/// JSON config file.

#pragma once

#include "pathres/propagation.hpp"
#include "pathres/resilience.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pathres {

/// Unexpanded sweep settings. `gamma` and `theta` hold either a preset name
/// (gamma1..3, theta1..3) or a comma-separated explicit vector; both are
/// expanded against the measured kbar by resolve_gamma / resolve_theta.
struct SweepConfig {
  std::string gamma = "gamma1";
  std::string theta = "theta1";
  std::vector<double> xi_grid = default_xi_grid();
  std::vector<double> delta_grid = default_delta_grid();
  PcStrategy strategy = PcStrategy::pre_traversal;
  bool emit_per_k = false;
};

/// Preset name or explicit "g1,g2,..." list. An explicit vector must have
/// exactly `k_bar` components.
PcVector resolve_gamma(std::string_view spec, std::size_t k_bar);

/// Preset name or explicit list of decimals / fractions ("0.5,1/4,1/4").
ThetaVector resolve_theta(std::string_view spec, std::size_t k_bar);

/// Either a comma-separated list ("0,0.5,1") or `start:stop:step`. The
/// shorthand steps in exact decimal arithmetic, so "0:1:0.1" yields the
/// doubles nearest to 0.3, 0.7, ... rather than accumulated binary sums.
std::vector<double> parse_grid(std::string_view text);

/// Parses a strategy token, throwing ValidationError that lists the valid
/// tokens on failure.
PcStrategy require_strategy(std::string_view token);

/// Applies the fields present in `j` on top of `base`. Unknown keys are
/// rejected.
SweepConfig apply_config(const nlohmann::json& j, SweepConfig base = {});

/// Reads a JSON config file. Throws IoError / ValidationError.
SweepConfig load_config_file(const std::string& path, SweepConfig base = {});

} // namespace pathres
