/// @file
/// Discounted shock propagation along a path and the propagation condition.

#pragma once

#include "pathres/paths.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pathres {

/// A shock of size `size` hitting a single node, discounted by `delta` at
/// every step. size == 0 is "no shock"; delta == 0 stops propagation, delta in
/// (0,1) damps, delta == 1 ignores distance, delta > 1 amplifies.
struct Shock {
  double size = 0.0;
  double delta = 0.0;
};

/// Throws ValidationError unless both components are finite and >= 0.
void validate(const Shock& shock);

/// Threshold vector (gamma_1, ..., gamma_kbar), all strictly positive.
class PcVector {
public:
  PcVector() = default;
  explicit PcVector(std::vector<double> gammas);

  std::size_t size() const { return gammas_.size(); }
  double operator[](std::size_t i) const { return gammas_[i]; }
  /// 1-based accessor matching gamma_h.
  double at_step(std::size_t h) const { return gammas_.at(h - 1); }
  const std::vector<double>& values() const { return gammas_; }

  friend bool operator==(const PcVector&, const PcVector&) = default;

private:
  std::vector<double> gammas_;
};

/// Which shock size has to clear which threshold.
///
///  - pre_traversal: the size held before crossing arc h must reach gamma_h.
///  - post_arrival:  the size on arrival at node h must reach gamma_h.
///  - literal:       sizes at the interior nodes 1..k-1 must reach their
///                   thresholds; every 1-path passes.
enum class PcStrategy { pre_traversal, post_arrival, literal };

inline constexpr PcStrategy kAllStrategies[] = {PcStrategy::pre_traversal, PcStrategy::post_arrival,
                                                PcStrategy::literal};

std::string_view to_string(PcStrategy strategy);
std::optional<PcStrategy> parse_strategy(std::string_view token);
/// "pre-traversal, post-arrival, literal"
std::string_view strategy_tokens();

/// (xi_0, ..., xi_k) with xi_0 = shock.size and
/// xi_h = (xi_{h-1} + w_h) * delta.
using ShockTrace = std::vector<double>;

ShockTrace shock_trace(std::span<const double> weights, const Shock& shock);

/// Writes the trace into `out`, which must hold weights.size() + 1 values.
void shock_trace(std::span<const double> weights, const Shock& shock, std::span<double> out);

/// True when the shock reaches the last node of the path. Comparisons are
/// exact `>=` with no tolerance. Throws ValidationError when the path is
/// longer than `gamma`.
bool is_pc(std::span<const double> weights, const Shock& shock, const PcVector& gamma, PcStrategy strategy);

inline bool is_pc(const PathView& path, const Shock& shock, const PcVector& gamma, PcStrategy strategy) {
  return is_pc(path.weights, shock, gamma, strategy);
}

/// Evaluates the strategy on a precomputed trace of a path of length
/// trace.size() - 1. No bounds checks.
bool pc_holds(std::span<const double> trace, const PcVector& gamma, PcStrategy strategy);

/// Same answer as is_pc, computed step by step and stopping at the first
/// failed threshold. No bounds checks; weights.size() <= gamma.size().
bool pc_reaches_end(std::span<const double> weights, const Shock& shock, const PcVector& gamma,
                    PcStrategy strategy);

enum class GammaPreset { gamma1, gamma2, gamma3 };

std::optional<GammaPreset> parse_gamma_preset(std::string_view name);
std::string_view to_string(GammaPreset preset);

/// gamma1: all ones.
/// gamma2: ones up to ceil(kbar/2), then 2^(i - ceil(kbar/2) + 1).
/// gamma3: 2^(floor(kbar/2) - i + 1) up to floor(kbar/2), then ones.
PcVector gamma_preset(GammaPreset preset, std::size_t k_bar);

} // namespace pathres
