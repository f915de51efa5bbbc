/// @file
/// Path-based resilience measure and (xi, delta) parameter sweeps.
///
/// For a network with longest simple path kbar, a PC vector Gamma and weights
/// Theta, the measure is
///
///     mu = sum_{k=1..kbar} theta_k * |PC k-paths| / |k-paths|
///
/// and lies in [0, 1]: 0 when every shock is absorbed immediately, 1 when
/// shocks travel along every available path.

#pragma once

#include "pathres/network.hpp"
#include "pathres/propagation.hpp"
#include "pathres/ratio.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathres {

/// Aggregation weights (theta_1, ..., theta_kbar), held exactly. Components
/// are >= 0 and sum to 1 within 1e-12.
class ThetaVector {
public:
  ThetaVector() = default;
  explicit ThetaVector(std::vector<Ratio> thetas);

  std::size_t size() const { return thetas_.size(); }
  const Ratio& operator[](std::size_t i) const { return thetas_[i]; }
  const std::vector<Ratio>& exact() const { return thetas_; }
  std::vector<double> values() const;

  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;

private:
  std::vector<Ratio> thetas_;
};

enum class ThetaPreset { theta1, theta2, theta3 };

std::optional<ThetaPreset> parse_theta_preset(std::string_view name);
std::string_view to_string(ThetaPreset preset);

/// theta1: uniform 1/kbar.
/// theta2: 2^-i for i < kbar, last component repeats the previous one.
/// theta3: 2^-(kbar-i+1) for i >= 2, first component repeats the second.
/// theta2 and theta3 need kbar >= 2.
ThetaVector theta_preset(ThetaPreset preset, std::size_t k_bar);

/// Per-length counts of PC paths for one (Gamma, shock, strategy).
struct PcCensus {
  std::vector<std::uint64_t> pc_counts; ///< index k-1
  std::vector<std::uint64_t> totals;    ///< index k-1
  PcVector gamma;
  Shock shock;
  PcStrategy strategy = PcStrategy::pre_traversal;

  std::size_t k_bar() const { return totals.size(); }
};

/// Counts PC paths per length in one enumeration pass. Throws
/// ValidationError when gamma's length differs from the network's kbar.
PcCensus pc_census(const Network& net, const PcVector& gamma, const Shock& shock, PcStrategy strategy,
                   unsigned threads = 1);

/// Weighted mean of PC fractions, accumulated in exact rational arithmetic
/// and rounded once to the nearest double (clamped to [0, 1]).
double mu(std::span<const std::uint64_t> pc_counts, std::span<const std::uint64_t> totals, const ThetaVector& theta);

inline double mu(const PcCensus& census, const ThetaVector& theta) {
  return mu(census.pc_counts, census.totals, theta);
}

struct SurfaceMetadata {
  std::string network;
  PcVector gamma;
  ThetaVector theta;
  PcStrategy strategy = PcStrategy::pre_traversal;
  std::size_t k_bar = 0;

  friend bool operator==(const SurfaceMetadata&, const SurfaceMetadata&) = default;
};

/// mu over a (delta, xi) grid. Cell (d, x) is stored at d * xi_grid.size() + x.
struct Surface {
  std::vector<double> delta_grid;
  std::vector<double> xi_grid;
  std::vector<double> mu;
  std::vector<std::uint64_t> totals;
  /// PC counts per cell, each of length kbar.
  std::vector<std::vector<std::uint64_t>> pc_counts;
  SurfaceMetadata metadata;

  std::size_t rows() const { return delta_grid.size(); }
  std::size_t cols() const { return xi_grid.size(); }
  std::size_t cell(std::size_t d, std::size_t x) const { return d * xi_grid.size() + x; }
  double at(std::size_t d, std::size_t x) const { return mu[cell(d, x)]; }

  friend bool operator==(const Surface&, const Surface&) = default;
};

/// xi = 0, 1, ..., 10
std::vector<double> default_xi_grid();
/// delta = 0, 0.1, ..., 1 (each value the double nearest the decimal)
std::vector<double> default_delta_grid();

/// Throws ValidationError unless the grid is nonempty, finite, >= 0 and
/// strictly increasing.
void validate_grid(std::span<const double> grid, std::string_view name);

struct SweepOptions {
  unsigned threads = 1;
  std::string network_name;
};

/// Evaluates every grid cell in a single enumeration pass. Each path is tested
/// per delta row from the smallest xi upwards; once a xi passes, every larger
/// xi passes too, so counts are recorded at the first passing column and
/// prefix-summed afterwards.
Surface sweep(const Network& net, const PcVector& gamma, const ThetaVector& theta, std::span<const double> xi_grid,
              std::span<const double> delta_grid, PcStrategy strategy, const SweepOptions& options = {});

/// Per delta row, the smallest grid xi with mu exactly 1, if any.
std::vector<std::optional<double>> critical_xi(const Surface& surface);

} // namespace pathres
