#include "pathres/resilience.hpp"

#include "pathres/error.hpp"
#include "pathres/paths.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace pathres {

namespace {

mpq_class to_mpq(const Ratio& r) {
  mpq_class q(mpz_class(std::to_string(r.num)), mpz_class(std::to_string(r.den)));
  q.canonicalize();
  return q;
}

mpq_class to_mpq(std::uint64_t v) { return mpq_class(mpz_class(std::to_string(v))); }

// Round a nonnegative rational to the nearest double, ties to even.
// mpq_get_d truncates, so the answer is either that value or its successor.
double round_nearest(const mpq_class& q) {
  const double lo = q.get_d();
  if (mpq_class(lo) == q)
    return lo;
  const double hi = std::nextafter(lo, INFINITY);
  const mpq_class below = q - mpq_class(lo);
  const mpq_class above = mpq_class(hi) - q;
  if (below < above)
    return lo;
  if (above < below)
    return hi;
  return (std::bit_cast<std::uint64_t>(lo) & 1u) == 0 ? lo : hi;
}

void check_lengths(const PcVector& gamma, const ThetaVector& theta) {
  if (gamma.size() != theta.size())
    throw ValidationError("PC vector length " + std::to_string(gamma.size()) + " differs from theta length " +
                          std::to_string(theta.size()));
}

void check_kbar(std::size_t expected, std::size_t k_bar) {
  if (k_bar != expected)
    throw ValidationError("PC vector length " + std::to_string(expected) + " does not match kbar " +
                          std::to_string(k_bar));
}

unsigned worker_count(const Network& net, unsigned threads) {
  return std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(net.node_count(), 1))));
}

class CensusWorker {
public:
  CensusWorker(const PcVector& gamma, const Shock& shock, PcStrategy strategy)
      : gamma_(&gamma), shock_(shock), strategy_(strategy), pc_(gamma.size(), 0), trace_(gamma.size() + 1) {}

  Visit operator()(const PathView& p) {
    const std::size_t k = p.length();
    if (k > gamma_->size())
      throw ValidationError("network has a path of length " + std::to_string(k) + " beyond PC vector length " +
                            std::to_string(gamma_->size()));
    const std::span<double> trace(trace_.data(), k + 1);
    shock_trace(p.weights, shock_, trace);
    if (pc_holds(trace, *gamma_, strategy_))
      ++pc_[k - 1];
    return Visit::proceed;
  }

  const std::vector<std::uint64_t>& pc() const { return pc_; }

private:
  const PcVector* gamma_;
  Shock shock_;
  PcStrategy strategy_;
  std::vector<std::uint64_t> pc_;
  std::vector<double> trace_;
};

class SweepWorker {
public:
  SweepWorker(const PcVector& gamma, std::span<const double> xi, std::span<const double> delta, PcStrategy strategy)
      : gamma_(&gamma), xi_(xi), delta_(delta), strategy_(strategy),
        first_pass_(gamma.size() * delta.size() * xi.size(), 0) {}

  Visit operator()(const PathView& p) {
    const std::size_t k = p.length();
    if (k > gamma_->size())
      throw ValidationError("network has a path of length " + std::to_string(k) + " beyond PC vector length " +
                            std::to_string(gamma_->size()));
    for (std::size_t d = 0; d < delta_.size(); ++d) {
      for (std::size_t x = 0; x < xi_.size(); ++x) {
        if (pc_reaches_end(p.weights, Shock{xi_[x], delta_[d]}, *gamma_, strategy_)) {
          ++first_pass_[slot(k, d, x)];
          break;
        }
      }
    }
    return Visit::proceed;
  }

  std::size_t slot(std::size_t k, std::size_t d, std::size_t x) const {
    return ((k - 1) * delta_.size() + d) * xi_.size() + x;
  }
  const std::vector<std::uint64_t>& first_pass() const { return first_pass_; }

private:
  const PcVector* gamma_;
  std::span<const double> xi_;
  std::span<const double> delta_;
  PcStrategy strategy_;
  std::vector<std::uint64_t> first_pass_;
};

} // namespace

ThetaVector::ThetaVector(std::vector<Ratio> thetas) : thetas_(std::move(thetas)) {
  if (thetas_.empty())
    throw ValidationError("theta vector must not be empty");
  mpq_class sum = 0;
  for (const Ratio& t : thetas_) {
    if (t.den <= 0 || t.num < 0)
      throw ValidationError("theta components must be >= 0");
    sum += to_mpq(t);
  }
  const double err = std::abs(mpq_class(sum - 1).get_d());
  if (err > 1e-12)
    throw ValidationError("theta components must sum to 1 (sum is " + std::to_string(sum.get_d()) + ")");
}

std::vector<double> ThetaVector::values() const {
  std::vector<double> v;
  v.reserve(thetas_.size());
  for (const Ratio& t : thetas_)
    v.push_back(t.value());
  return v;
}

std::optional<ThetaPreset> parse_theta_preset(std::string_view name) {
  if (name == "theta1")
    return ThetaPreset::theta1;
  if (name == "theta2")
    return ThetaPreset::theta2;
  if (name == "theta3")
    return ThetaPreset::theta3;
  return std::nullopt;
}

std::string_view to_string(ThetaPreset preset) {
  switch (preset) {
  case ThetaPreset::theta1:
    return "theta1";
  case ThetaPreset::theta2:
    return "theta2";
  case ThetaPreset::theta3:
    return "theta3";
  }
  return "?";
}

ThetaVector theta_preset(ThetaPreset preset, std::size_t k_bar) {
  if (k_bar < 1)
    throw ValidationError("theta preset needs kbar >= 1");
  if (preset != ThetaPreset::theta1 && k_bar < 2)
    throw ValidationError(std::string(to_string(preset)) + " needs kbar >= 2");
  if (k_bar > 62)
    throw ValidationError("theta presets support kbar <= 62");

  const auto dyadic = [](std::size_t e) { return Ratio{1, std::int64_t{1} << e}; };
  std::vector<Ratio> t(k_bar);
  switch (preset) {
  case ThetaPreset::theta1:
    std::fill(t.begin(), t.end(), make_ratio(1, static_cast<std::int64_t>(k_bar)));
    break;
  case ThetaPreset::theta2:
    for (std::size_t i = 1; i < k_bar; ++i)
      t[i - 1] = dyadic(i);
    t[k_bar - 1] = t[k_bar - 2];
    break;
  case ThetaPreset::theta3:
    for (std::size_t i = 2; i <= k_bar; ++i)
      t[i - 1] = dyadic(k_bar - i + 1);
    t[0] = t[1];
    break;
  }
  return ThetaVector(std::move(t));
}

PcCensus pc_census(const Network& net, const PcVector& gamma, const Shock& shock, PcStrategy strategy,
                   unsigned threads) {
  validate(shock);
  std::vector<CensusWorker> workers(worker_count(net, threads), CensusWorker(gamma, shock, strategy));
  const PathStats stats = detail::enumerate_parallel(net, std::span<CensusWorker>(workers), std::nullopt);
  check_kbar(gamma.size(), stats.k_bar);

  PcCensus census;
  census.totals = stats.counts_by_length;
  census.pc_counts.assign(gamma.size(), 0);
  for (const auto& w : workers)
    for (std::size_t k = 0; k < gamma.size(); ++k)
      census.pc_counts[k] += w.pc()[k];
  census.gamma = gamma;
  census.shock = shock;
  census.strategy = strategy;
  return census;
}

double mu(std::span<const std::uint64_t> pc_counts, std::span<const std::uint64_t> totals, const ThetaVector& theta) {
  if (pc_counts.size() != totals.size() || theta.size() != totals.size())
    throw ValidationError("theta length " + std::to_string(theta.size()) + " does not match kbar " +
                          std::to_string(totals.size()));
  mpq_class sum = 0;
  for (std::size_t k = 0; k < totals.size(); ++k) {
    if (totals[k] == 0)
      throw ValidationError("no paths of length " + std::to_string(k + 1));
    if (pc_counts[k] > totals[k])
      throw ValidationError("PC count exceeds path count");
    if (pc_counts[k] == 0 || theta[k].num == 0)
      continue;
    sum += to_mpq(theta[k]) * to_mpq(pc_counts[k]) / to_mpq(totals[k]);
  }
  if (sum > 1)
    return 1.0;
  return round_nearest(sum);
}

std::vector<double> default_xi_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i)
    g.push_back(i);
  return g;
}

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i)
    g.push_back(static_cast<double>(i) / 10.0);
  return g;
}

void validate_grid(std::span<const double> grid, std::string_view name) {
  const std::string n(name);
  if (grid.empty())
    throw ValidationError(n + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0)
      throw ValidationError(n + " grid values must be finite and >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ValidationError(n + " grid must be strictly increasing");
  }
}

Surface sweep(const Network& net, const PcVector& gamma, const ThetaVector& theta, std::span<const double> xi_grid,
              std::span<const double> delta_grid, PcStrategy strategy, const SweepOptions& options) {
  validate_grid(xi_grid, "xi");
  validate_grid(delta_grid, "delta");
  check_lengths(gamma, theta);

  std::vector<SweepWorker> workers(worker_count(net, options.threads),
                                   SweepWorker(gamma, xi_grid, delta_grid, strategy));
  const PathStats stats = detail::enumerate_parallel(net, std::span<SweepWorker>(workers), std::nullopt);
  check_kbar(gamma.size(), stats.k_bar);

  const std::size_t k_bar = gamma.size();
  const std::size_t rows = delta_grid.size();
  const std::size_t cols = xi_grid.size();

  Surface s;
  s.delta_grid.assign(delta_grid.begin(), delta_grid.end());
  s.xi_grid.assign(xi_grid.begin(), xi_grid.end());
  s.totals = stats.counts_by_length;
  s.pc_counts.assign(rows * cols, std::vector<std::uint64_t>(k_bar, 0));
  s.mu.assign(rows * cols, 0.0);
  s.metadata = SurfaceMetadata{options.network_name, gamma, theta, strategy, k_bar};

  for (std::size_t k = 1; k <= k_bar; ++k) {
    for (std::size_t d = 0; d < rows; ++d) {
      std::uint64_t running = 0;
      for (std::size_t x = 0; x < cols; ++x) {
        for (const auto& w : workers)
          running += w.first_pass()[w.slot(k, d, x)];
        s.pc_counts[s.cell(d, x)][k - 1] = running;
      }
    }
  }
  for (std::size_t c = 0; c < rows * cols; ++c)
    s.mu[c] = mu(s.pc_counts[c], s.totals, theta);
  return s;
}

std::vector<std::optional<double>> critical_xi(const Surface& surface) {
  std::vector<std::optional<double>> out(surface.rows());
  for (std::size_t d = 0; d < surface.rows(); ++d) {
    for (std::size_t x = 0; x < surface.cols(); ++x) {
      if (surface.at(d, x) == 1.0) {
        out[d] = surface.xi_grid[x];
        break;
      }
    }
  }
  return out;
}

} // namespace pathres
