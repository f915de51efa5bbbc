#include "pathres/paths.hpp"

#include "pathres/error.hpp"

#include <algorithm>
#include <numeric>

namespace pathres {

namespace {

void check_max_len(std::optional<std::size_t> max_len) {
  if (max_len && *max_len < 1)
    throw ValidationError("max path length must be at least 1");
}

void add_into(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size())
    into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i)
    into[i] += from[i];
}

struct PerStartCounter {
  std::vector<std::vector<std::uint64_t>>* by_start;

  Visit operator()(const PathView& p) {
    auto& row = (*by_start)[p.nodes.front()];
    if (row.size() < p.length())
      row.resize(p.length(), 0);
    ++row[p.length() - 1];
    return Visit::proceed;
  }
};

} // namespace

std::uint64_t PathStats::total() const {
  return std::accumulate(counts_by_length.begin(), counts_by_length.end(), std::uint64_t{0});
}

void PathStats::merge(const PathStats& other) {
  add_into(counts_by_length, other.counts_by_length);
  k_bar = std::max(k_bar, other.k_bar);
  if (counts_by_start.size() < other.counts_by_start.size())
    counts_by_start.resize(other.counts_by_start.size());
  for (std::size_t i = 0; i < other.counts_by_start.size(); ++i)
    add_into(counts_by_start[i], other.counts_by_start[i]);
  complete = complete && other.complete;
  capped = capped || other.capped;
}

PathStats enumerate_paths(const Network& net, std::optional<std::size_t> max_len, const PathVisitor& visit) {
  check_max_len(max_len);
  std::vector<NodeId> starts(net.node_count());
  std::iota(starts.begin(), starts.end(), NodeId{0});
  return detail::enumerate_starts(net, std::span<const NodeId>(starts), max_len, visit);
}

PathStats enumerate_from(const Network& net, NodeId start, std::optional<std::size_t> max_len,
                         const PathVisitor& visit) {
  check_max_len(max_len);
  if (start >= net.node_count())
    throw ValidationError("start node out of range");
  const NodeId starts[] = {start};
  return detail::enumerate_starts(net, std::span<const NodeId>(starts), max_len, visit);
}

PathStats path_stats(const Network& net, unsigned threads) {
  const unsigned workers_n = std::max(1u, std::min<unsigned>(threads, std::max<std::size_t>(net.node_count(), 1)));
  // Each start node belongs to exactly one worker, so the per-start rows can
  // be shared without synchronization.
  std::vector<std::vector<std::uint64_t>> by_start(net.node_count());
  std::vector<PerStartCounter> workers(workers_n, PerStartCounter{&by_start});
  PathStats stats = detail::enumerate_parallel(net, std::span<PerStartCounter>(workers), std::nullopt);
  for (auto& row : by_start)
    row.resize(stats.k_bar, 0);
  stats.counts_by_start = std::move(by_start);
  return stats;
}

std::vector<PathRecord> materialize_paths(const Network& net, std::optional<std::size_t> max_len) {
  std::vector<PathRecord> paths;
  enumerate_paths(net, max_len, [&](const PathView& p) {
    paths.emplace_back(p);
    return Visit::proceed;
  });
  return paths;
}

} // namespace pathres
