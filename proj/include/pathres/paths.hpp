/// @file
/// Exhaustive enumeration of simple directed paths.
///
/// A k-path is a sequence of k arcs through k+1 pairwise-distinct nodes. The
/// number of simple paths grows exponentially with network size; `max_len`
/// bounds the depth when a full census is out of reach.

#pragma once

#include "pathres/network.hpp"

#include <exception>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace pathres {

/// Borrowed view of the path currently on the enumeration stack. Valid only
/// for the duration of the visitor call.
struct PathView {
  std::span<const NodeId> nodes;
  std::span<const double> weights;

  std::size_t length() const { return weights.size(); }
};

/// Owning copy of a path.
struct PathRecord {
  std::vector<NodeId> nodes;
  std::vector<double> weights;

  PathRecord() = default;
  explicit PathRecord(const PathView& view)
      : nodes(view.nodes.begin(), view.nodes.end()), weights(view.weights.begin(), view.weights.end()) {}

  std::size_t length() const { return weights.size(); }
  PathView view() const { return {nodes, weights}; }

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

enum class Visit { proceed, stop };

/// Path census. Index k-1 of `counts_by_length` holds |P^(k)|.
struct PathStats {
  std::vector<std::uint64_t> counts_by_length;
  std::size_t k_bar = 0;
  /// counts_by_start[i][k-1] = number of k-paths starting at node i. Filled by
  /// path_stats(); left empty by the streaming enumerators.
  std::vector<std::vector<std::uint64_t>> counts_by_start;
  /// False when a visitor stopped enumeration early.
  bool complete = true;
  /// True when `max_len` cut off at least one extendable path, i.e. `k_bar`
  /// is only a lower bound on the longest simple path.
  bool capped = false;

  std::uint64_t count(std::size_t k) const {
    return k >= 1 && k <= counts_by_length.size() ? counts_by_length[k - 1] : 0;
  }
  std::uint64_t total() const;

  /// Associative, commutative merge of two partial censuses.
  void merge(const PathStats& other);
};

using PathVisitor = std::function<Visit(const PathView&)>;

/// Visits every simple path of length 1..max_len exactly once, depth-first
/// from each start node in index order, arcs in construction order.
PathStats enumerate_paths(const Network& net, std::optional<std::size_t> max_len, const PathVisitor& visit);

/// Same as enumerate_paths, restricted to paths starting at `start`.
PathStats enumerate_from(const Network& net, NodeId start, std::optional<std::size_t> max_len,
                         const PathVisitor& visit);

/// Full census with per-start counts. Start nodes are partitioned across
/// `threads` workers; the result does not depend on the worker count.
PathStats path_stats(const Network& net, unsigned threads = 1);

/// Materializes every path. Only sensible for small networks.
std::vector<PathRecord> materialize_paths(const Network& net, std::optional<std::size_t> max_len = std::nullopt);

namespace detail {

/// Membership set for the nodes on the current path: a 64-bit mask when the
/// network is small enough, a byte array otherwise.
class MaskMembership {
public:
  explicit MaskMembership(std::size_t) {}
  bool contains(NodeId v) const { return (bits_ >> v) & 1u; }
  void insert(NodeId v) { bits_ |= std::uint64_t{1} << v; }
  void erase(NodeId v) { bits_ &= ~(std::uint64_t{1} << v); }

private:
  std::uint64_t bits_ = 0;
};

class ArrayMembership {
public:
  explicit ArrayMembership(std::size_t n) : on_(n, 0) {}
  bool contains(NodeId v) const { return on_[v] != 0; }
  void insert(NodeId v) { on_[v] = 1; }
  void erase(NodeId v) { on_[v] = 0; }

private:
  std::vector<std::uint8_t> on_;
};

/// Depth-first enumeration with backtracking. `visit` is any callable taking
/// a PathView and returning Visit; the stats are updated in place.
template <class Membership, class Visitor>
class Enumerator {
public:
  Enumerator(const Network& net, std::size_t max_len, Visitor& visit, PathStats& stats)
      : net_(net), max_len_(max_len), visit_(visit), stats_(stats), on_path_(net.node_count()) {
    nodes_.reserve(net.node_count());
    weights_.reserve(net.node_count());
  }

  /// Returns false if the visitor asked to stop.
  bool run_from(NodeId start) {
    nodes_.assign(1, start);
    weights_.clear();
    on_path_.insert(start);
    const bool go_on = extend(start);
    on_path_.erase(start);
    return go_on;
  }

private:
  bool extend(NodeId tail) {
    const std::size_t depth = weights_.size();
    for (const OutArc& arc : net_.out_arcs(tail)) {
      if (on_path_.contains(arc.target))
        continue;
      if (depth == max_len_) {
        stats_.capped = true;
        return true;
      }
      nodes_.push_back(arc.target);
      weights_.push_back(arc.weight);
      on_path_.insert(arc.target);

      const std::size_t k = depth + 1;
      if (stats_.counts_by_length.size() < k)
        stats_.counts_by_length.resize(k, 0);
      ++stats_.counts_by_length[k - 1];
      if (k > stats_.k_bar)
        stats_.k_bar = k;

      bool go_on = visit_(PathView{nodes_, weights_}) == Visit::proceed;
      if (go_on)
        go_on = extend(arc.target);

      on_path_.erase(arc.target);
      weights_.pop_back();
      nodes_.pop_back();
      if (!go_on)
        return false;
    }
    return true;
  }

  const Network& net_;
  std::size_t max_len_;
  Visitor& visit_;
  PathStats& stats_;
  Membership on_path_;
  std::vector<NodeId> nodes_;
  std::vector<double> weights_;
};

inline std::size_t resolve_max_len(const Network& net, std::optional<std::size_t> max_len) {
  return max_len ? *max_len : net.node_count();
}

/// Runs `visit` over every path starting at any node in `starts`.
template <class Visitor>
PathStats enumerate_starts(const Network& net, std::span<const NodeId> starts, std::optional<std::size_t> max_len,
                           Visitor& visit) {
  PathStats stats;
  const std::size_t limit = resolve_max_len(net, max_len);
  auto drive = [&](auto&& enumerator) {
    for (NodeId s : starts) {
      if (!enumerator.run_from(s)) {
        stats.complete = false;
        break;
      }
    }
  };
  if (net.node_count() <= 64)
    drive(Enumerator<MaskMembership, Visitor>(net, limit, visit, stats));
  else
    drive(Enumerator<ArrayMembership, Visitor>(net, limit, visit, stats));
  return stats;
}

/// Partitions start nodes round-robin over one thread per element of
/// `workers` (each a visitor with its own accumulators) and returns the merged
/// stats. Results are independent of the number of workers as long as the
/// caller merges worker accumulators commutatively.
template <class Worker>
PathStats enumerate_parallel(const Network& net, std::span<Worker> workers, std::optional<std::size_t> max_len) {
  const std::size_t count = workers.size();
  std::vector<std::vector<NodeId>> starts(count);
  for (NodeId s = 0; s < net.node_count(); ++s)
    starts[s % count].push_back(s);

  std::vector<PathStats> partial(count);
  if (count == 1) {
    partial[0] = enumerate_starts(net, std::span<const NodeId>(starts[0]), max_len, workers[0]);
  } else {
    std::vector<std::exception_ptr> failures(count);
    {
      std::vector<std::jthread> pool;
      pool.reserve(count);
      for (std::size_t w = 0; w < count; ++w) {
        pool.emplace_back([&, w] {
          try {
            partial[w] = enumerate_starts(net, std::span<const NodeId>(starts[w]), max_len, workers[w]);
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures)
      if (f)
        std::rethrow_exception(f);
  }

  PathStats merged;
  for (const auto& p : partial)
    merged.merge(p);
  return merged;
}

} // namespace detail

} // namespace pathres
