/// @file
/// Weighted directed networks with labelled nodes, edge-list ingestion and
/// node-induced subnetwork extraction.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pathres {

using NodeId = std::uint32_t;

struct Arc {
  NodeId source;
  NodeId target;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Outgoing arc as seen from its source node.
struct OutArc {
  NodeId target;
  double weight;
};

/// Immutable weighted directed graph.
///
/// Invariants: weights are strictly positive and finite, no self-loops, at
/// most one arc per ordered pair, endpoints reference existing nodes. Node
/// identity is the label; indices follow the order labels were given in.
class Network {
public:
  Network() = default;

  /// Builds and validates a network. Throws ValidationError when any
  /// invariant is violated.
  Network(std::vector<std::string> labels, std::vector<Arc> arcs);

  std::size_t node_count() const { return labels_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(NodeId node) const { return labels_.at(node); }
  std::optional<NodeId> find(std::string_view label) const;

  /// Arcs in construction order.
  std::span<const Arc> arcs() const { return arcs_; }

  /// Outgoing arcs of `node`, in construction order.
  std::span<const OutArc> out_arcs(NodeId node) const {
    return {out_.data() + offsets_[node], out_.data() + offsets_[node + 1]};
  }

  /// Equal when node order, arc order and weights coincide.
  friend bool operator==(const Network& a, const Network& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_;
  }

private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_{0};
  std::vector<OutArc> out_;
};

struct Diagnostic {
  std::size_t line;
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;
  std::size_t node_count = 0;
  std::size_t arc_count = 0;

  bool ok() const { return errors.empty(); }
};

/// Outcome of parsing an edge list. `network` is set iff `report.ok()`.
struct ParseResult {
  std::optional<Network> network;
  ValidationReport report;
};

/// Parses `source<sep>target<sep>weight` lines, where sep is a comma or a run
/// of whitespace. Blank lines and `#` comments are skipped; a first data line
/// whose weight field is not numeric is taken as a header. A comment of the
/// form `# nodes: a,b,c` before the first data line pre-declares node order
/// (this is how isolated nodes survive serialization).
///
/// Self-loops are dropped with a warning. Non-numeric or non-positive weights,
/// duplicate ordered pairs and lines with fewer than three fields are errors.
ParseResult parse_edge_list(std::string_view text);

/// Reads a file and parses it. Throws IoError when the file cannot be read.
ParseResult read_edge_list(const std::string& path);

/// Serializes to the edge-list format: a `# nodes:` declaration followed by one
/// `source,target,weight` line per arc, weights printed round-trip exact.
std::string to_edge_list(const Network& net);

/// Node-set file: one label per line, `#` comments and blank lines ignored.
std::vector<std::string> parse_node_set(std::string_view text);

struct SubnetworkResult {
  Network network;
  std::vector<std::string> unknown_labels;
};

/// Node-induced subnetwork on `keep`. Labels absent from `net` are reported in
/// `unknown_labels`. Node order follows `net`. Throws ValidationError when
/// `keep` is empty or the result has no arcs ("empty subnetwork").
SubnetworkResult subnetwork(const Network& net, std::span<const std::string> keep);

} // namespace pathres
