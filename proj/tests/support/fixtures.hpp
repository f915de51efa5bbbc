#pragma once

#include "pathres/network.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace pathres::test {

/// a->b (2), b->c (1), a->c (3)
inline Network g3() { return Network({"a", "b", "c"}, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 3.0}}); }

/// a->b->c->a, unit weights
inline Network three_cycle() { return Network({"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}}); }

inline Network single_arc() { return Network({"a", "b"}, {{0, 1, 1.0}}); }

/// Complete digraph on n nodes, weight 1 + (i + j) % 3.
inline Network complete_digraph(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("v" + std::to_string(i));
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (i != j)
        arcs.push_back({i, j, 1.0 + static_cast<double>((i + j) % 3)});
  return Network(std::move(labels), std::move(arcs));
}

struct RandomNetworkSpec {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 8;
  double arc_probability = 0.35;
  bool integer_weights = false;
};

/// Random digraph with at least one arc. Weights are integers 1..5, or
/// multiples of 0.05 in [0.05, 4] when `integer_weights` is false.
inline Network random_network(std::mt19937_64& rng, const RandomNetworkSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> size(spec.min_nodes, spec.max_nodes);
  std::bernoulli_distribution coin(spec.arc_probability);
  std::uniform_int_distribution<int> int_w(1, 5);
  std::uniform_int_distribution<int> real_w(1, 80);

  const std::size_t n = size(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back("n" + std::to_string(i));
  std::vector<Arc> arcs;
  auto weight = [&] { return spec.integer_weights ? double(int_w(rng)) : real_w(rng) / 20.0; };
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (i != j && coin(rng))
        arcs.push_back({i, j, weight()});
  if (arcs.empty())
    arcs.push_back({0, 1, weight()});
  return Network(std::move(labels), std::move(arcs));
}

/// Same graph with node indices permuted, labels renamed and arcs reordered.
inline Network relabel(const Network& net, std::mt19937_64& rng) {
  const std::size_t n = net.node_count();
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> labels(n);
  for (NodeId i = 0; i < n; ++i)
    labels[perm[i]] = "r" + net.label(i);
  std::vector<Arc> arcs;
  for (const Arc& a : net.arcs())
    arcs.push_back({perm[a.source], perm[a.target], a.weight});
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Network(std::move(labels), std::move(arcs));
}

/// Hub-and-spoke network with 21 nodes, 89 arcs and a longest simple path of
/// exactly 8 arcs: four mutually connected hubs, seventeen spokes attached
/// only to hubs. A simple path holds at most four hubs and, since spokes are
/// never adjacent, at most five spokes.
inline Network hub_network_21() {
  std::vector<std::string> labels = {"H0", "H1", "H2", "H3"};
  for (int i = 0; i < 17; ++i)
    labels.push_back("S" + std::to_string(i));
  std::mt19937_64 rng(20100101);
  std::uniform_int_distribution<int> flights(1, 40);
  std::vector<Arc> arcs;
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = 0; j < 4; ++j)
      if (i != j)
        arcs.push_back({i, j, double(flights(rng))});
  // Hub links per spoke: 3 spokes x 4 hubs, 1 x 3, 11 x 2, 1 x 1 = 38 links.
  const std::vector<std::vector<NodeId>> links = {
      {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
      {2, 3},       {0, 1},       {0, 2},       {1, 2},    {2, 3}, {0, 3}, {1}};
  for (std::size_t s = 0; s < links.size(); ++s) {
    const auto spoke = static_cast<NodeId>(4 + s);
    for (NodeId hub : links[s]) {
      arcs.push_back({hub, spoke, double(flights(rng))});
      arcs.push_back({spoke, hub, double(flights(rng))});
    }
  }
  arcs.push_back({20, 0, double(flights(rng))}); // one-way feeder
  return Network(std::move(labels), std::move(arcs));
}

} // namespace pathres::test
