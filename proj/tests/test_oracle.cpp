#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pathres;

TEST_CASE("oracle path census") {
  CHECK(oracle::naive_all_paths(test::g3()).size() == 4);
  CHECK(oracle::naive_all_paths(test::three_cycle()).size() == 6);
  CHECK(oracle::naive_all_paths(test::single_arc()).size() == 1);
  CHECK(oracle::naive_all_paths(test::complete_digraph(4)).size() == 60);
  CHECK_THROWS_AS(oracle::naive_all_paths(test::complete_digraph(11)), std::invalid_argument);
}

TEST_CASE("oracle mu on G3") {
  const Network net = test::g3();
  const ThetaVector halves({{1, 2}, {1, 2}});
  CHECK(oracle::naive_mu(net, PcVector({1, 1}), halves, {1, 1}, PcStrategy::pre_traversal) == 1.0);
  CHECK(oracle::naive_mu(net, PcVector({1, 1}), halves, {0, 1}, PcStrategy::pre_traversal) == 0.0);
  CHECK(oracle::naive_mu(net, PcVector({1, 2}), halves, {1, 0.5}, PcStrategy::pre_traversal) == 0.5);
}

TEST_CASE("oracle rejects arcless networks") {
  const auto parsed = parse_edge_list("a,a,1");
  CHECK_THROWS_AS(oracle::naive_mu(*parsed.network, PcVector({1}), ThetaVector({{1, 1}}), {1, 1},
                                   PcStrategy::pre_traversal),
                  std::invalid_argument);
}
