#include "pathres/error.hpp"
#include "pathres/resilience.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace pathres;

namespace {

using Counts = std::vector<std::uint64_t>;

ThetaVector halves() { return ThetaVector({{1, 2}, {1, 2}}); }

} // namespace

TEST_CASE("pc_census on G3") {
  const Network net = test::g3();
  const auto all = pc_census(net, PcVector({1, 1}), {1.0, 1.0}, PcStrategy::pre_traversal);
  CHECK(all.pc_counts == Counts{3, 1});
  CHECK(all.totals == Counts{3, 1});

  const auto blocked = pc_census(net, PcVector({1, 2}), {1.0, 0.5}, PcStrategy::pre_traversal);
  CHECK(blocked.pc_counts == Counts{3, 0});
  CHECK(blocked.totals == Counts{3, 1});
  CHECK(blocked.k_bar() == 2);
}

TEST_CASE("zero shock without discount is absorbed under post-arrival") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Network net = test::random_network(rng);
    const std::size_t kb = path_stats(net).k_bar;
    const auto c = pc_census(net, gamma_preset(GammaPreset::gamma1, kb), {0.0, 0.0}, PcStrategy::post_arrival);
    CHECK(c.pc_counts == Counts(kb, 0));
  }
}

TEST_CASE("pc_census length checks") {
  CHECK_THROWS_AS(pc_census(test::g3(), PcVector({1}), {1, 1}, PcStrategy::pre_traversal), ValidationError);
  CHECK_THROWS_AS(pc_census(test::g3(), PcVector({1, 1, 1}), {1, 1}, PcStrategy::pre_traversal), ValidationError);
  const auto arcless = parse_edge_list("a,a,1");
  CHECK_THROWS_AS(pc_census(*arcless.network, PcVector({1}), {1, 1}, PcStrategy::pre_traversal), ValidationError);
  CHECK_THROWS_AS(pc_census(test::g3(), PcVector({1, 1}), {-1, 1}, PcStrategy::pre_traversal), ValidationError);
}

TEST_CASE("mu examples") {
  CHECK(mu(Counts{3, 1}, Counts{3, 1}, halves()) == 1.0);
  CHECK(mu(Counts{3, 0}, Counts{3, 1}, halves()) == 0.5);
  CHECK(mu(Counts{0, 0}, Counts{3, 1}, halves()) == 0.0);
  CHECK(mu(Counts{0, 0, 0}, Counts{7, 9, 2}, theta_preset(ThetaPreset::theta2, 3)) == 0.0);
  // 1/3 * (1/3) + 1/3 * (2/3) + 1/3 * 1 = 2/3
  CHECK(mu(Counts{1, 2, 1}, Counts{3, 3, 1}, theta_preset(ThetaPreset::theta1, 3)) == 2.0 / 3.0);
  CHECK_THROWS_AS(mu(Counts{1}, Counts{1, 1}, halves()), ValidationError);
  CHECK_THROWS_AS(mu(Counts{1, 1, 1}, Counts{1, 1, 1}, halves()), ValidationError);
  CHECK_THROWS_AS(mu(Counts{2, 1}, Counts{1, 1}, halves()), ValidationError);
}

TEST_CASE("mu is exactly 1 when every path passes, for every preset and kbar") {
  for (std::size_t kb = 1; kb <= 30; ++kb) {
    const Counts totals(kb, 7);
    for (ThetaPreset p : {ThetaPreset::theta1, ThetaPreset::theta2, ThetaPreset::theta3}) {
      if (p != ThetaPreset::theta1 && kb < 2)
        continue;
      CHECK(mu(totals, totals, theta_preset(p, kb)) == 1.0);
    }
  }
}

TEST_CASE("theta presets") {
  using R = std::vector<Ratio>;
  CHECK(theta_preset(ThetaPreset::theta1, 4).exact() == R{{1, 4}, {1, 4}, {1, 4}, {1, 4}});
  CHECK(theta_preset(ThetaPreset::theta2, 4).exact() == R{{1, 2}, {1, 4}, {1, 8}, {1, 8}});
  CHECK(theta_preset(ThetaPreset::theta3, 4).exact() == R{{1, 8}, {1, 8}, {1, 4}, {1, 2}});
  CHECK(theta_preset(ThetaPreset::theta2, 2).exact() == R{{1, 2}, {1, 2}});
  CHECK(theta_preset(ThetaPreset::theta3, 2).exact() == R{{1, 2}, {1, 2}});
  CHECK(theta_preset(ThetaPreset::theta1, 1).exact() == R{{1, 1}});
  CHECK(theta_preset(ThetaPreset::theta1, 4).values() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK_THROWS_AS(theta_preset(ThetaPreset::theta2, 1), ValidationError);
  CHECK_THROWS_AS(theta_preset(ThetaPreset::theta3, 1), ValidationError);
  CHECK_THROWS_AS(theta_preset(ThetaPreset::theta1, 0), ValidationError);
  CHECK(parse_theta_preset("theta3") == ThetaPreset::theta3);
  CHECK_FALSE(parse_theta_preset("theta0"));

  for (std::size_t kb = 2; kb <= 40; ++kb) {
    for (ThetaPreset p : {ThetaPreset::theta1, ThetaPreset::theta2, ThetaPreset::theta3}) {
      double sum = 0;
      for (double v : theta_preset(p, kb).values())
        sum += v;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("ThetaVector validation") {
  CHECK_THROWS_AS(ThetaVector({{1, 2}, {1, 4}}), ValidationError);
  CHECK_THROWS_AS(ThetaVector({{-1, 2}, {3, 2}}), ValidationError);
  CHECK_THROWS_AS(ThetaVector(std::vector<Ratio>{}), ValidationError);
  CHECK_NOTHROW(ThetaVector({{0, 1}, {1, 1}}));
}

TEST_CASE("sweep on G3") {
  const Network net = test::g3();
  const auto xi = default_xi_grid();
  const auto delta = default_delta_grid();
  const Surface s = sweep(net, PcVector({1, 1}), halves(), xi, delta, PcStrategy::pre_traversal);
  REQUIRE(s.rows() == 11);
  REQUIRE(s.cols() == 11);
  CHECK(s.mu.size() == 121);
  CHECK(s.totals == Counts{3, 1});
  const std::size_t last = 10;
  CHECK(s.delta_grid[last] == 1.0);
  CHECK(s.at(last, 0) == 0.0);
  for (std::size_t x = 1; x < 11; ++x)
    CHECK(s.at(last, x) == 1.0);

  const auto crit = critical_xi(s);
  CHECK(crit[last] == 1.0);
}

TEST_CASE("critical xi") {
  const Network net = test::g3();
  const Surface s = sweep(net, PcVector({1, 2}), halves(), default_xi_grid(), default_delta_grid(),
                          PcStrategy::pre_traversal);
  const auto crit = critical_xi(s);
  REQUIRE(crit.size() == 11);
  CHECK(crit[10] == 1.0);
  CHECK_FALSE(crit[0]);
  for (std::size_t x = 0; x < 11; ++x)
    CHECK(s.at(0, x) <= 0.5);

  Surface ones = s;
  std::fill(ones.mu.begin(), ones.mu.end(), 1.0);
  for (const auto& c : critical_xi(ones))
    CHECK(c == 0.0);
  Surface zeros = s;
  std::fill(zeros.mu.begin(), zeros.mu.end(), 0.0);
  for (const auto& c : critical_xi(zeros))
    CHECK_FALSE(c);
}

TEST_CASE("sweep validation") {
  const Network net = test::g3();
  const std::vector<double> ok = {0, 1};
  const std::vector<double> bad_order = {1, 1};
  const std::vector<double> negative = {-1, 1};
  const std::vector<double> empty;
  CHECK_THROWS_AS(sweep(net, PcVector({1, 1}), halves(), bad_order, ok, PcStrategy::literal), ValidationError);
  CHECK_THROWS_AS(sweep(net, PcVector({1, 1}), halves(), ok, negative, PcStrategy::literal), ValidationError);
  CHECK_THROWS_AS(sweep(net, PcVector({1, 1}), halves(), empty, ok, PcStrategy::literal), ValidationError);
  CHECK_THROWS_AS(sweep(net, PcVector({1, 1, 1}), halves(), ok, ok, PcStrategy::literal), ValidationError);
  CHECK_THROWS_AS(sweep(net, PcVector({1, 1, 1}), theta_preset(ThetaPreset::theta1, 3), ok, ok,
                        PcStrategy::literal),
                  ValidationError);
}

TEST_CASE("sweep agrees with per-cell census and with the oracle") {
  std::mt19937_64 rng(31337);
  const std::vector<double> xi = {0, 0.5, 1, 2, 5};
  const std::vector<double> delta = {0, 0.3, 0.7, 1, 1.5};
  for (int iter = 0; iter < 25; ++iter) {
    const Network net = test::random_network(rng, {2, 7, 0.4, false});
    const std::size_t kb = path_stats(net).k_bar;
    const PcVector gamma = gamma_preset(static_cast<GammaPreset>(iter % 3), kb);
    const ThetaVector theta = theta_preset(kb >= 2 ? static_cast<ThetaPreset>(iter % 3) : ThetaPreset::theta1, kb);
    for (PcStrategy strategy : kAllStrategies) {
      const Surface s = sweep(net, gamma, theta, xi, delta, strategy);
      const Surface threaded = sweep(net, gamma, theta, xi, delta, strategy, {3, ""});
      CHECK(threaded == s);
      for (std::size_t d = 0; d < delta.size(); ++d) {
        for (std::size_t x = 0; x < xi.size(); ++x) {
          const Shock shock{xi[x], delta[d]};
          const PcCensus c = pc_census(net, gamma, shock, strategy);
          CHECK(c.pc_counts == s.pc_counts[s.cell(d, x)]);
          CHECK(mu(c, theta) == s.at(d, x));
          CHECK(oracle::naive_mu(net, gamma, theta, shock, strategy) == s.at(d, x));
        }
      }
    }
  }
}
