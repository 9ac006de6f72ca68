#include "mayerkit/cluster.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/potentials.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mayerkit;
using namespace mayerkit::cluster;

TEST_CASE("graph sums agree with the subset recursion") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> U(-1, 1.5);
  for (int n = 2; n <= 6; ++n) {
    const GraphSum connected(n, graphs::GraphClass::connected);
    CHECK(connected.size() == oracle::kConnectedCounts[n]);
    std::vector<double> f(graphs::edge_count(n));
    for (int trial = 0; trial < 5; ++trial) {
      for (auto& x : f) x = U(rng);
      CHECK(connected_sum_recursive(n, f) == doctest::Approx(connected(f)).epsilon(1e-11));
    }
  }
  // all f = -1: sum over connected subgraphs of (-1)^|E| is the Ursell value of K_n
  for (int n = 2; n <= 6; ++n) {
    std::vector<double> f(graphs::edge_count(n), -1.0);
    CHECK(connected_sum_recursive(n, f) == doctest::Approx(std::pow(-1, n - 1) * oracle::factorial(n - 1)));
  }
}

TEST_CASE("hard rod b_n by quadrature") {
  const auto rod = PairPotential::hard_rod(1.0);
  for (int n = 1; n <= 6; ++n) {
    const auto v = mayer_bn(rod, 1.0, n, VolumeSpec::infinite(), MethodSpec::quadrature());
    CHECK(v.value == doctest::Approx(oracle::tonks_bn(n)).epsilon(1e-9));
    CHECK(v.error < 1e-9);
  }
  const auto rod2 = PairPotential::hard_rod(2.0);
  CHECK(mayer_bn(rod2, 1.0, 4, VolumeSpec::infinite(), MethodSpec::quadrature()).value ==
        doctest::Approx(oracle::tonks_bn(4, 2.0)).epsilon(1e-9));
  const auto t = tonks_mayer_coefficients(1.0, 8);
  for (int n = 1; n <= 8; ++n) CHECK(t.at(n) == doctest::Approx(oracle::tonks_bn(n)).epsilon(1e-13));
  CHECK_THROWS_AS(t.at(9), InputError);
}

TEST_CASE("hard rod beta_k direct") {
  const auto rod = PairPotential::hard_rod(1.0);
  for (int k = 1; k <= 3; ++k)
    CHECK(virial_bk_direct(rod, 1.0, k, MethodSpec::quadrature()).value ==
          doctest::Approx(oracle::tonks_beta(k)).epsilon(1e-9));
  MethodSpec exact;
  exact.method = Method::exact;
  CHECK(virial_bk_direct(rod, 1.0, 5, exact).value == doctest::Approx(oracle::tonks_beta(5)));
  CHECK(mayer_bn(rod, 1.0, 7, VolumeSpec::infinite(), exact).value == doctest::Approx(oracle::tonks_bn(7)));
}

TEST_CASE("square well b_2 in one dimension") {
  const auto sw = PairPotential::square_well(1.0, 1.7, 0.8, 0.8);
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto v = mayer_bn(sw, beta, 2, VolumeSpec::infinite(), MethodSpec::quadrature());
    CHECK(v.value == doctest::Approx(oracle::sw_b2_1d(1.0, 1.7, 0.8, beta)).epsilon(1e-10));
  }
  // b_3 agrees between quadrature and Monte Carlo
  const auto q = mayer_bn(sw, 1.0, 3, VolumeSpec::infinite(), MethodSpec::quadrature());
  const auto mc = mayer_bn(sw, 1.0, 3, VolumeSpec::infinite(), MethodSpec::monte_carlo(11, 400000, 1));
  CHECK(std::abs(q.value - mc.value) < 5 * mc.error + 1e-9);
}

TEST_CASE("finite box hard rods") {
  const auto rod = PairPotential::hard_rod(1.0);
  for (double L : {5.0, 10.0, 40.0}) {
    const auto v = mayer_bn(rod, 1.0, 2, VolumeSpec::cube(L), MethodSpec::quadrature());
    CHECK(v.value == doctest::Approx(-1.0 + 1.0 / (2 * L)).epsilon(1e-11));
  }
  // b_3(L) approaches 3/2 like 1/L
  const double d20 = 1.5 - mayer_bn(rod, 1.0, 3, VolumeSpec::cube(20), MethodSpec::quadrature()).value;
  const double d40 = 1.5 - mayer_bn(rod, 1.0, 3, VolumeSpec::cube(40), MethodSpec::quadrature()).value;
  CHECK(d20 / d40 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("hard sphere Monte Carlo") {
  const auto hs = PairPotential::hard_sphere(1.0);
  const auto b2 = mayer_bn(hs, 1.0, 2, VolumeSpec::infinite(), MethodSpec::monte_carlo(3, 200000, 1));
  // every sample lands inside the core, so the estimate is exact
  CHECK(std::abs(b2.value - oracle::hs_b2()) <= 5 * b2.error + 1e-12);
  const auto b3 = mayer_bn(hs, 1.0, 3, VolumeSpec::infinite(), MethodSpec::monte_carlo(3, 400000, 1));
  CHECK(b3.error > 0);
  CHECK(std::abs(b3.value - oracle::hs_b3()) < 5 * b3.error);
  const auto beta1 = virial_bk_direct(hs, 1.0, 1, MethodSpec::monte_carlo(5, 200000, 1));
  CHECK(beta1.value == doctest::Approx(2 * oracle::hs_b2()).epsilon(1e-12));
  // quadrature is one-dimensional only
  CHECK_THROWS_AS(mayer_bn(hs, 1.0, 3, VolumeSpec::infinite(), MethodSpec::quadrature()), InputError);
}

TEST_CASE("Monte Carlo is reproducible and independent of the worker count") {
  const auto hs = PairPotential::hard_sphere(1.0);
  const auto a = mayer_bn(hs, 1.0, 4, VolumeSpec::infinite(), MethodSpec::monte_carlo(9, 50000, 1));
  const auto b = mayer_bn(hs, 1.0, 4, VolumeSpec::infinite(), MethodSpec::monte_carlo(9, 50000, 4));
  const auto c = mayer_bn(hs, 1.0, 4, VolumeSpec::infinite(), MethodSpec::monte_carlo(10, 50000, 1));
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  CHECK(a.value != c.value);
}

TEST_CASE("Penrose bound holds") {
  const auto rod = PairPotential::hard_rod(1.0);
  for (int n = 2; n <= 6; ++n)
    CHECK(std::abs(oracle::tonks_bn(n)) <= penrose_bn_bound(n, 1.0, 0.0, 2.0) * (1 + 1e-12));
  const auto hs = PairPotential::hard_sphere(1.0);
  const double C = c_beta(hs, 1.0).value;
  CHECK(std::abs(oracle::hs_b3()) <= penrose_bn_bound(3, 1.0, 0.0, C));
  // n = 2 is an equality for non-negative potentials
  CHECK(penrose_bn_bound(2, 1.0, 0.0, C) == doctest::Approx(-oracle::hs_b2()));
}

TEST_CASE("table from values and error paths") {
  const double b[] = {-1.0, 1.5};
  const auto t = mayer_table_from_values(b);
  CHECK(t.at(1) == 1.0);
  CHECK(t.at(3) == 1.5);
  CHECK_FALSE(t.has(4));
  const auto rod = PairPotential::hard_rod(1.0);
  CHECK_THROWS_AS(mayer_bn(rod, 1.0, 7, VolumeSpec::infinite(), MethodSpec::quadrature()), std::exception);
  CHECK_THROWS_AS(mayer_bn(rod, 1.0, 0, VolumeSpec::infinite(), MethodSpec::quadrature()), std::exception);
}

TEST_CASE("ordered chain integral volume") {
  const auto rod = PairPotential::hard_rod(1.0);
  ChainDomain d;
  d.points = 3;
  d.box = 4.0;
  const auto one = ordered_chain_integral(rod, 1.0, d, [](std::span<const double>) { return 1.0; });
  CHECK(one.value == doctest::Approx(64.0 / 6).epsilon(1e-12));
  ChainDomain bad;
  bad.points = 2;
  CHECK_THROWS_AS(ordered_chain_integral(rod, 1.0, bad, [](std::span<const double>) { return 1.0; }), DomainError);
}
