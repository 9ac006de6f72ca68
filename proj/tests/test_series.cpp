#include "mayerkit/cluster.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mayerkit;
using namespace mayerkit::series;

TEST_CASE("multiset partitions") {
  // number of partitions of k into exactly n parts
  auto p = [](int k, int n) {
    std::function<int(int, int, int)> rec = [&](int left, int parts, int cap) -> int {
      if (parts == 0) return left == 0;
      int c = 0;
      for (int v = std::min(left, cap); v >= 1; --v) c += rec(left - v, parts - 1, v);
      return c;
    };
    return rec(k, n, k);
  };
  for (int k = 1; k <= 8; ++k)
    for (int n = 1; n <= k; ++n) {
      const auto parts = enum_partitions(k, n);
      CHECK(static_cast<int>(parts.size()) == p(k, n));
      for (const auto& m : parts) {
        int blocks = 0, weight = 0;
        for (auto [i, c] : m.m) blocks += c, weight += (i - 1) * c;
        CHECK(blocks == n);
        CHECK(weight == k);
      }
    }
}

TEST_CASE("transform on hard rods") {
  const auto b = cluster::tonks_mayer_coefficients(1.0, 10);
  // alternating sums lose digits as k grows
  for (int k = 1; k <= 9; ++k)
    CHECK(virial_from_mayer(b, k) == doctest::Approx(oracle::tonks_beta(k)).epsilon(k <= 6 ? 1e-10 : 1e-7));
  std::vector<Rational> exact{Rational(1)};
  for (int n = 2; n <= 8; ++n)
    exact.push_back(Rational(BigInt(n % 2 ? 1 : -1) * ipow(BigInt(n), n - 1), factorial(n)));
  for (int k = 1; k <= 7; ++k) CHECK(virial_from_mayer_exact(exact, k) == Rational(-(k + 1), k));
  CHECK_THROWS_AS(virial_from_mayer(b, 10), InputError);
}

TEST_CASE("transform equals inversion for arbitrary coefficients") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> b{Rational(1)};
    for (int n = 2; n <= 7; ++n) b.push_back(Rational(num(rng), den(rng)));
    const auto inv = invert_mayer_series<Rational>(b, 6);
    for (int k = 1; k <= 6; ++k) CHECK(inv[k - 1] == virial_from_mayer_exact(b, k));
  }
  // beta_1 = 2 b_2, beta_2 = 3 b_3 - 6 b_2^2 by hand
  const double bv[] = {0.3, -0.2};
  const auto t = cluster::mayer_table_from_values(bv);
  CHECK(virial_from_mayer(t, 1) == doctest::Approx(0.6));
  CHECK(virial_from_mayer(t, 2) == doctest::Approx(3 * -0.2 - 6 * 0.09));
  const auto oracle_table = invert_mayer_oracle(t, 2);
  CHECK(oracle_table.source == Source::inversion_oracle);
  CHECK(oracle_table.at(2) == doctest::Approx(-1.14));
}

TEST_CASE("combinatorial identity") {
  const int t[] = {1, 2, 3};
  const auto s = combi_identity_check(t, 3, 4);
  // coefficient of x^1 in (1+x)(1+x)^2(1+x)^3 = 6 = C(6, 1)
  CHECK(s.lhs == 6);
  CHECK(s.rhs == 6);
  const int bad[] = {1, 1, 4};
  CHECK_THROWS_AS(combi_identity_check(bad, 3, 4), InputError);
  const int wrong_sum[] = {1, 2, 2};
  CHECK_THROWS_AS(combi_identity_check(wrong_sum, 3, 4), InputError);
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; n + k <= 9; ++k) {
      std::vector<int> tt(n, 2);
      tt[0] = k + n - 1 - 2 * (n - 1);
      if (tt[0] < 1) continue;
      const auto r = combi_identity_check(tt, n, k);
      CHECK(to_double(r.lhs) == oracle::binom(k - 1 + n, n - 2));
    }
}

TEST_CASE("free-energy series and its tail") {
  const auto b = cluster::tonks_mayer_coefficients(1.0, 12);
  const auto C = virial_table_from_mayer(b, 11);
  RadiusInputs r;
  r.c_beta = 2.0;
  for (double rho : {0.01, 0.04, 0.07}) {
    const double exact = rho * std::log1p(-rho);
    for (int k : {2, 5, 10}) {
      const auto f = free_energy_series(rho, C, k, r);
      REQUIRE(f.certified);
      CHECK(std::abs(f.Q - exact) <= *f.tail_bound);
      CHECK(f.ratio < 1);
    }
  }
  const auto far = free_energy_series(0.3, C, 5, r);
  CHECK_FALSE(far.certified);
  CHECK_FALSE(far.tail_bound.has_value());
  CHECK_FALSE(far.warning.empty());
}

TEST_CASE("assemble free energy") {
  const double V = 100, rho = 0.5;
  const double f = assemble_free_energy(1.0, rho, 50, V, -0.1);
  const double ideal = (50 * std::log(V) - std::lgamma(51.0)) / V;
  CHECK(f == doctest::Approx(-(ideal - 0.1)));
  CHECK_THROWS_AS(assemble_free_energy(1.0, 0.4, 50, V, 0.0), InputError);
  CHECK_THROWS_AS(assemble_free_energy(0.0, rho, 50, V, 0.0), DomainError);
}

TEST_CASE("virial tables") {
  const auto b = cluster::tonks_mayer_coefficients(1.0, 5);
  const auto t = virial_table_from_mayer(b, 4);
  CHECK(t.source == Source::mayer_transform);
  CHECK(t.at(4) == doctest::Approx(-1.25));
  CHECK_THROWS_AS(t.at(5), InputError);
  CHECK(to_string(Source::direct_integral) == "direct_integral");
}
