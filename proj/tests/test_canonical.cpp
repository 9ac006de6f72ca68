#include "mayerkit/canonical.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/potentials.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace mayerkit;
using namespace mayerkit::canonical;

TEST_CASE("direct ztilde for hard rods") {
  const auto rod = PairPotential::hard_rod(1.0);
  for (int N = 2; N <= 4; ++N)
    for (double L : {5.0, 8.0}) {
      const auto q = ztilde_direct(rod, 1.0, L, N, ZMethod::quadrature);
      CHECK(q.ztilde == doctest::Approx(oracle::tonks_ztilde(N, L)).epsilon(1e-10));
      CHECK(ztilde_direct(rod, 1.0, L, N, ZMethod::tonks_closed).ztilde == doctest::Approx(oracle::tonks_ztilde(N, L)));
    }
  const auto mc = ztilde_direct(rod, 1.0, 10.0, 6, ZMethod::monte_carlo, cluster::MethodSpec::monte_carlo(4, 200000, 1));
  CHECK(std::abs(mc.ztilde - oracle::tonks_ztilde(6, 10.0)) < 5 * mc.error);
  CHECK_THROWS_AS(ztilde_direct(rod, 1.0, 2.0, 4, ZMethod::tonks_closed), DomainError);
  CHECK_THROWS_AS(ztilde_direct(rod, 1.0, 10.0, 5, ZMethod::quadrature), std::exception);
  const auto r = ztilde_direct(rod, 1.0, 10.0, 3, ZMethod::tonks_closed);
  CHECK(q_lambda(r) == doctest::Approx(3 * std::log(0.8) / 10));
}

TEST_CASE("square well quadrature against Monte Carlo") {
  const auto sw = PairPotential::square_well(1.0, 1.5, 0.5, 0.5);
  const auto q = ztilde_direct(sw, 1.0, 6.0, 3, ZMethod::quadrature);
  const auto mc = ztilde_direct(sw, 1.0, 6.0, 3, ZMethod::monte_carlo, cluster::MethodSpec::monte_carlo(2, 400000, 1));
  CHECK(std::abs(q.ztilde - mc.ztilde) < 5 * mc.error);
  CHECK(q.ztilde > oracle::tonks_ztilde(3, 6.0));  // attraction raises it
}

TEST_CASE("series against direct for hard rods") {
  const auto rod = PairPotential::hard_rod(1.0);
  std::vector<double> Ns, gaps;
  for (int N : {50, 100, 200, 400}) {
    const auto r = compare_series_direct(rod, 1.0, N / 0.05, N, 8);
    CHECK(r.certified);
    CHECK(r.pass);
    CHECK(r.gap <= r.budget);
    CHECK(r.rho == doctest::Approx(0.05));
    Ns.push_back(N);
    gaps.push_back(r.gap);
  }
  CHECK(oracle::loglog_slope(Ns, gaps) == doctest::Approx(-1.0).epsilon(0.1));
  // beyond rho* the comparison cannot be certified
  const auto far = compare_series_direct(rod, 1.0, 100 / 0.3, 100, 8);
  CHECK_FALSE(far.certified);
  CHECK_FALSE(far.pass);
}

TEST_CASE("zmethod names") {
  for (auto m : {ZMethod::quadrature, ZMethod::monte_carlo, ZMethod::tonks_closed})
    CHECK(parse_zmethod(to_string(m)) == m);
  CHECK_THROWS_AS(parse_zmethod("simpson"), InputError);
}
