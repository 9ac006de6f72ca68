#include "mayerkit/errors.hpp"
#include "mayerkit/radii.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>

using namespace mayerkit;
using namespace mayerkit::radii;

TEST_CASE("F(u) against a dense scan") {
  for (double u : {1.0, 1.5, 3.0, 10.0, 1000.0}) {
    const auto [value, at] = oracle::F_scan(u);
    const auto F = F_of_u(u);
    CHECK(F.value == doctest::Approx(value).epsilon(1e-12));
    CHECK(F.a_star == doctest::Approx(at).epsilon(1e-5));
    CHECK(F.grid_local_maxima == 1);
  }
  CHECK(F_of_u(1.0).value == doctest::Approx(0.1448).epsilon(5e-4 / 0.1448));
  CHECK(F_of_u(1e6).value == doctest::Approx(std::exp(-1.0)).epsilon(1e-2));
}

TEST_CASE("g(u) equals F(u)") {
  for (double u : {1.0, 2.0, 5.0, 10.0, 100.0}) {
    CHECK(std::abs(g_of_u(u).value - F_of_u(u).value) < 1e-10);
    CHECK(g_of_u(u).value == doctest::Approx(oracle::g_scan(u)).epsilon(1e-11));
  }
}

TEST_CASE("K* two ways") {
  for (double u : {1.0, 4.0, 50.0}) {
    const auto K = K_star(u);
    CHECK(K.closed_form == doctest::Approx(1.0 / F_of_u(u).value));
    CHECK(K.series_check == doctest::Approx(K.closed_form).epsilon(1e-7));
  }
  // admissible at every a, so never below the minimum
  for (double a : {0.1, 0.5, 2.0}) CHECK(kappa_min_series(1.0, a) >= K_star(1.0).closed_form * (1 - 1e-9));
}

TEST_CASE("radius formulas") {
  CHECK(u_of(0.5, 1.0) == doctest::Approx(std::exp(1.0)));
  CHECK_THROWS_AS(u_of(1.0, -1.0), DomainError);
  const double C = 2.0;
  CHECK(rho_star(1.0, 0.0, C) == doctest::Approx(F_of_u(1.0).value / C));
  CHECK(mayer_radius(1.0, 0.0, C) == doctest::Approx(1 / (std::exp(1.0) * C)));
  CHECK(rho_star(1.0, 0.0, C) < mayer_radius(1.0, 0.0, C));
}

TEST_CASE("coefficient bounds dominate hard rods") {
  const double a = F_of_u(1.0).a_star;
  for (int k = 1; k <= 12; ++k) {
    const auto b = ck_bound(k, 1.0, 0.0, 2.0, a);
    CHECK(std::abs(oracle::tonks_beta(k)) <= b.ours);
    CHECK(k * std::abs(oracle::tonks_beta(k)) <= b.lp);
    CHECK(b.base_lp == doctest::Approx(2 * 2.0 / kLebowitzPenroseConstant));
  }
}

TEST_CASE("radius report arithmetic") {
  const auto r = radius_report(1.0, std::nullopt, 5);
  CHECK(r.c_beta_assumed);
  CHECK(r.base_constant_reference == doctest::Approx(0.24026).epsilon(1e-5 / 0.24026));
  CHECK(r.lp_constant == doctest::Approx(1 / 0.28952));
  CHECK(r.base_constant_computed == doctest::Approx(std::exp(-1 - r.F.a_star)));
  CHECK(r.a_star_discrepancy);
  CHECK(r.bounds.size() == 5);
  const auto j = to_json(r);
  CHECK(j.contains("base_constants"));
  CHECK(j["F"].get<double>() == doctest::Approx(r.F.value));
}

TEST_CASE("worked values") {
  const auto b = ck_bound(1, 1.0, 0.0, 2.0, 0.4627);
  CHECK(b.ours == doctest::Approx(5.74).epsilon(1e-3));
  CHECK(b.lp == doctest::Approx(13.82).epsilon(1e-3));
  // hard spheres: 1 / (e * 4 pi / 3)
  CHECK(mayer_radius(1.0, 0.0, 4 * std::numbers::pi / 3) == doctest::Approx(0.087825).epsilon(1e-5));
  CHECK(g_of_u(1.0).w_star == doctest::Approx(0.31492).epsilon(1e-5));
  CHECK(F_of_u(1.0).a_star == doctest::Approx(0.46228).epsilon(1e-5));
}
