#include "mayerkit/errors.hpp"
#include "mayerkit/potentials.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <limits>
#include <numbers>

using namespace mayerkit;
using nlohmann::json;

TEST_CASE("f_bond for hard cores") {
  const auto rod = PairPotential::hard_rod(1.5);
  CHECK(f_bond(rod, 1.0, 0.3) == -1.0);
  CHECK(f_bond(rod, 1.0, 1.6) == 0.0);
  const auto hs = PairPotential::hard_sphere(1.0);
  CHECK(hs.dimension() == 3);
  CHECK(f_bond(hs, 7.0, 0.99) == -1.0);
  CHECK(f_bond(hs, 7.0, 1.01) == 0.0);
}

TEST_CASE("square well bond and C(beta)") {
  const double sigma = 1.0, lambda = 1.5, eps = 0.7;
  const auto sw = PairPotential::square_well(sigma, lambda, eps, eps);
  for (double beta : {0.1, 1.0, 2.0}) {
    CHECK(f_bond(sw, beta, 0.5) == -1.0);
    CHECK(f_bond(sw, beta, 1.2) == doctest::Approx(std::exp(beta * eps) - 1));
    CHECK(f_bond(sw, beta, 1.6) == 0.0);
    const double exact = 2 * sigma + 2 * sigma * (lambda - 1) * (std::exp(beta * eps) - 1);
    CHECK(c_beta(sw, beta).value == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK(sw.breakpoints().back() == doctest::Approx(1.5));
  CHECK(sw.range() == doctest::Approx(1.5));
}

TEST_CASE("hard-core C(beta) is the excluded volume") {
  CHECK(c_beta(PairPotential::hard_rod(2.0), 3.0).value == doctest::Approx(4.0));
  CHECK(c_beta(PairPotential::hard_sphere(1.0), 3.0).value == doctest::Approx(4 * std::numbers::pi / 3));
  CHECK(c_beta(PairPotential::hard_sphere(1.0, 2), 1.0).value == doctest::Approx(std::numbers::pi));
  CHECK(sphere_surface(1) == doctest::Approx(2.0));
  CHECK(sphere_surface(3) == doctest::Approx(4 * std::numbers::pi));
}

TEST_CASE("tabulated potential") {
  const double inf = std::numeric_limits<double>::infinity();
  // hard core to 1, then a linear ramp from +1 down to 0 at r = 2
  const auto p = PairPotential::tabulated({1.0, 2.0}, {1.0, 0.0}, 2.0, std::nullopt);
  CHECK(p.energy(1.5) == doctest::Approx(0.5));
  CHECK(p.energy(2.5) == 0.0);
  const auto core = PairPotential::tabulated({0.0, 1.0, 1.0000001, 2.0}, {inf, inf, 0.0, 0.0}, 2.0, std::nullopt);
  CHECK(f_bond(core, 1.0, 0.5) == -1.0);
  // negative samples need a declared B
  CHECK_THROWS_AS(PairPotential::tabulated({1.0, 2.0}, {-1.0, 0.0}, 2.0, std::nullopt), InputError);
  // fixed mesh refinement: the error estimate falls when panels double
  const auto e1 = c_beta_fixed(p, 1.0, 2, 2), e2 = c_beta_fixed(p, 1.0, 4, 2);
  CHECK(e2.error < e1.error);
  // V = 1 on [0, 1] (held), then 2 - r: 2 [ (1 - e^{-1}) + int_0^1 (1 - e^{-t}) dt ] = 2
  CHECK(c_beta(p, 1.0).value == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("from_json validation names the field") {
  const auto ok = PairPotential::from_json(json{{"kind", "square_well"}, {"sigma", 1}, {"lambda_w", 1.5}, {"epsilon", 1}, {"B", 1}});
  CHECK(ok.kind() == PotentialKind::square_well);
  CHECK(PairPotential::from_json(ok.to_json()).to_json() == ok.to_json());
  auto message = [](const json& j) {
    try {
      PairPotential::from_json(j);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(json{{"kind", "hard_rod"}, {"sigma", 1}, {"colour", 2}}).find("colour") != std::string::npos);
  CHECK(message(json{{"kind", "square_well"}, {"sigma", 1}, {"lambda_w", 1.5}, {"epsilon", 1}}).find("B") != std::string::npos);
  CHECK(message(json{{"kind", "hard_rod"}, {"sigma", -1}}).find("sigma") != std::string::npos);
  CHECK(message(json{{"kind", "hard_rod"}, {"sigma", 1}, {"dimension", 3}}).find("dimension") != std::string::npos);
  CHECK(message(json{{"kind", "blob"}, {"sigma", 1}}).find("kind") != std::string::npos);
  CHECK(message(json{{"kind", "square_well"}, {"sigma", 1}, {"lambda_w", 0.5}, {"epsilon", 1}, {"B", 1}}).find("lambda_w") != std::string::npos);
}

TEST_CASE("thermo state") {
  ThermoState s;
  s.L = 10;
  s.N = 5;
  CHECK(s.density(1) == doctest::Approx(0.5));
  CHECK(s.density(3) == doctest::Approx(0.005));
  ThermoState bad;
  CHECK_THROWS_AS(bad.density(1), InputError);
}
