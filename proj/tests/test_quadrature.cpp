#include "mayerkit/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace mayerkit;

TEST_CASE("Gauss-Legendre rules") {
  for (int q : {1, 2, 5, 12, 40}) {
    const auto& r = quad::gauss_legendre(q);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(q));
    CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 1; i < q; ++i) CHECK(r.nodes[i - 1] < r.nodes[i]);
    // exact through degree 2q - 1
    for (int deg = 0; deg <= 2 * q - 1; ++deg) {
      double s = 0;
      for (int i = 0; i < q; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
  CHECK(&quad::gauss_legendre(7) == &quad::gauss_legendre(7));
}

TEST_CASE("composite and piecewise") {
  auto f = [](double x) { return std::exp(x); };
  CHECK(quad::composite(f, 0, 1, 4, 5) == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
  auto step = [](double x) { return x < 0.3 ? 1.0 : 2.0; };
  const double br[] = {0.0, 0.3, 1.0};
  const auto e = quad::piecewise(step, br, 1, 1);
  CHECK(e.value == doctest::Approx(0.3 + 1.4));
  CHECK(e.error < 1e-14);
}
