#include "mayerkit/cluster.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/graphs.hpp"
#include "mayerkit/polymer.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace mayerkit;
using namespace mayerkit::polymer;

namespace {

// (1/N^{k+1}) sum over ordered tuples of subsets with the given sizes of
// |phi^T(G(R))|, enumerating every tuple.
double p_bruteforce(int N, const std::vector<int>& s) {
  std::vector<std::vector<unsigned>> by_size(N + 1);
  for (unsigned m = 1; m < (1u << N); ++m) by_size[std::popcount(m)].push_back(m);
  const int n = static_cast<int>(s.size());
  std::vector<unsigned> pick(n);
  double total = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<oracle::Edge> edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (pick[a] & pick[b]) edges.emplace_back(a, b);
      total += std::abs(oracle::ursell(n, edges));
      return;
    }
    for (unsigned m : by_size[s[i]]) {
      pick[i] = m;
      rec(i + 1);
    }
  };
  rec(0);
  int k = 0;
  for (int x : s) k += x - 1;
  return total / std::pow(N, k + 1);
}

}  // namespace

TEST_CASE("Xi recursion, brute force and the subset oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(-0.4, 0.4);
  for (int trial = 0; trial < 30; ++trial) {
    const int N = 2 + trial % 6;
    std::map<int, double> z;
    std::vector<double> zv(N + 1, 0.0);
    for (int m = 2; m <= N; ++m) zv[m] = z[m] = U(rng);
    const auto a = ActivityProfile::from_zeta(N, z);
    const double ref = oracle::xi_subsets(N, zv);
    CHECK(xi_exact(N, a) == doctest::Approx(ref).epsilon(1e-12));
    CHECK(xi_exact(N, a, XiMethod::bruteforce) == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK_THROWS_AS(xi_exact(kMaxBruteForceN + 1, ActivityProfile::from_zeta(kMaxBruteForceN + 1, {}), XiMethod::bruteforce),
                  CapacityError);
}

TEST_CASE("activity profiles") {
  const auto t = ActivityProfile::from_tonks(5, 50.0, 1.0);
  CHECK(t.zeta_at(2) == doctest::Approx(-2.0 / 50));
  CHECK(t.zeta_at(3) == doctest::Approx(std::pow(3.0 / 50, 2)));
  const auto C = t.C_rho();
  CHECK(C.at(2) == doctest::Approx(2.0 / 50 * 4));
  const auto b = cluster::tonks_mayer_coefficients(1.0, 5);
  const auto m = ActivityProfile::from_mayer(5, 50.0, b);
  for (int k = 2; k <= 5; ++k) CHECK(m.zeta_at(k) == doctest::Approx(t.zeta_at(k)));
  CHECK_THROWS_AS(ActivityProfile::from_zeta(3, {{5, 0.1}}), InputError);
}

TEST_CASE("Ursell series truncation") {
  std::map<int, double> z{{2, 0.02}, {3, -0.004}, {4, 0.0005}};
  std::vector<double> xs, res;
  for (double lam : {0.5, 0.25, 0.125}) {
    std::map<int, double> zz;
    for (auto [m, v] : z) zz[m] = v * lam;
    const auto a = ActivityProfile::from_zeta(6, zz);
    const auto s = log_xi_ursell(6, a, 3);
    xs.push_back(lam);
    res.push_back(std::log(xi_exact(6, a)) - s.partial_sums.back());
  }
  CHECK(oracle::loglog_slope(xs, res) == doctest::Approx(4.0).epsilon(0.05));
  // first order is the sum of activities
  const auto a = ActivityProfile::from_zeta(4, {{2, 0.1}});
  CHECK(log_xi_ursell(4, a, 1).terms[0] == doctest::Approx(6 * 0.1));
}

TEST_CASE("convergence criterion") {
  const auto a = ActivityProfile::from_zeta(4, {{2, 0.01}});
  const auto r = fp_check(a, 0.5);
  CHECK(r.lhs == doctest::Approx(std::exp(1.0) * 0.01 * 3));
  CHECK(r.rhs == doctest::Approx(std::exp(0.5) - 1));
  CHECK(r.holds);
  CHECK_FALSE(fp_check(ActivityProfile::from_zeta(4, {{2, 1.0}}), 0.5).holds);
}

TEST_CASE("P(s) exact against full enumeration") {
  for (int N = 3; N <= 6; ++N) {
    for (const std::vector<int>& s : {std::vector<int>{2, 2}, {2, 3}, {3}, {2, 2, 2}}) {
      CHECK(to_double(p_exact(N, s)) == doctest::Approx(p_bruteforce(N, s)).epsilon(1e-12));
      CHECK(p_exact(N, s) == p_exact(N, s, true));
    }
    CHECK(p_exact(N, std::vector<int>{2, 2}) == Rational((N - 1) * (2 * N - 3), 2 * N * N));
  }
  CHECK(p_limit(std::vector<int>{3}) == Rational(1, 6));
  CHECK(p_limit(std::vector<int>{2, 2}) == Rational(1));
  // symmetric in the order of s
  CHECK(p_exact(7, std::vector<int>{2, 3, 2}) == p_exact(7, std::vector<int>{3, 2, 2}));
  CHECK_THROWS_AS(p_exact(kMaxPExactN + 1, std::vector<int>{2, 2}), CapacityError);
}

TEST_CASE("finite-N coefficients") {
  std::vector<Rational> b(6, Rational(0));
  for (int n = 1; n <= 5; ++n) b[n] = Rational(BigInt(n % 2 ? 1 : -1) * ipow(BigInt(n), n - 1), factorial(n));
  for (int N = 3; N <= 10; ++N) {
    CHECK(ck_finite_N_exact(N, b, 1) == Rational(2) * b[2] * Rational(N - 1, N));
    CHECK(ck_finite_N_exact(N, b, 2) == Rational(-3 * (N - 1), 2 * N));
  }
  const auto t = cluster::tonks_mayer_coefficients(1.0, 5);
  CHECK(ck_finite_N(8, t, 2) == doctest::Approx(-1.5 * 7 / 8));
  std::vector<double> xs, res;
  for (int N = 6; N <= 10; ++N) {
    xs.push_back(N);
    res.push_back(ck_finite_N(N, t, 3) - (-4.0 / 3));
  }
  CHECK(oracle::loglog_slope(xs, res) == doctest::Approx(-1.0).epsilon(0.2));
}
