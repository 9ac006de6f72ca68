// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "mayerkit/canonical.hpp"
#include "mayerkit/cluster.hpp"
#include "mayerkit/graphs.hpp"
#include "mayerkit/polymer.hpp"
#include "mayerkit/potentials.hpp"
#include "mayerkit/radii.hpp"
#include "mayerkit/series.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace mayerkit;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool all_ok = true;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_seconds;
  const bool pass = o.pass && in_time;
  all_ok = all_ok && pass;
  std::printf("%s AC%d %s: %s [%.2fs of %.0fs]%s\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), s,
              limit_seconds, in_time ? "" : " too slow");
  std::fflush(stdout);
}

std::string num(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.6g", x);
  return b;
}

}  // namespace

int main() {
  criterion(1, "radius constants", 1, [] {
    const double F1 = radii::F_of_u(1.0).value;
    bool ok = std::abs(F1 - 0.1448) <= 5e-4;
    double worst = 0;
    for (double u : {1.0, 2.0, 5.0, 10.0, 100.0})
      worst = std::max(worst, std::abs(radii::g_of_u(u).value - radii::F_of_u(u).value));
    ok = ok && worst <= 1e-10;
    const double Fbig = radii::F_of_u(1e6).value;
    ok = ok && std::abs(Fbig - std::exp(-1.0)) <= 1e-2;
    return Outcome{ok, "F(1)=" + num(F1) + " max|g-F|=" + num(worst) + " F(1e6)=" + num(Fbig)};
  });

  criterion(2, "base constants", 1, [] {
    const auto r = radii::radius_report(1.0, std::nullopt, 4);
    bool ok = std::abs(r.base_constant_reference - 0.24026) <= 1e-5;
    ok = ok && std::abs(r.lp_constant - 1 / 0.28952) <= 1e-12;
    // the computed optimum is reported next to a = 0.426 and flagged
    ok = ok && r.a_star_discrepancy && std::abs(r.base_constant_computed - std::exp(-1 - r.F.a_star)) < 1e-15;
    return Outcome{ok, "1/e^(1.426)=" + num(r.base_constant_reference) + " 1/0.28952=" + num(r.lp_constant) +
                           " a*=" + num(r.F.a_star) + " 1/e^(1+a*)=" + num(r.base_constant_computed) +
                           (r.a_star_discrepancy ? " (flagged)" : "")};
  });

  criterion(3, "hard-rod pipeline", 300, [] {
    const auto rod = PairPotential::hard_rod(1.0);
    const auto m = cluster::MethodSpec::quadrature();
    double worst_b = 0;
    for (int n = 1; n <= 5; ++n) {
      const double v = cluster::mayer_bn(rod, 1.0, n, cluster::VolumeSpec::infinite(), m).value;
      worst_b = std::max(worst_b, std::abs(v / oracle::tonks_bn(n) - 1));
    }
    const auto b = cluster::mayer_coefficients(rod, 1.0, 4, cluster::VolumeSpec::infinite(), m);
    const auto inv = series::invert_mayer_oracle(b, 3);
    double worst_k = 0;
    for (int k = 1; k <= 3; ++k) {
      const double t = series::virial_from_mayer(b, k);
      const double d = cluster::virial_bk_direct(rod, 1.0, k, m).value;
      const double o = inv.at(k), ex = oracle::tonks_beta(k);
      for (double x : {t, d, o}) worst_k = std::max(worst_k, std::abs(x - ex));
      worst_k = std::max({worst_k, std::abs(t - d), std::abs(t - o), std::abs(d - o)});
    }
    return Outcome{worst_b <= 1e-6 && worst_k <= 1e-6, "max rel b_n err " + num(worst_b) + ", max beta_k spread " + num(worst_k)};
  });

  criterion(4, "Penrose identity", 600, [] {
    std::uint64_t graphs_checked = 0;
    for (int n = 1; n <= 6; ++n) {
      bool ok = true;
      const long long sign = (n - 1) % 2 ? -1 : 1;
      graphs::for_each_graph(n, graphs::GraphClass::connected, [&](const graphs::LabeledGraph& g) {
        ++graphs_checked;
        ok = graphs::ursell_value(g) == sign * static_cast<long long>(graphs::penrose_trees(g).size());
        return ok;
      });
      if (!ok) return Outcome{false, "mismatch at n=" + std::to_string(n)};
    }
    std::mt19937_64 rng(20240607);
    for (int trial = 0; trial < 100; ++trial) {
      const auto edges = oracle::random_connected(7, rng, 0.05 + 0.5 * (trial % 10) / 9.0);
      std::vector<std::pair<int, int>> one_based;
      for (auto [a, b] : edges) one_based.emplace_back(a + 1, b + 1);
      const auto g = graphs::LabeledGraph::from_edges(7, one_based);
      const long long phi = oracle::ursell(7, edges);
      if (phi != graphs::ursell_value(g) || phi != static_cast<long long>(graphs::penrose_trees(g).size()))
        return Outcome{false, "mismatch on random n=7 graph " + std::to_string(trial)};
    }
    return Outcome{true, std::to_string(graphs_checked) + " connected graphs n<=6, 100 random n=7"};
  });

  criterion(5, "combinatorial identity", 60, [] {
    long tuples = 0;
    for (int n = 2; n <= 11; ++n)
      for (int k = 1; n + k <= 12; ++k) {
        std::vector<int> t(n);
        bool ok = true;
        std::function<void(int, int)> rec = [&](int i, int left) {
          if (!ok) return;
          if (i == n) {
            if (left != 0) return;
            ++tuples;
            const auto s = series::combi_identity_check(t, n, k);
            ok = s.lhs == s.rhs && to_double(s.rhs) == oracle::binom(k - 1 + n, n - 2);
            return;
          }
          for (int v = i == 0 ? 1 : 2; v <= left; ++v) {
            t[i] = v;
            rec(i + 1, left - v);
          }
        };
        rec(0, n + k - 1);
        if (!ok) return Outcome{false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    return Outcome{true, std::to_string(tuples) + " tuples"};
  });

  criterion(6, "polymer exactness", 300, [] {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int N = 1 + trial % 7;
      std::map<int, double> z;
      std::vector<double> zv(N + 1, 0.0);
      for (int m = 2; m <= N; ++m) zv[m] = z[m] = U(rng);
      const auto a = polymer::ActivityProfile::from_zeta(N, z);
      const double rec = polymer::xi_exact(N, a, polymer::XiMethod::recursion);
      const double bf = polymer::xi_exact(N, a, polymer::XiMethod::bruteforce);
      const double ref = oracle::xi_subsets(N, zv);
      worst = std::max({worst, std::abs(rec - bf), std::abs(rec - ref)});
    }
    const std::map<int, double> base{{2, 0.03}, {3, -0.006}, {4, 0.001}, {5, -0.0002}};
    std::vector<double> lam, res;
    for (double l : {0.4, 0.2, 0.1, 0.05}) {
      std::map<int, double> z;
      for (auto [m, v] : base) z[m] = v * l;
      const auto a = polymer::ActivityProfile::from_zeta(7, z);
      const auto s = polymer::log_xi_ursell(7, a, 3);
      lam.push_back(l);
      res.push_back(std::log(polymer::xi_exact(7, a)) - s.partial_sums.back());
    }
    const double slope = oracle::loglog_slope(lam, res);
    return Outcome{worst <= 1e-12 && std::abs(slope - 4) <= 0.2,
                   "max |recursion - brute force| " + num(worst) + ", truncation slope " + num(slope)};
  });

  criterion(7, "finite-N coefficients", 600, [] {
    const auto t = cluster::tonks_mayer_coefficients(1.0, 4);
    std::vector<Rational> b(4, Rational(0));
    for (int n = 1; n <= 3; ++n) b[n] = Rational(BigInt(n % 2 ? 1 : -1) * ipow(BigInt(n), n - 1), factorial(n));
    bool exact = true;
    double worst = 0;
    std::vector<double> Ns, res;
    for (int N = 2; N <= 10; ++N) {
      exact = exact && polymer::ck_finite_N_exact(N, b, 1) == Rational(2) * b[2] * Rational(N - 1, N);
      const double expect = 2 * t.at(2) * (1 - 1.0 / N);
      worst = std::max(worst, std::abs(polymer::ck_finite_N(N, t, 1) - expect));
      if (N >= 6) {
        Ns.push_back(N);
        res.push_back(polymer::ck_finite_N(N, t, 2) + 1.5);
      }
    }
    const double slope = oracle::loglog_slope(Ns, res);
    return Outcome{exact && worst <= 1e-14 && std::abs(slope + 1) <= 0.15,
                   std::string(exact ? "k=1 exact" : "k=1 MISMATCH") + ", k=2 residual slope " + num(slope)};
  });

  criterion(8, "series versus direct", 300, [] {
    const auto rod = PairPotential::hard_rod(1.0);
    std::vector<double> Ns, gaps;
    std::string detail;
    bool ok = true;
    for (int N : {50, 100, 200, 400}) {
      const auto r = canonical::compare_series_direct(rod, 1.0, N / 0.05, N, 8);
      ok = ok && r.pass && r.rho <= r.rho_star;
      Ns.push_back(N);
      gaps.push_back(r.gap);
      detail += "N=" + std::to_string(N) + " gap " + num(r.gap) + "/" + num(r.budget) + "; ";
    }
    const double slope = oracle::loglog_slope(Ns, gaps);
    ok = ok && std::abs(slope + 1) <= 0.1;

    // bound chain on every coefficient computed here
    bool bounds = true;
    const double a = radii::F_of_u(1.0).a_star;
    const double C_rod = c_beta(rod, 1.0).value;
    const auto m = cluster::MethodSpec::quadrature();
    const auto brod = cluster::mayer_coefficients(rod, 1.0, 6, cluster::VolumeSpec::infinite(), m);
    for (int n = 2; n <= 6; ++n) bounds = bounds && std::abs(brod.at(n)) <= cluster::penrose_bn_bound(n, 1.0, 0.0, C_rod) * (1 + 1e-9);
    const auto crod = series::virial_table_from_mayer(brod, 5);
    for (int k = 1; k <= 5; ++k) bounds = bounds && std::abs(crod.at(k)) <= radii::ck_bound(k, 1.0, 0.0, C_rod, a).ours;

    const auto hs = PairPotential::hard_sphere(1.0);
    const double C_hs = c_beta(hs, 1.0).value;
    const auto bhs = cluster::mayer_coefficients(hs, 1.0, 4, cluster::VolumeSpec::infinite(),
                                                 cluster::MethodSpec::monte_carlo(8, 400000));
    for (int n = 2; n <= 4; ++n) bounds = bounds && std::abs(bhs.at(n)) <= cluster::penrose_bn_bound(n, 1.0, 0.0, C_hs);
    const auto chs = series::virial_table_from_mayer(bhs, 3);
    for (int k = 1; k <= 3; ++k) bounds = bounds && std::abs(chs.at(k)) <= radii::ck_bound(k, 1.0, 0.0, C_hs, a).ours;
    detail += "gap slope " + num(slope) + ", bound chain " + (bounds ? "holds" : "VIOLATED");
    return Outcome{ok && bounds, detail};
  });

  return all_ok ? 0 : 1;
}
