#include "mayerkit/verify.hpp"

#include "mayerkit/canonical.hpp"
#include "mayerkit/cli.hpp"
#include "mayerkit/cluster.hpp"
#include "mayerkit/errors.hpp"
#include "mayerkit/graphs.hpp"
#include "mayerkit/parallel.hpp"
#include "mayerkit/polymer.hpp"
#include "mayerkit/potentials.hpp"
#include "mayerkit/radii.hpp"
#include "mayerkit/series.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace mayerkit::verify {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Check {
  CheckInfo info;
  std::function<Outcome(const Options&)> fn;
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool close_rel(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

graphs::LabeledGraph random_connected(int n, ChunkRng& rng) {
  const int e = graphs::edge_count(n);
  while (true) {
    const graphs::EdgeMask m = rng.bits() & ((graphs::EdgeMask{1} << e) - 1);
    graphs::LabeledGraph g(n, m);
    if (graphs::is_connected(g)) return g;
  }
}

Outcome identity_on(const graphs::LabeledGraph& g) {
  const auto phi = graphs::ursell_value(g);
  const auto trees = graphs::penrose_trees(g);
  const std::int64_t sign = (g.n() % 2 == 1) ? 1 : -1;
  if (phi != sign * static_cast<std::int64_t>(trees.size())) {
    return {false, "mask " + std::to_string(g.mask()) + " on n=" + std::to_string(g.n()) + ": phi=" +
                       std::to_string(phi) + " trees=" + std::to_string(trees.size())};
  }
  return {true, ""};
}

std::vector<Check> registry() {
  std::vector<Check> c;
  auto add = [&](std::string suite, std::string name, std::string statement,
                 std::function<Outcome(const Options&)> fn) {
    c.push_back({{std::move(suite), std::move(name), std::move(statement)}, std::move(fn)});
  };

  // graphs ------------------------------------------------------------------
  add("graphs", "graphs.counts", "connected / two-connected counts match 1,1,4,38,728,26704 / 0,0,1,10,238,11368",
      [](const Options& o) -> Outcome {
        const std::uint64_t conn[] = {1, 1, 4, 38, 728, 26704};
        const std::uint64_t two[] = {0, 0, 1, 10, 238, 11368};
        for (int n = 1; n <= std::min(o.nmax, 6); ++n) {
          if (graphs::count_graphs(n, graphs::GraphClass::connected) != conn[n - 1] ||
              graphs::count_graphs(n, graphs::GraphClass::two_connected) != two[n - 1]) {
            return {false, "n=" + std::to_string(n)};
          }
        }
        return {true, "n <= " + std::to_string(std::min(o.nmax, 6))};
      });
  add("graphs", "graphs.cayley", "enum_trees(n) yields n^(n-2) trees, 2 <= n <= 8", [](const Options&) -> Outcome {
    for (int n = 2; n <= 8; ++n) {
      const auto t = graphs::enum_trees(n);
      std::uint64_t expect = 1;
      for (int i = 0; i < n - 2; ++i) expect *= n;
      if (t.size() != expect) return {false, "n=" + std::to_string(n)};
      for (const auto& tr : t)
        for (int v = 1; v <= n; ++v)
          if (v != tr.root && tr.gen[v] != tr.gen[tr.parent[v]] + 1) return {false, "generation"};
    }
    return {true, ""};
  });
  add("graphs", "graphs.intersection_graph", "R_i, R_j adjacent iff they meet", [](const Options&) -> Outcome {
    const auto g = graphs::intersection_graph(graphs::SubsetTuple::from_lists(5, {{1, 2}, {1, 2}, {2, 5}}));
    const auto p = graphs::intersection_graph(graphs::SubsetTuple::from_lists(4, {{1, 2}, {2, 3}, {3, 4}}));
    const auto e = graphs::intersection_graph(graphs::SubsetTuple::from_lists(6, {{1, 2}, {3, 4}, {5, 6}}));
    const bool ok = g == graphs::LabeledGraph::complete(3) && p == graphs::LabeledGraph::path(3) && e.mask() == 0;
    return {ok, ""};
  });

  // penrose -----------------------------------------------------------------
  add("penrose", "penrose.identity_exhaustive", "phi^T(G) = (-1)^(n-1) |penrose_trees(G)| for all connected G, n <= nmax",
      [](const Options& o) -> Outcome {
        std::uint64_t total = 0;
        for (int n = 1; n <= std::min(o.nmax, graphs::kMaxEnumVertices); ++n) {
          Outcome bad{true, ""};
          total += graphs::for_each_graph(n, graphs::GraphClass::connected, [&](const graphs::LabeledGraph& g) {
            Outcome r = identity_on(g);
            if (!r.pass) bad = r;
            return r.pass;
          });
          if (!bad.pass) return bad;
        }
        return {true, std::to_string(total) + " graphs"};
      });
  add("penrose", "penrose.identity_random_n7", "identity on random connected graphs with n = 7",
      [](const Options& o) -> Outcome {
        ChunkRng rng(o.seed, 7);
        const int count = o.quick ? 20 : 100;
        for (int i = 0; i < count; ++i) {
          Outcome r = identity_on(random_connected(7, rng));
          if (!r.pass) return r;
        }
        return {true, std::to_string(count) + " graphs"};
      });
  add("penrose", "penrose.root_independence", "|penrose_trees(G, r)| is the same for every root",
      [](const Options& o) -> Outcome {
        for (int n = 2; n <= std::min(o.nmax, 5); ++n) {
          bool ok = true;
          graphs::for_each_graph(n, graphs::GraphClass::connected, [&](const graphs::LabeledGraph& g) {
            const auto base = graphs::penrose_trees(g, 1).size();
            for (int r = 2; r <= n && ok; ++r) ok = graphs::penrose_trees(g, r).size() == base;
            return ok;
          });
          if (!ok) return {false, "n=" + std::to_string(n)};
        }
        return {true, ""};
      });
  add("penrose", "penrose.sign", "(-1)^(n-1) phi^T(G) > 0 for connected G", [](const Options& o) -> Outcome {
    for (int n = 1; n <= std::min(o.nmax, 6); ++n) {
      bool ok = true;
      graphs::for_each_graph(n, graphs::GraphClass::connected, [&](const graphs::LabeledGraph& g) {
        const auto phi = graphs::ursell_value(g);
        ok = (n % 2 == 1 ? phi : -phi) > 0;
        return ok;
      });
      if (!ok) return {false, "n=" + std::to_string(n)};
    }
    return {true, ""};
  });
  add("penrose", "penrose.map_idempotent_on_trees", "penrose_map(tau) = tau for every tree", [](const Options& o) -> Outcome {
    for (int n = 1; n <= std::min(o.nmax + 1, graphs::kMaxTreeVertices - 1); ++n)
      for (const auto& t : graphs::enum_trees(n))
        if (!(graphs::penrose_map(t.as_graph()) == t)) return {false, "n=" + std::to_string(n)};
    return {true, ""};
  });
  add("penrose", "penrose.fast_matches_bruteforce", "local rule gives the brute-force Penrose tree set",
      [](const Options& o) -> Outcome {
        for (int n = 1; n <= std::min(o.nmax, o.quick ? 5 : 6); ++n) {
          bool ok = true;
          graphs::for_each_graph(n, graphs::GraphClass::connected, [&](const graphs::LabeledGraph& g) {
            ok = graphs::penrose_trees(g) == graphs::penrose_trees_fast(g);
            return ok;
          });
          if (!ok) return {false, "n=" + std::to_string(n)};
        }
        return {true, ""};
      });

  // potentials --------------------------------------------------------------
  add("potentials", "potentials.c_beta_hard_core_constant", "C(beta) = 2 (rods), 4 pi / 3 (spheres) for all beta",
      [](const Options&) -> Outcome {
        for (double b : {0.1, 1.0, 10.0}) {
          if (!close_rel(c_beta(PairPotential::hard_rod(1), b).value, 2.0, 1e-12)) return {false, "rod"};
          if (!close_rel(c_beta(PairPotential::hard_sphere(1), b).value, 4 * std::numbers::pi / 3, 1e-12))
            return {false, "sphere"};
        }
        return {true, ""};
      });
  add("potentials", "potentials.c_beta_monotone_square_well", "C(beta) nondecreasing in beta for a square well",
      [](const Options&) -> Outcome {
        const auto p = PairPotential::square_well(1, 1.5, 1, 1);
        double prev = 0;
        for (double b = 0.05; b <= 5.0; b += 0.05) {
          const double v = c_beta(p, b).value;
          if (v < prev) return {false, "beta=" + num(b)};
          prev = v;
        }
        return {true, ""};
      });
  add("potentials", "potentials.f_bond_bounds_square_well", "-1 <= f <= e^(beta eps) - 1", [](const Options&) -> Outcome {
    const auto p = PairPotential::square_well(1, 1.5, 2, 2);
    for (double b : {0.3, 1.0, 2.0})
      for (double r = 0; r < 3; r += 0.01) {
        const double f = f_bond(p, b, r);
        if (f < -1 || f > std::expm1(2 * b) * (1 + 1e-15)) return {false, "r=" + num(r)};
      }
    return {true, ""};
  });
  add("potentials", "potentials.refinement_halves_error", "doubling the mesh at least halves the error estimate",
      [](const Options&) -> Outcome {
        const auto p = PairPotential::tabulated({0.5, 1.0, 1.5}, {2.0, 0.5, -0.3}, 2.0, 1.0);
        for (int panels = 1; panels <= 16; panels *= 2) {
          const double e1 = c_beta_fixed(p, 1.0, panels, 2).error;
          const double e2 = c_beta_fixed(p, 1.0, 2 * panels, 2).error;
          if (!(e2 <= 0.5 * e1)) return {false, "panels=" + std::to_string(panels)};
        }
        return {true, ""};
      });

  // cluster -----------------------------------------------------------------
  add("cluster", "cluster.tonks_bn", "quadrature b_n = (-1)^(n-1) n^(n-1)/n! within 1e-6, n <= 5",
      [](const Options&) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        const auto t = cluster::tonks_mayer_coefficients(1, 5);
        for (int n = 2; n <= 5; ++n) {
          const auto v = cluster::mayer_bn(rod, 1, n, cluster::VolumeSpec::infinite(), cluster::MethodSpec::quadrature());
          if (std::abs(v.value - t.at(n)) > 1e-6 * std::abs(t.at(n))) return {false, "n=" + std::to_string(n)};
        }
        return {true, ""};
      });
  add("cluster", "cluster.tonks_beta_k", "quadrature beta_k = -(k+1)/k within 1e-6, k <= 3", [](const Options&) -> Outcome {
    const auto rod = PairPotential::hard_rod(1);
    for (int k = 1; k <= 3; ++k) {
      const auto v = cluster::virial_bk_direct(rod, 1, k, cluster::MethodSpec::quadrature());
      if (std::abs(v.value + (k + 1.0) / k) > 1e-6) return {false, "k=" + std::to_string(k)};
    }
    return {true, ""};
  });
  add("cluster", "cluster.penrose_bound", "|b_n| <= Penrose bound + 3 error (rods, square well, spheres)",
      [](const Options& o) -> Outcome {
        struct Case {
          PairPotential p;
          double beta;
          int nmax;
          cluster::MethodSpec m;
        };
        const std::vector<Case> cases = {
            {PairPotential::hard_rod(1), 1, 6, cluster::MethodSpec::quadrature()},
            {PairPotential::square_well(1, 1.5, 1, 1), 1, 5, cluster::MethodSpec::quadrature()},
            {PairPotential::hard_sphere(1), 1, 4, cluster::MethodSpec::monte_carlo(o.seed, o.quick ? 50000 : 200000, o.workers)},
        };
        for (const auto& cs : cases) {
          const double C = c_beta(cs.p, cs.beta).value;
          for (int n = 2; n <= cs.nmax; ++n) {
            const auto v = cluster::mayer_bn(cs.p, cs.beta, n, cluster::VolumeSpec::infinite(), cs.m);
            const double bound = cluster::penrose_bn_bound(n, cs.beta, cs.p.stability_B(), C);
            if (std::abs(v.value) > bound + 3 * v.error) return {false, cs.p.name() + " n=" + std::to_string(n)};
          }
        }
        return {true, ""};
      });
  add("cluster", "cluster.finite_volume_drift", "b_3(L) -> b_3 with log-log slope -1 in L (rods)",
      [](const Options&) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        std::vector<double> Ls{10, 20, 40, 80}, res;
        for (double L : Ls) {
          const auto v = cluster::mayer_bn(rod, 1, 3, cluster::VolumeSpec::cube(L), cluster::MethodSpec::quadrature());
          res.push_back(std::abs(v.value - 1.5));
        }
        const double s = loglog_slope(Ls, res);
        return {std::abs(s + 1) <= 0.1, "slope " + num(s)};
      });
  add("cluster", "cluster.mc_reproducible", "Monte Carlo is bit-identical for equal seed across worker counts",
      [](const Options& o) -> Outcome {
        const auto hs = PairPotential::hard_sphere(1);
        const auto a = cluster::mayer_bn(hs, 1, 3, cluster::VolumeSpec::infinite(), cluster::MethodSpec::monte_carlo(o.seed, 20000, 1));
        const auto b = cluster::mayer_bn(hs, 1, 3, cluster::VolumeSpec::infinite(), cluster::MethodSpec::monte_carlo(o.seed, 20000, 3));
        const auto c = cluster::mayer_bn(hs, 1, 3, cluster::VolumeSpec::infinite(), cluster::MethodSpec::monte_carlo(o.seed + 1, 20000, 1));
        return {a.value == b.value && a.error == b.error && a.value != c.value, ""};
      });

  // series ------------------------------------------------------------------
  add("series", "series.formal_identity", "virial_from_mayer = inversion oracle for random b, k <= 6",
      [](const Options& o) -> Outcome {
        ChunkRng rng(o.seed, 11);
        for (int trial = 0; trial < 50; ++trial) {
          std::vector<double> b;
          for (int n = 2; n <= 7; ++n) b.push_back(2 * rng.uniform() - 1);
          const auto t = cluster::mayer_table_from_values(b);
          const auto inv = series::invert_mayer_oracle(t, 6);
          for (int k = 1; k <= 6; ++k) {
            const double a = series::virial_from_mayer(t, k);
            if (std::abs(a - inv.at(k)) > 1e-10 * std::max(1.0, std::abs(a))) return {false, "k=" + std::to_string(k)};
          }
        }
        return {true, "50 trials"};
      });
  add("series", "series.combi_exhaustive", "combinatorial identity holds for all valid tuples, n + k <= 12",
      [](const Options&) -> Outcome {
        long tuples = 0;
        for (int n = 2; n <= 11; ++n)
          for (int k = 1; n + k <= 12; ++k) {
            const int total = n + k - 1;
            std::vector<int> t(n);
            std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
              if (i == n) {
                if (left != 0) return true;
                ++tuples;
                const auto s = series::combi_identity_check(t, n, k);
                return s.lhs == s.rhs;
              }
              for (int v = (i == 0 ? 1 : 2); v <= left; ++v) {
                t[i] = v;
                if (!rec(i + 1, left - v)) return false;
              }
              return true;
            };
            if (!rec(0, total)) return {false, "n=" + std::to_string(n) + " k=" + std::to_string(k)};
          }
        return {true, std::to_string(tuples) + " tuples"};
      });
  add("series", "series.three_way_tonks", "transform, direct integral and inversion agree on rods, k <= 3",
      [](const Options&) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        const auto b = cluster::mayer_coefficients(rod, 1, 4, cluster::VolumeSpec::infinite(), cluster::MethodSpec::quadrature());
        const auto inv = series::invert_mayer_oracle(b, 3);
        for (int k = 1; k <= 3; ++k) {
          const double t = series::virial_from_mayer(b, k);
          const double d = cluster::virial_bk_direct(rod, 1, k, cluster::MethodSpec::quadrature()).value;
          if (std::abs(t - d) > 1e-6 || std::abs(t - inv.at(k)) > 1e-6) return {false, "k=" + std::to_string(k)};
        }
        return {true, ""};
      });
  add("series", "series.tail_honest", "closed-form Q stays within the tail bound as k_max grows",
      [](const Options&) -> Outcome {
        const auto b = cluster::tonks_mayer_coefficients(1, 14);
        const auto C = series::virial_table_from_mayer(b, 13);
        series::RadiusInputs r;
        r.c_beta = 2;
        for (double rho : {0.02, 0.05, 0.07}) {
          const double exact = rho * std::log1p(-rho);
          for (int k = 1; k <= 12; ++k) {
            const auto f = series::free_energy_series(rho, C, k, r);
            if (!f.certified || std::abs(f.Q - exact) > *f.tail_bound) return {false, "rho=" + num(rho) + " k=" + std::to_string(k)};
          }
        }
        return {true, ""};
      });

  // radii -------------------------------------------------------------------
  add("radii", "radii.g_equals_F", "g(u) = F(u) within 1e-10", [](const Options&) -> Outcome {
    for (double u : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 1e4}) {
      const double d = std::abs(radii::F_of_u(u).value - radii::g_of_u(u).value);
      if (d > 1e-10) return {false, "u=" + num(u) + " diff " + num(d)};
    }
    return {true, ""};
  });
  add("radii", "radii.monotone", "F increasing and a* decreasing on [1, 1e4]", [](const Options&) -> Outcome {
    double pf = -1, pa = 1e300;
    for (int i = 0; i <= 40; ++i) {
      const double u = std::pow(1e4, i / 40.0);
      const auto F = radii::F_of_u(u);
      if (!(F.value > pf) || !(F.a_star < pa) || F.grid_local_maxima != 1) return {false, "u=" + num(u)};
      pf = F.value;
      pa = F.a_star;
    }
    return {true, ""};
  });
  add("radii", "radii.K_star", "K* F = 1 within 1e-10; series check agrees within 1e-8 at u = 1",
      [](const Options&) -> Outcome {
        for (double u : {1.0, 2.0, 10.0}) {
          const auto K = radii::K_star(u);
          if (std::abs(K.closed_form * radii::F_of_u(u).value - 1) > 1e-10) return {false, "product u=" + num(u)};
          if (u == 1.0 && std::abs(K.closed_form - K.series_check) > 1e-8 * K.closed_form)
            return {false, "series " + num(K.series_check)};
        }
        return {true, ""};
      });
  add("radii", "radii.tonks_ck_bound", "|C_k| <= coefficient bound for rods, k <= 5", [](const Options&) -> Outcome {
    const auto b = cluster::tonks_mayer_coefficients(1, 6);
    const double a = radii::F_of_u(1).a_star;
    for (int k = 1; k <= 5; ++k) {
      const double ck = series::virial_from_mayer(b, k);
      if (std::abs(ck) > radii::ck_bound(k, 1, 0, 2, a).ours) return {false, "k=" + std::to_string(k)};
    }
    return {true, ""};
  });
  add("radii", "radii.rho_star_formula", "rho* = F(u)/(u C); Mayer radius = 1/(e^(2 beta B + 1) C)",
      [](const Options&) -> Outcome {
        const double r = radii::rho_star(0.5, 1.0, 3.0);
        const double u = std::exp(1.0);
        const double m = radii::mayer_radius(0.5, 1.0, 3.0);
        return {close_rel(r, radii::F_of_u(u).value / (u * 3), 1e-14) && close_rel(m, 1 / (std::exp(2.0) * 3), 1e-14), ""};
      });

  // polymer -----------------------------------------------------------------
  add("polymer", "polymer.xi_recursion_bruteforce", "Xi recursion = set-partition sum, N <= 7, random signed activities",
      [](const Options& o) -> Outcome {
        ChunkRng rng(o.seed, 21);
        for (int trial = 0; trial < 100; ++trial) {
          const int N = 1 + trial % 7;
          std::vector<Rational> z(N + 1, Rational(0));
          std::vector<double> zd(N + 1, 0.0);
          for (int m = 2; m <= N; ++m) {
            z[m] = Rational(static_cast<long>(rng.bits() % 41) - 20, 7);
            zd[m] = to_double(z[m]);
          }
          if (polymer::xi_recursion<Rational>(N, z) != polymer::xi_bruteforce<Rational>(N, z))
            return {false, "exact N=" + std::to_string(N)};
          const double r = polymer::xi_recursion<double>(N, zd), b = polymer::xi_bruteforce<double>(N, zd);
          if (std::abs(r - b) > 1e-9 * std::max(1.0, std::abs(b))) return {false, "float N=" + std::to_string(N)};
        }
        return {true, "100 profiles"};
      });
  add("polymer", "polymer.truncation_geometric", "where the criterion holds, truncation error of ln Xi falls geometrically",
      [](const Options&) -> Outcome {
        const int N = 4;
        const auto a = polymer::ActivityProfile::from_zeta(N, {{2, -0.01}, {3, 0.002}, {4, -0.0004}});
        if (!polymer::fp_check(a, 0.5).holds) return {false, "criterion fails on the test profile"};
        const double exact = std::log(polymer::xi_exact(N, a));
        const auto s = polymer::log_xi_ursell(N, a, 4);
        double prev = 1e300;
        for (double p : s.partial_sums) {
          const double r = std::abs(exact - p);
          if (!(r < 0.2 * prev)) return {false, "residual " + num(r)};
          prev = r;
        }
        return {true, ""};
      });
  add("polymer", "polymer.p_symmetric", "P(s) invariant under permutations of s", [](const Options& o) -> Outcome {
    const std::vector<std::vector<int>> shapes = {{2, 3}, {2, 4}, {3, 4}, {2, 2, 3}, {2, 3, 3}, {2, 2, 4}};
    for (int N = 4; N <= (o.quick ? 7 : 9); ++N)
      for (auto s : shapes) {
        std::sort(s.begin(), s.end());
        const Rational ref = polymer::p_exact(N, s);
        while (std::next_permutation(s.begin(), s.end()))
          if (polymer::p_exact(N, s) != ref) return {false, "N=" + std::to_string(N)};
      }
    return {true, ""};
  });
  add("polymer", "polymer.p_limit_residual", "P(s) -> limit with O(1/N) residual", [](const Options&) -> Outcome {
    for (const auto& s : {std::vector<int>{2, 2}, {2, 3}, {2, 2, 2}}) {
      std::vector<double> Ns, res;
      for (int N = 6; N <= 10; ++N) {
        Ns.push_back(N);
        res.push_back(std::abs(to_double(polymer::p_exact(N, s) - polymer::p_limit(s))));
      }
      const double sl = loglog_slope(Ns, res);
      if (std::abs(sl + 1) > 0.3) return {false, "slope " + num(sl)};
    }
    return {true, ""};
  });
  add("polymer", "polymer.ck_finite_N_convergence", "C_1(N) = 2 b_2 (1 - 1/N) exactly; C_2(N) -> -1.5 as 1/N",
      [](const Options&) -> Outcome {
        std::vector<Rational> b(5);
        for (int n = 1; n <= 4; ++n) b[n] = Rational(BigInt(n % 2 ? 1 : -1) * ipow(n, n - 1), factorial(n));
        for (int N = 2; N <= 10; ++N)
          if (polymer::ck_finite_N_exact(N, b, 1) != 2 * b[2] * (1 - Rational(1, N))) return {false, "k=1 N=" + std::to_string(N)};
        std::vector<double> Ns, res;
        for (int N = 6; N <= 10; ++N) {
          Ns.push_back(N);
          res.push_back(std::abs(to_double(polymer::ck_finite_N_exact(N, b, 2)) + 1.5));
        }
        const double sl = loglog_slope(Ns, res);
        return {std::abs(sl + 1) <= 0.15, "slope " + num(sl)};
      });

  // canonical ---------------------------------------------------------------
  add("canonical", "canonical.tonks_quadrature", "quadrature Ztilde = (1 - (N-1)/L)^N within 1e-6, N <= 4",
      [](const Options&) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        for (int N = 1; N <= 4; ++N) {
          const double q = canonical::ztilde_direct(rod, 1, 10, N, canonical::ZMethod::quadrature).ztilde;
          const double e = canonical::ztilde_direct(rod, 1, 10, N, canonical::ZMethod::tonks_closed).ztilde;
          if (std::abs(q - e) > 1e-6) return {false, "N=" + std::to_string(N)};
        }
        return {true, ""};
      });
  add("canonical", "canonical.mc_tonks", "Monte Carlo Ztilde within 3 standard errors of the closed form, N <= 10",
      [](const Options& o) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        auto mc = cluster::MethodSpec::monte_carlo(o.seed, o.quick ? 40000 : 200000, o.workers);
        for (int N = 2; N <= 10; N += (o.quick ? 4 : 1)) {
          const auto r = canonical::ztilde_direct(rod, 1, 30, N, canonical::ZMethod::monte_carlo, mc);
          const double e = std::pow(1 - (N - 1) / 30.0, N);
          if (std::abs(r.ztilde - e) > 3 * r.error) return {false, "N=" + std::to_string(N) + " z=" + num(r.ztilde)};
        }
        return {true, ""};
      });
  add("canonical", "canonical.series_converges", "Q_direct -> rho ln(1 - rho) at fixed rho", [](const Options&) -> Outcome {
    const auto rod = PairPotential::hard_rod(1);
    double prev = 1e300;
    for (int N : {50, 100, 200, 400, 800}) {
      const auto r = canonical::compare_series_direct(rod, 1, N / 0.05, N, 8);
      const double d = std::abs(r.Q_direct - 0.05 * std::log1p(-0.05));
      if (!(d < prev)) return {false, "N=" + std::to_string(N)};
      prev = d;
    }
    return {true, ""};
  });
  add("canonical", "canonical.compare_pass", "series vs direct within budget, gap ~ 1/N (rods, rho = 0.05)",
      [](const Options&) -> Outcome {
        const auto rod = PairPotential::hard_rod(1);
        std::vector<double> Ns, gaps;
        for (int N : {50, 100, 200, 400}) {
          const auto r = canonical::compare_series_direct(rod, 1, N / 0.05, N, 8);
          if (!r.pass) return {false, "N=" + std::to_string(N)};
          Ns.push_back(N);
          gaps.push_back(r.gap);
        }
        const double sl = loglog_slope(Ns, gaps);
        return {std::abs(sl + 1) <= 0.1, "slope " + num(sl)};
      });

  // cli ---------------------------------------------------------------------
  add("cli", "cli.determinism", "identical config and seed give identical output apart from the timestamp",
      [](const Options&) -> Outcome {
        const std::vector<std::string> args = {"mayer", "--potential", "hard_sphere", "--n", "3", "--method",
                                               "monte_carlo", "--seed", "5", "--samples", "20000", "--no-timestamp"};
        std::ostringstream a, b, e;
        auto with_workers = [&](std::vector<std::string> v, const char* w) {
          v.push_back("--workers");
          v.push_back(w);
          return v;
        };
        const int ra = cli::run(with_workers(args, "1"), a, e);
        const int rb = cli::run(with_workers(args, "2"), b, e);
        return {ra == 0 && rb == 0 && a.str() == b.str() && !a.str().empty(), e.str()};
      });
  return c;
}

}  // namespace

std::vector<std::string> suites() {
  return {"graphs", "penrose", "potentials", "cluster", "series", "radii", "polymer", "canonical", "cli"};
}

std::vector<CheckInfo> manifest(const std::string& suite) {
  const auto all = suites();
  if (suite != "all" && std::find(all.begin(), all.end(), suite) == all.end()) {
    throw InputError("suite: unknown value '" + suite + "'");
  }
  std::vector<CheckInfo> out;
  for (const auto& c : registry())
    if (suite == "all" || c.info.suite == suite) out.push_back(c.info);
  return out;
}

std::vector<CheckResult> run(const Options& opt) {
  manifest(opt.suite);
  if (opt.nmax < 1 || opt.nmax > graphs::kMaxEnumVertices) {
    throw InputError("nmax: must be in 1.." + std::to_string(graphs::kMaxEnumVertices));
  }
  std::vector<CheckResult> out;
  for (const auto& c : registry()) {
    if (opt.suite != "all" && c.info.suite != opt.suite) continue;
    CheckResult r;
    r.info = c.info;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.fn(opt);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mayerkit::verify
