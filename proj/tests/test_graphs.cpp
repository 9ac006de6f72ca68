#include "mayerkit/errors.hpp"
#include "mayerkit/graphs.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace mayerkit;
using namespace mayerkit::graphs;

namespace {

std::vector<oracle::Edge> zero_based(const LabeledGraph& g) {
  std::vector<oracle::Edge> out;
  for (auto [i, j] : g.edges()) out.emplace_back(i - 1, j - 1);
  return out;
}

}  // namespace

TEST_CASE("edge index is lexicographic") {
  CHECK(edge_index(4, 1, 2) == 0);
  CHECK(edge_index(4, 1, 4) == 2);
  CHECK(edge_index(4, 2, 3) == 3);
  CHECK(edge_index(4, 4, 3) == 5);
  CHECK_THROWS_AS(edge_index(4, 2, 2), InputError);
}

TEST_CASE("graph counts match the known sequences") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(count_graphs(n, GraphClass::all) == (std::uint64_t{1} << edge_count(n)));
    CHECK(count_graphs(n, GraphClass::connected) == oracle::kConnectedCounts[n]);
    if (n >= 3) CHECK(count_graphs(n, GraphClass::two_connected) == oracle::kTwoConnectedCounts[n]);
  }
  CHECK(count_graphs(7, GraphClass::connected) == oracle::kConnectedCounts[7]);
  CHECK(count_graphs(2, GraphClass::two_connected) == 0);
}

TEST_CASE("enum_graphs is sorted and agrees with the predicates") {
  const auto gs = enum_graphs(5, GraphClass::connected);
  for (std::size_t i = 1; i < gs.size(); ++i) CHECK(gs[i - 1].mask() < gs[i].mask());
  for (const auto& g : gs) CHECK(oracle::connected(5, zero_based(g)));
  CHECK(is_two_connected(LabeledGraph::cycle(5)));
  CHECK_FALSE(is_two_connected(LabeledGraph::path(5)));
  CHECK(is_connected(LabeledGraph::path(6)));
  CHECK_FALSE(is_connected(LabeledGraph(4, 1)));
}

TEST_CASE("Cayley count and distinct trees") {
  for (int n = 1; n <= 7; ++n) {
    const auto ts = enum_trees(n);
    CHECK(ts.size() == static_cast<std::size_t>(std::pow(n, std::max(n - 2, 0))));
    std::set<EdgeMask> masks;
    for (const auto& t : ts) {
      masks.insert(t.mask());
      CHECK(t.as_graph().num_edges() == n - 1);
      CHECK(is_connected(t.as_graph()));
      for (int v = 1; v <= n; ++v)
        if (v != t.root) CHECK(t.gen[v] == t.gen[t.parent[v]] + 1);
    }
    CHECK(masks.size() == ts.size());
  }
}

TEST_CASE("ursell_value matches a brute force sum") {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, GraphClass::all, [&](const LabeledGraph& g) {
      CHECK(ursell_value(g) == oracle::ursell(n, zero_based(g)));
    });
  // phi^T(K_n) = (-1)^{n-1} (n-1)!
  CHECK(ursell_value(LabeledGraph::complete(6)) == -120);
  CHECK(ursell_value(LabeledGraph::cycle(6)) == -5);
}

TEST_CASE("penrose map") {
  const auto g = LabeledGraph::complete(4);
  const auto t = penrose_map(g);
  CHECK(t.root == 1);
  for (int v = 2; v <= 4; ++v) CHECK(t.parent[v] == 1);
  const auto c = penrose_map(LabeledGraph::cycle(5));  // 1-2-3-4-5-1
  CHECK(c.parent[2] == 1);
  CHECK(c.parent[5] == 1);
  CHECK(c.parent[3] == 2);
  CHECK(c.parent[4] == 5);
  CHECK_THROWS_AS(penrose_map(LabeledGraph(3, 1)), DomainError);
}

TEST_CASE("penrose identity, exhaustive to n = 5 here") {
  for (int n = 1; n <= 5; ++n)
    for_each_graph(n, GraphClass::connected, [&](const LabeledGraph& g) {
      const auto trees = penrose_trees(g);
      const long long sign = (n - 1) % 2 ? -1 : 1;
      CHECK(oracle::ursell(n, zero_based(g)) == sign * static_cast<long long>(trees.size()));
      CHECK(trees == penrose_trees_fast(g));
    });
}

TEST_CASE("penrose identity on random n = 7 graphs, any root") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto edges = oracle::random_connected(7, rng, 0.25);
    std::vector<std::pair<int, int>> one_based;
    for (auto [a, b] : edges) one_based.emplace_back(a + 1, b + 1);
    const auto g = LabeledGraph::from_edges(7, one_based);
    const long long phi = oracle::ursell(7, edges);
    for (int root : {1, 4, 7}) CHECK(static_cast<long long>(penrose_trees_fast(g, root).size()) == phi);
  }
}

TEST_CASE("intersection graph") {
  const auto t = SubsetTuple::from_lists(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6, 1}});
  const auto g = intersection_graph(t);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(1, 4));
  CHECK(g.has_edge(3, 4));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK_THROWS_AS(SubsetTuple::from_lists(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(SubsetTuple::from_lists(3, {{}}), InputError);
}

TEST_CASE("capacity limits") {
  CHECK_THROWS_AS(count_graphs(kMaxEnumVertices + 1, GraphClass::all), CapacityError);
  CHECK_THROWS_AS(enum_trees(kMaxTreeVertices + 1), CapacityError);
}
