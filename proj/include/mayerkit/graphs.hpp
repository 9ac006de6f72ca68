#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mayerkit::graphs {

// Vertices are labeled 1..n. Edges {i,j}, i<j, map to bit positions in
// lexicographic pair order: (1,2),(1,3),...,(1,n),(2,3),...
using EdgeMask = std::uint64_t;
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 9;         // 36 edge bits
inline constexpr int kMaxEnumVertices = 8;     // 2^28 masks
inline constexpr int kMaxTreeVertices = 9;     // 9^7 Pruefer codes

constexpr int edge_count(int n) { return n * (n - 1) / 2; }

// Bit position of edge {i,j} (1-based, any order, i != j).
int edge_index(int n, int i, int j);

class LabeledGraph {
 public:
  LabeledGraph(int n, EdgeMask mask);

  static LabeledGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static LabeledGraph complete(int n);
  static LabeledGraph path(int n);
  static LabeledGraph cycle(int n);

  int n() const { return n_; }
  EdgeMask mask() const { return mask_; }
  int num_edges() const;
  bool has_edge(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;

  // adjacency()[v] is the neighbor set of vertex v+1 as a 0-based bitmask.
  std::array<VertexMask, kMaxVertices> adjacency() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int n_;
  EdgeMask mask_;
};

bool is_connected(const LabeledGraph& g);
// Connected, at least three vertices, and no cut vertex.
bool is_two_connected(const LabeledGraph& g);

enum class GraphClass { all, connected, two_connected };

// Visits every qualifying graph on [n] in increasing edge-mask order.
// The callback returns void or bool (false stops the stream).
template <class Fn>
std::uint64_t for_each_graph(int n, GraphClass cls, Fn&& fn);

std::vector<LabeledGraph> enum_graphs(int n, GraphClass cls);
std::uint64_t count_graphs(int n, GraphClass cls);

struct RootedTree {
  int n = 1;
  int root = 1;
  std::vector<int> parent;  // 1-based; parent[root] == 0, parent[0] unused
  std::vector<int> gen;     // 1-based depth from the root

  EdgeMask mask() const;
  LabeledGraph as_graph() const { return LabeledGraph(n, mask()); }

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

// Roots a tree graph; throws DomainError if `tree` is not a spanning tree.
RootedTree root_tree(const LabeledGraph& tree, int root = 1);

// All n^(n-2) labeled trees on [n] (one tree for n = 1), decoded from
// Pruefer sequences in lexicographic order and rooted at `root`.
std::vector<RootedTree> enum_trees(int n, int root = 1);

// Sum over connected spanning subgraphs g of G of (-1)^|E_g|; 0 when G is
// disconnected, 1 for a single vertex.
std::int64_t ursell_value(const LabeledGraph& g);

// Generations are g-distances from the root; each non-root vertex hangs
// from its smallest-labeled neighbor in the previous generation.
RootedTree penrose_map(const LabeledGraph& g, int root = 1);

// Trees whose preimage under penrose_map, over the connected spanning
// subgraphs of G, is exactly the tree itself. Sorted by edge mask.
std::vector<RootedTree> penrose_trees(const LabeledGraph& g, int root = 1);

// Same set via the local rule: a spanning tree of G is a Penrose tree iff G
// has no edge joining two vertices of equal generation and no edge from a
// vertex to a previous-generation vertex with a larger label than its parent.
std::vector<RootedTree> penrose_trees_fast(const LabeledGraph& g, int root = 1);

struct SubsetTuple {
  int ground = 0;                    // N
  std::vector<VertexMask> subsets;   // bit e-1 set <=> e in R_i

  static SubsetTuple from_lists(int ground, const std::vector<std::vector<int>>& lists);
  void validate() const;
};

// Graph on [n] (n = tuple length) with {i,j} whenever R_i and R_j meet.
LabeledGraph intersection_graph(const SubsetTuple& t);
// Raw-mask variant with no validation, for hot loops.
EdgeMask intersection_mask(std::span<const VertexMask> subsets);

namespace detail {
bool connected_mask(int n, EdgeMask mask);
bool two_connected_mask(int n, EdgeMask mask);
EdgeMask penrose_map_mask(int n, EdgeMask mask, int root);
}  // namespace detail

}  // namespace mayerkit::graphs

#include "mayerkit/detail/graphs_impl.hpp"
