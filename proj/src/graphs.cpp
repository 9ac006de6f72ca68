#include "mayerkit/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace mayerkit::graphs {

namespace {

struct EdgeTable {
  std::array<std::pair<int, int>, edge_count(kMaxVertices)> ends{};  // 0-based
  int size = 0;
};

// Per-n table of edge endpoints in bit order.
const EdgeTable& edge_table(int n) {
  static const auto tables = [] {
    std::array<EdgeTable, kMaxVertices + 1> t{};
    for (int m = 1; m <= kMaxVertices; ++m) {
      int k = 0;
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) t[m].ends[k++] = {i, j};
      t[m].size = k;
    }
    return t;
  }();
  return tables[n];
}

std::array<VertexMask, kMaxVertices> adjacency_of(int n, EdgeMask mask) {
  std::array<VertexMask, kMaxVertices> adj{};
  const auto& tab = edge_table(n);
  while (mask) {
    const int b = std::countr_zero(mask);
    mask &= mask - 1;
    const auto [i, j] = tab.ends[b];
    adj[i] |= VertexMask{1} << j;
    adj[j] |= VertexMask{1} << i;
  }
  return adj;
}

// Vertices reachable from `start` inside `allowed`.
VertexMask reach(const std::array<VertexMask, kMaxVertices>& adj, VertexMask allowed, int start) {
  VertexMask seen = VertexMask{1} << start;
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adj[v];
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

void check_n(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw CapacityError("graphs support 1 <= n <= " + std::to_string(kMaxVertices) + ", got " +
                        std::to_string(n));
  }
}

void check_vertex(int n, int v, const char* what) {
  if (v < 1 || v > n) {
    throw InputError(std::string(what) + " " + std::to_string(v) + " outside [1," +
                     std::to_string(n) + "]");
  }
}

RootedTree tree_from_parents(int n, int root, const std::array<int, kMaxVertices>& parent0,
                             const std::array<int, kMaxVertices>& depth) {
  RootedTree t;
  t.n = n;
  t.root = root;
  t.parent.assign(n + 1, 0);
  t.gen.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    t.parent[v + 1] = parent0[v] < 0 ? 0 : parent0[v] + 1;
    t.gen[v + 1] = depth[v];
  }
  return t;
}

// BFS layers of a connected graph; returns false if some vertex is unreachable.
bool bfs_layers(int n, const std::array<VertexMask, kMaxVertices>& adj, int root0,
                std::array<int, kMaxVertices>& depth, std::array<VertexMask, kMaxVertices + 1>& layer,
                int& layers) {
  const VertexMask all = (VertexMask{1} << n) - 1;
  VertexMask seen = VertexMask{1} << root0;
  layer[0] = seen;
  depth[root0] = 0;
  layers = 1;
  while (true) {
    VertexMask next = 0;
    VertexMask f = layer[layers - 1];
    while (f) {
      const int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj[v];
    }
    next &= all & ~seen;
    if (!next) break;
    VertexMask tmp = next;
    while (tmp) {
      const int v = std::countr_zero(tmp);
      tmp &= tmp - 1;
      depth[v] = layers;
    }
    seen |= next;
    layer[layers++] = next;
  }
  return seen == all;
}

}  // namespace

int edge_index(int n, int i, int j) {
  check_n(n);
  check_vertex(n, i, "vertex");
  check_vertex(n, j, "vertex");
  if (i == j) throw InputError("self-loop {" + std::to_string(i) + "," + std::to_string(i) + "}");
  if (i > j) std::swap(i, j);
  const int a = i - 1, b = j - 1;
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

LabeledGraph::LabeledGraph(int n, EdgeMask mask) : n_(n), mask_(mask) {
  check_n(n);
  const int e = edge_count(n);
  if (e < 64 && (mask >> e) != 0) throw InputError("edge mask has bits beyond the vertex set");
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  check_n(n);
  EdgeMask m = 0;
  for (const auto& [i, j] : edges) {
    const EdgeMask bit = EdgeMask{1} << edge_index(n, i, j);
    if (m & bit) {
      throw InputError("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    m |= bit;
  }
  return LabeledGraph(n, m);
}

LabeledGraph LabeledGraph::complete(int n) {
  check_n(n);
  const int e = edge_count(n);
  return LabeledGraph(n, e == 64 ? ~EdgeMask{0} : (EdgeMask{1} << e) - 1);
}

LabeledGraph LabeledGraph::path(int n) {
  check_n(n);
  EdgeMask m = 0;
  for (int i = 1; i < n; ++i) m |= EdgeMask{1} << edge_index(n, i, i + 1);
  return LabeledGraph(n, m);
}

LabeledGraph LabeledGraph::cycle(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  LabeledGraph p = path(n);
  return LabeledGraph(n, p.mask() | (EdgeMask{1} << edge_index(n, 1, n)));
}

int LabeledGraph::num_edges() const { return std::popcount(mask_); }

bool LabeledGraph::has_edge(int i, int j) const {
  return (mask_ >> edge_index(n_, i, j)) & 1U;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  const auto& tab = edge_table(n_);
  for (EdgeMask m = mask_; m; m &= m - 1) {
    const auto [i, j] = tab.ends[std::countr_zero(m)];
    out.emplace_back(i + 1, j + 1);
  }
  return out;
}

std::array<VertexMask, kMaxVertices> LabeledGraph::adjacency() const {
  return adjacency_of(n_, mask_);
}

namespace detail {

bool connected_mask(int n, EdgeMask mask) {
  if (n == 1) return true;
  const auto adj = adjacency_of(n, mask);
  const VertexMask all = (VertexMask{1} << n) - 1;
  return reach(adj, all, 0) == all;
}

bool two_connected_mask(int n, EdgeMask mask) {
  if (n < 3) return false;
  const auto adj = adjacency_of(n, mask);
  const VertexMask all = (VertexMask{1} << n) - 1;
  if (reach(adj, all, 0) != all) return false;
  for (int v = 0; v < n; ++v) {
    const VertexMask rest = all & ~(VertexMask{1} << v);
    if (reach(adj, rest, std::countr_zero(rest)) != rest) return false;
  }
  return true;
}

EdgeMask penrose_map_mask(int n, EdgeMask mask, int root) {
  const auto adj = adjacency_of(n, mask);
  std::array<int, kMaxVertices> depth{};
  std::array<VertexMask, kMaxVertices + 1> layer{};
  int layers = 0;
  if (!bfs_layers(n, adj, root - 1, depth, layer, layers)) {
    throw DomainError("penrose_map needs a connected spanning graph");
  }
  EdgeMask tree = 0;
  for (int d = 1; d < layers; ++d) {
    for (VertexMask l = layer[d]; l; l &= l - 1) {
      const int v = std::countr_zero(l);
      const int p = std::countr_zero(adj[v] & layer[d - 1]);
      tree |= EdgeMask{1} << edge_index(n, v + 1, p + 1);
    }
  }
  return tree;
}

}  // namespace detail

bool is_connected(const LabeledGraph& g) { return detail::connected_mask(g.n(), g.mask()); }

bool is_two_connected(const LabeledGraph& g) {
  return detail::two_connected_mask(g.n(), g.mask());
}

std::vector<LabeledGraph> enum_graphs(int n, GraphClass cls) {
  std::vector<LabeledGraph> out;
  for_each_graph(n, cls, [&](const LabeledGraph& g) { out.push_back(g); });
  return out;
}

std::uint64_t count_graphs(int n, GraphClass cls) {
  return for_each_graph(n, cls, [](const LabeledGraph&) {});
}

EdgeMask RootedTree::mask() const {
  EdgeMask m = 0;
  for (int v = 1; v <= n; ++v)
    if (v != root) m |= EdgeMask{1} << edge_index(n, v, parent[v]);
  return m;
}

RootedTree root_tree(const LabeledGraph& tree, int root) {
  const int n = tree.n();
  check_vertex(n, root, "root");
  if (tree.num_edges() != n - 1) throw DomainError("not a tree: wrong edge count");
  const auto adj = tree.adjacency();
  std::array<int, kMaxVertices> depth{};
  std::array<VertexMask, kMaxVertices + 1> layer{};
  int layers = 0;
  if (!bfs_layers(n, adj, root - 1, depth, layer, layers)) {
    throw DomainError("not a tree: disconnected");
  }
  std::array<int, kMaxVertices> parent0{};
  parent0[root - 1] = -1;
  for (int d = 1; d < layers; ++d)
    for (VertexMask l = layer[d]; l; l &= l - 1) {
      const int v = std::countr_zero(l);
      parent0[v] = std::countr_zero(adj[v] & layer[d - 1]);
    }
  return tree_from_parents(n, root, parent0, depth);
}

std::vector<RootedTree> enum_trees(int n, int root) {
  if (n < 1 || n > kMaxTreeVertices) {
    throw CapacityError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeVertices));
  }
  check_vertex(n, root, "root");
  std::vector<RootedTree> out;
  if (n == 1) {
    out.push_back(RootedTree{1, 1, {0, 0}, {0, 0}});
    return out;
  }
  if (n == 2) {
    out.push_back(root_tree(LabeledGraph::path(2), root));
    return out;
  }
  const int len = n - 2;
  std::vector<int> code(len, 0);
  std::vector<int> degree(n);
  while (true) {
    // Standard O(n^2) Pruefer decoding; n <= 9.
    std::fill(degree.begin(), degree.end(), 1);
    for (int c : code) ++degree[c];
    EdgeMask m = 0;
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      m |= EdgeMask{1} << edge_index(n, leaf + 1, c + 1);
      --degree[leaf];
      --degree[c];
    }
    int u = -1, w = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) (u < 0 ? u : w) = v;
    m |= EdgeMask{1} << edge_index(n, u + 1, w + 1);
    out.push_back(root_tree(LabeledGraph(n, m), root));

    int pos = len - 1;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  return out;
}

std::int64_t ursell_value(const LabeledGraph& g) {
  const int n = g.n();
  if (n == 1) return 1;
  if (!is_connected(g)) return 0;
  const EdgeMask full = g.mask();
  std::int64_t sum = 0;
  // All submasks of `full`, including `full` itself and excluding 0 (n >= 2).
  for (EdgeMask sub = full; sub; sub = (sub - 1) & full) {
    if (detail::connected_mask(n, sub)) sum += (std::popcount(sub) & 1) ? -1 : 1;
  }
  return sum;
}

RootedTree penrose_map(const LabeledGraph& g, int root) {
  check_vertex(g.n(), root, "root");
  return root_tree(LabeledGraph(g.n(), detail::penrose_map_mask(g.n(), g.mask(), root)), root);
}

std::vector<RootedTree> penrose_trees(const LabeledGraph& g, int root) {
  const int n = g.n();
  check_vertex(n, root, "root");
  if (!is_connected(g)) throw DomainError("penrose_trees needs a connected graph");
  if (n == 1) return {root_tree(g, root)};
  std::unordered_map<EdgeMask, int> preimage;
  const EdgeMask full = g.mask();
  for (EdgeMask sub = full; sub; sub = (sub - 1) & full) {
    if (!detail::connected_mask(n, sub)) continue;
    ++preimage[detail::penrose_map_mask(n, sub, root)];
  }
  std::vector<EdgeMask> singles;
  for (const auto& [tree, count] : preimage)
    if (count == 1) singles.push_back(tree);
  std::sort(singles.begin(), singles.end());
  std::vector<RootedTree> out;
  out.reserve(singles.size());
  for (EdgeMask t : singles) out.push_back(root_tree(LabeledGraph(n, t), root));
  return out;
}

std::vector<RootedTree> penrose_trees_fast(const LabeledGraph& g, int root) {
  const int n = g.n();
  check_vertex(n, root, "root");
  if (!is_connected(g)) throw DomainError("penrose_trees needs a connected graph");
  std::vector<RootedTree> out;
  for (auto& t : enum_trees(n, root)) {
    const EdgeMask tm = t.mask();
    if ((tm & ~g.mask()) != 0) continue;
    bool ok = true;
    for (const auto& [i, j] : LabeledGraph(n, g.mask() & ~tm).edges()) {
      const int gi = t.gen[i], gj = t.gen[j];
      if (gi == gj) { ok = false; break; }
      const int lo = gi < gj ? i : j;   // previous generation
      const int hi = gi < gj ? j : i;
      if (std::abs(gi - gj) == 1 && lo > t.parent[hi]) { ok = false; break; }
    }
    if (ok) out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.mask() < b.mask(); });
  return out;
}

SubsetTuple SubsetTuple::from_lists(int ground, const std::vector<std::vector<int>>& lists) {
  SubsetTuple t;
  t.ground = ground;
  for (const auto& l : lists) {
    VertexMask m = 0;
    for (int e : l) {
      if (e < 1 || e > ground) {
        throw InputError("subset element " + std::to_string(e) + " outside [1," +
                         std::to_string(ground) + "]");
      }
      m |= VertexMask{1} << (e - 1);
    }
    t.subsets.push_back(m);
  }
  t.validate();
  return t;
}

void SubsetTuple::validate() const {
  if (ground < 1 || ground > 32) throw CapacityError("subset ground set must have 1..32 elements");
  if (subsets.empty() || static_cast<int>(subsets.size()) > kMaxVertices) {
    throw CapacityError("subset tuple length must be 1.." + std::to_string(kMaxVertices));
  }
  const VertexMask all = ground == 32 ? ~VertexMask{0} : (VertexMask{1} << ground) - 1;
  for (VertexMask s : subsets) {
    if (s & ~all) throw InputError("subset has elements outside the ground set");
    if (std::popcount(s) < 2) throw InputError("every subset needs at least two elements");
  }
}

EdgeMask intersection_mask(std::span<const VertexMask> subsets) {
  const int n = static_cast<int>(subsets.size());
  EdgeMask m = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (subsets[i] & subsets[j]) m |= EdgeMask{1} << bit;
  return m;
}

LabeledGraph intersection_graph(const SubsetTuple& t) {
  t.validate();
  return LabeledGraph(static_cast<int>(t.subsets.size()), intersection_mask(t.subsets));
}

}  // namespace mayerkit::graphs
