#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitdim/error.hpp"

namespace unitdim {

using Edge = std::pair<int, int>;

// Finite simple undirected graph on vertices 0..n-1.
//
// Adjacency is kept as one 64-bit row per vertex, so graphs are limited to 64
// vertices; every quantity this library decides is far below that. The edge
// list is always sorted with u < v, which makes operator== a labeled-graph
// comparison (use canonical_form for isomorphism).
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : rows_(check_size(n), 0) {}

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph from_rows(std::vector<std::uint64_t> rows) {
    Graph g(static_cast<int>(rows.size()));
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rows[u] >> v & 1U) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return static_cast<int>(rows_.size()); }
  int edge_count() const { return edge_count_; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u) {
      std::uint64_t higher = rows_[u] & ~low_mask(u + 1);
      while (higher) {
        int v = std::countr_zero(higher);
        out.emplace_back(u, v);
        higher &= higher - 1;
      }
    }
    return out;
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u] >> v & 1U;
  }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return rows_[v];
  }

  const std::vector<std::uint64_t>& rows() const { return rows_; }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  std::uint64_t all_vertices() const { return low_mask(vertex_count()); }

  // Adds edge {u,v}; a no-op if present. Self-loops are rejected.
  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw StructuralError("self-loop on vertex " + std::to_string(u));
    if (rows_[u] >> v & 1U) return;
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
    ++edge_count_;
  }

  void remove_edge(int u, int v) {
    if (!adjacent(u, v))
      throw StructuralError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") not present");
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
    --edge_count_;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

  static constexpr std::uint64_t low_mask(int k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }

 private:
  static int check_size(int n) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (n > kMaxVertices)
      throw ResourceError("graphs are limited to " + std::to_string(kMaxVertices) +
                          " vertices");
    return n;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw StructuralError("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(vertex_count()) + ")");
  }

  std::vector<std::uint64_t> rows_;
  int edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// Named constructors

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("C:n requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

// Path on n vertices (n-1 edges).
inline Graph path_graph(int n) {
  if (n < 1) throw ParameterError("P:n requires n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.vertex_count();
  Graph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + na, v + na);
  return g;
}

// Sum G+H: disjoint copies plus every edge between them.
inline Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  const int na = a.vertex_count();
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
  return g;
}

// Left fold of join over a list; the empty list yields the null graph.
inline Graph join_all(std::span<const Graph> parts) {
  Graph acc;
  for (const auto& p : parts) acc = join(acc, p);
  return acc;
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

// Subgraph induced by the vertices in `keep`, relabeled in increasing order.
inline Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
  std::vector<int> index(g.vertex_count(), -1);
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep >> v & 1U) index[v] = k++;
  Graph h(k);
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0) h.add_edge(index[u], index[v]);
  return h;
}

inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) mask |= std::uint64_t{1} << v;
  return induced_subgraph(g, mask);
}

// Relabels so that old vertex perm[i] becomes new vertex i.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.vertex_count();
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(inverse[u], inverse[v]);
  return h;
}

// ---------------------------------------------------------------------------
// Minor operations

enum class MinorOpKind { vertex_removal, edge_removal, edge_contraction };

struct MinorOp {
  MinorOpKind kind;
  int a = 0;
  int b = -1;  // unused for vertex removal

  static MinorOp remove_vertex(int v) { return {MinorOpKind::vertex_removal, v, -1}; }
  static MinorOp remove_edge(int u, int v) { return {MinorOpKind::edge_removal, u, v}; }
  static MinorOp contract(int u, int v) { return {MinorOpKind::edge_contraction, u, v}; }
};

inline Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw StructuralError("vertex " + std::to_string(v) + " not present");
  return induced_subgraph(g, g.all_vertices() & ~(std::uint64_t{1} << v));
}

inline Graph remove_edge(const Graph& g, int u, int v) {
  Graph h = g;
  h.remove_edge(u, v);
  return h;
}

// Merges v into u; the merged vertex sees the union of both neighborhoods.
// Loops and parallel edges vanish because adjacency is a set.
inline Graph contract_edge(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v)
    throw StructuralError("contraction endpoints out of range");
  if (!g.adjacent(u, v))
    throw StructuralError("cannot contract non-adjacent vertices " + std::to_string(u) +
                          " and " + std::to_string(v));
  Graph h = g;
  std::uint64_t merged = g.neighbors(v) & ~(std::uint64_t{1} << u);
  while (merged) {
    int w = std::countr_zero(merged);
    h.add_edge(u, w);
    merged &= merged - 1;
  }
  return remove_vertex(h, v);
}

inline Graph apply_minor_op(const Graph& g, const MinorOp& op) {
  switch (op.kind) {
    case MinorOpKind::vertex_removal:
      return remove_vertex(g, op.a);
    case MinorOpKind::edge_removal:
      if (op.a < 0 || op.b < 0 || op.a >= g.vertex_count() || op.b >= g.vertex_count() ||
          op.a == op.b || !g.adjacent(op.a, op.b))
        throw StructuralError("edge (" + std::to_string(op.a) + "," + std::to_string(op.b) +
                              ") not present");
      return remove_edge(g, op.a, op.b);
    case MinorOpKind::edge_contraction:
      return contract_edge(g, op.a, op.b);
  }
  throw StructuralError("unknown minor operation");
}

// ---------------------------------------------------------------------------
// Structure queries

inline std::vector<std::uint64_t> connected_components(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t unseen = g.all_vertices();
  while (unseen) {
    std::uint64_t comp = unseen & (~unseen + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      std::uint64_t fresh = g.neighbors(v) & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// Factors G_1..G_k with g = G_1 + ... + G_k, each join-indecomposable. They are
// the subgraphs induced on the connected components of the complement, listed
// in order of their smallest vertex.
inline std::vector<Graph> join_decompose(const Graph& g) {
  std::vector<Graph> factors;
  for (std::uint64_t comp : connected_components(complement(g)))
    factors.push_back(induced_subgraph(g, comp));
  return factors;
}

// Vertex masks of the join factors, aligned with join_decompose.
inline std::vector<std::uint64_t> join_factor_masks(const Graph& g) {
  return connected_components(complement(g));
}

inline bool is_complete(const Graph& g) {
  const long n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

inline bool is_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

// A forest has |E| = |V| - #components.
inline bool has_cycle(const Graph& g) {
  return g.edge_count() >
         g.vertex_count() - static_cast<int>(connected_components(g).size());
}

inline std::uint64_t universal_vertices(const Graph& g) {
  std::uint64_t out = 0;
  const std::uint64_t all = g.all_vertices();
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((g.neighbors(v) | std::uint64_t{1} << v) == all) out |= std::uint64_t{1} << v;
  return out;
}

namespace detail {
inline void max_clique_rec(const Graph& g, std::uint64_t candidates, int size, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  if (size + std::popcount(candidates) <= best) return;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    max_clique_rec(g, candidates & g.neighbors(v), size + 1, best);
  }
}
}  // namespace detail

// Exhaustive branch-and-bound clique number.
inline int clique_number(const Graph& g) {
  int best = 0;
  detail::max_clique_rec(g, g.all_vertices(), 0, best);
  return best;
}

inline std::string to_string(const Graph& g) {
  std::string s = std::to_string(g.vertex_count()) + ":";
  for (auto [u, v] : g.edges()) s += " " + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

}  // namespace unitdim
