#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "unitdim/canonical.hpp"
#include "unitdim/graph.hpp"

namespace unitdim {

inline constexpr int kDefaultMinorCap = 10;

// Deterministic order for isomorphism classes: size first, then the form.
inline bool canonical_less(const Graph& a, const std::string& fa, const Graph& b,
                           const std::string& fb) {
  return std::make_tuple(a.vertex_count(), a.edge_count(), std::cref(fa)) <
         std::make_tuple(b.vertex_count(), b.edge_count(), std::cref(fb));
}

inline std::vector<Graph> one_step_minors(const Graph& g) {
  std::vector<Graph> out;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) out.push_back(remove_vertex(g, v));
  for (auto [u, v] : g.edges()) {
    out.push_back(remove_edge(g, u, v));
    out.push_back(contract_edge(g, u, v));
  }
  return out;
}

// The minor closure as a DAG over isomorphism classes. Node 0 is the input.
// Deletion children are vertex and edge removals; contraction children are
// edge contractions. Both are indices into nodes.
struct MinorLattice {
  struct Node {
    Graph graph;  // canonically labeled representative
    std::string form;
    std::vector<int> deletion_children;
    std::vector<int> contraction_children;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> index;

  int find(const std::string& form) const {
    auto it = index.find(form);
    return it == index.end() ? -1 : it->second;
  }
};

namespace detail {
inline void check_minor_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw ResourceError("minor closure is capped at " + std::to_string(cap) + " vertices (got " +
                        std::to_string(g.vertex_count()) +
                        "); raise the cap with --cap if you can afford it");
}
}  // namespace detail

inline MinorLattice minor_lattice(const Graph& g, int cap = kDefaultMinorCap) {
  detail::check_minor_cap(g, cap);
  MinorLattice lat;
  auto intern = [&](const Graph& h) {
    std::string form = canonical_form(h);
    auto [it, inserted] = lat.index.emplace(form, static_cast<int>(lat.nodes.size()));
    if (inserted) lat.nodes.push_back({canonical_graph(h), std::move(form), {}, {}});
    return std::make_pair(it->second, inserted);
  };
  std::deque<int> queue{intern(g).first};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Graph cur = lat.nodes[id].graph;
    std::vector<int> del, con;
    auto visit = [&](const Graph& h, std::vector<int>& into) {
      auto [child, fresh] = intern(h);
      into.push_back(child);
      if (fresh) queue.push_back(child);
    };
    for (int v = 0; v < cur.vertex_count(); ++v) visit(remove_vertex(cur, v), del);
    for (auto [u, v] : cur.edges()) {
      visit(remove_edge(cur, u, v), del);
      visit(contract_edge(cur, u, v), con);
    }
    for (auto* list : {&del, &con}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
    lat.nodes[id].deletion_children = std::move(del);
    lat.nodes[id].contraction_children = std::move(con);
  }
  return lat;
}

// All minors of g up to isomorphism, in canonical order. proper_only drops g
// itself; include_empty keeps the 0-vertex graph.
inline std::vector<Graph> minor_closure(const Graph& g, bool proper_only, bool include_empty = true,
                                        int cap = kDefaultMinorCap) {
  const MinorLattice lat = minor_lattice(g, cap);
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(lat.nodes.size()); ++i) {
    if (proper_only && i == 0) continue;
    if (!include_empty && lat.nodes[i].graph.vertex_count() == 0) continue;
    ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return canonical_less(lat.nodes[a].graph, lat.nodes[a].form, lat.nodes[b].graph,
                          lat.nodes[b].form);
  });
  std::vector<Graph> out;
  for (int i : ids) out.push_back(lat.nodes[i].graph);
  return out;
}

// Every graph on n vertices up to isomorphism, canonically labeled and sorted.
// Built level by level: each class with m+1 edges arises from one with m edges.
inline std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw ParameterError("all_graphs requires n >= 0");
  detail::check_canonical_cap(Graph(n));
  std::vector<std::pair<std::string, Graph>> level{{canonical_form(Graph(n)), Graph(n)}};
  std::vector<std::pair<std::string, Graph>> all = level;
  while (!level.empty()) {
    std::unordered_map<std::string, Graph> next;
    for (const auto& [form, g] : level)
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
          if (g.adjacent(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          std::string f = canonical_form(h);
          if (!next.count(f)) next.emplace(std::move(f), canonical_graph(h));
        }
    level.assign(next.begin(), next.end());
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.second, a.first, b.second, b.first);
  });
  std::vector<Graph> out;
  for (auto& [f, g] : all) out.push_back(std::move(g));
  return out;
}

}  // namespace unitdim
