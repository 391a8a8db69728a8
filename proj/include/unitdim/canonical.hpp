#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "unitdim/graph.hpp"

namespace unitdim {

inline constexpr int kCanonicalCap = 12;

namespace detail {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement: split cells by (own cell, neighbour counts per cell)
// until stable. Cells are ordered by signature, never by label, so the result
// commutes with relabelling.
inline void refine(const Graph& g, Partition& cells) {
  const int n = g.vertex_count();
  std::vector<int> cell_of(n);
  for (;;) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Partition next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sig;
      sig.reserve(cell.size());
      for (int v : cell) {
        std::vector<int> counts(cells.size(), 0);
        std::uint64_t row = g.neighbors(v);
        while (row) {
          ++counts[cell_of[std::countr_zero(row)]];
          row &= row - 1;
        }
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i == 0 || sig[i].first != sig[i - 1].first) next.emplace_back();
        next.back().push_back(sig[i].second);
      }
    }
    const bool stable = next.size() == cells.size();
    cells = std::move(next);
    if (stable) return;
  }
}

// Individualization-refinement: the canonical labeling is the one, among the
// leaves of the search tree, whose column-wise upper-triangle adjacency string
// is smallest. Interchangeable twins in a target cell are tried once.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  void run() {
    if (n_ == 0) return;
    Partition start(1);
    for (int v = 0; v < n_; ++v) start[0].push_back(v);
    refine(g_, start);
    dfs(std::move(start));
  }

  const std::vector<int>& best_perm() const { return best_perm_; }

 private:
  bool twins(int u, int v) const {
    const std::uint64_t drop = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    return (g_.neighbors(u) & drop) == (g_.neighbors(v) & drop);
  }

  void dfs(Partition cells) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    for (int v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      dfs(std::move(child));
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> perm;
    perm.reserve(n_);
    for (const auto& c : cells) perm.push_back(c[0]);
    std::vector<char> bits;
    bits.reserve(n_ * (n_ - 1) / 2);
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) bits.push_back(g_.adjacent(perm[i], perm[j]) ? 1 : 0);
    if (best_perm_.empty() || bits < best_) {
      best_ = std::move(bits);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<char> best_;
  std::vector<int> best_perm_;
};

inline void check_canonical_cap(const Graph& g) {
  if (g.vertex_count() > kCanonicalCap)
    throw ResourceError("canonical labeling is exhaustive and capped at " +
                        std::to_string(kCanonicalCap) + " vertices (got " +
                        std::to_string(g.vertex_count()) + ")");
}

}  // namespace detail

// Labeling perm with perm[i] = original vertex placed at canonical position i.
inline std::vector<int> canonical_labeling(const Graph& g) {
  detail::check_canonical_cap(g);
  detail::CanonicalSearch search(g);
  search.run();
  return search.best_perm();
}

inline Graph canonical_graph(const Graph& g) {
  const auto perm = canonical_labeling(g);
  return relabel(g, perm);
}

// Canonical byte string: one byte holding n, then the canonical upper-triangle
// adjacency bits packed eight per byte. Equal iff the graphs are isomorphic.
inline std::string canonical_form(const Graph& g) {
  const Graph c = canonical_graph(g);
  const int n = c.vertex_count();
  std::string out(1, static_cast<char>(n));
  unsigned char acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>(acc << 1 | (c.adjacent(i, j) ? 1 : 0));
      if (++filled == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>(acc << (8 - filled)));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// Stable 64-bit FNV-1a digest, used to derive reproducible seeds.
inline std::uint64_t fnv1a(const std::string& bytes, std::uint64_t salt = 0) {
  std::uint64_t h = 1469598103934665603ULL ^ salt;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace unitdim
