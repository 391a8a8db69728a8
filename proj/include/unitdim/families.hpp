#pragma once

#include <algorithm>
#include <cctype>
#include <bit>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "unitdim/graph.hpp"

namespace unitdim {

enum class FamilyTag { K, C, E, P, W, S, Petal, Flower, Join, DisjointUnion };

// A named graph family instance, e.g. W:6:2 or J(S:4,E:3).
//
// params per tag:  K,C,E,P,S: {n}   W: {n,k}   Petal: {edges, index}
//                  Flower: {edges, index} plus one child (the center graph)
//                  Join, DisjointUnion: children only
struct FamilySpec {
  FamilyTag tag = FamilyTag::E;
  std::vector<int> params;
  std::vector<FamilySpec> children;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline FamilySpec family(FamilyTag tag, std::vector<int> params,
                         std::vector<FamilySpec> children = {}) {
  return FamilySpec{tag, std::move(params), std::move(children)};
}

// ---------------------------------------------------------------------------
// Petals: graphs with n edges where every vertex has degree one or two, i.e.
// disjoint unions of paths (with >= 1 edge) and cycles.

struct PetalComponent {
  int edges = 0;
  bool cycle = false;

  friend auto operator<=>(const PetalComponent&, const PetalComponent&) = default;
};

using PetalSignature = std::vector<PetalComponent>;  // sorted descending

namespace detail {
inline void petal_signatures_rec(int remaining, PetalComponent bound, PetalSignature& cur,
                                 std::vector<PetalSignature>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(remaining, bound.edges); k >= 1; --k) {
    for (bool cyc : {true, false}) {
      PetalComponent c{k, cyc};
      if (cyc && k < 3) continue;
      if (bound < c) continue;
      cur.push_back(c);
      petal_signatures_rec(remaining - k, c, cur, out);
      cur.pop_back();
    }
  }
}
}  // namespace detail

// All component multisets with n edges, in descending lexicographic order; the
// first entry for n >= 3 is the single cycle C_n.
inline std::vector<PetalSignature> petal_signatures(int n) {
  if (n < 1) throw ParameterError("petals require n >= 1 edges");
  std::vector<PetalSignature> out;
  PetalSignature cur;
  detail::petal_signatures_rec(n, PetalComponent{n, true}, cur, out);
  return out;
}

inline Graph petal_graph(const PetalSignature& sig) {
  int n = 0;
  for (auto c : sig) n += c.cycle ? c.edges : c.edges + 1;
  Graph g(n);
  int base = 0;
  for (auto c : sig) {
    const int verts = c.cycle ? c.edges : c.edges + 1;
    for (int i = 0; i + 1 < verts; ++i) g.add_edge(base + i, base + i + 1);
    if (c.cycle) g.add_edge(base, base + verts - 1);
    base += verts;
  }
  return g;
}

inline std::vector<Graph> enumerate_petals(int n) {
  std::vector<Graph> out;
  for (const auto& sig : petal_signatures(n)) out.push_back(petal_graph(sig));
  return out;
}

// Signature of a max-degree-2 graph without isolated vertices, or nullopt.
inline std::optional<PetalSignature> petal_signature_of(const Graph& g) {
  if (g.edge_count() == 0 || max_degree(g) > 2 || has_isolated_vertex(g)) return std::nullopt;
  PetalSignature sig;
  for (std::uint64_t comp : connected_components(g)) {
    const Graph c = induced_subgraph(g, comp);
    sig.push_back({c.edge_count(), c.edge_count() == c.vertex_count()});
  }
  std::sort(sig.rbegin(), sig.rend());
  return sig;
}

// ---------------------------------------------------------------------------

inline Graph s_graph(int n) {
  if (n < 1) throw ParameterError("S:n requires n >= 1");
  if (n <= 3) return empty_graph(n);
  return join(complete_graph(n - 3), empty_graph(3));
}

inline Graph build_family(const FamilySpec& spec) {
  auto need = [&](std::size_t count, const char* name) {
    if (spec.params.size() != count)
      throw ParameterError(std::string(name) + " expects " + std::to_string(count) +
                           " integer parameter(s)");
  };
  switch (spec.tag) {
    case FamilyTag::K:
      need(1, "K");
      if (spec.params[0] < 1) throw ParameterError("K:n requires n >= 1");
      return complete_graph(spec.params[0]);
    case FamilyTag::C:
      need(1, "C");
      if (spec.params[0] < 3) throw ParameterError("C:n requires n >= 3");
      return cycle_graph(spec.params[0]);
    case FamilyTag::E:
      need(1, "E");
      if (spec.params[0] < 0) throw ParameterError("E:n requires n >= 0");
      return empty_graph(spec.params[0]);
    case FamilyTag::P:
      need(1, "P");
      if (spec.params[0] < 1) throw ParameterError("P:n requires n >= 1");
      return path_graph(spec.params[0]);
    case FamilyTag::W:
      need(2, "W");
      if (spec.params[0] < 3 || spec.params[1] < 1)
        throw ParameterError("W:n:k requires n >= 3 and k >= 1");
      return join(cycle_graph(spec.params[0]), empty_graph(spec.params[1]));
    case FamilyTag::S:
      need(1, "S");
      return s_graph(spec.params[0]);
    case FamilyTag::Petal: {
      need(2, "PETAL");
      if (spec.params[0] < 1) throw ParameterError("PETAL:n:i requires n >= 1");
      const auto sigs = petal_signatures(spec.params[0]);
      const int idx = spec.params[1];
      if (idx < 0 || idx >= static_cast<int>(sigs.size()))
        throw ParameterError("PETAL:" + std::to_string(spec.params[0]) +
                             ":i requires 0 <= i < " + std::to_string(sigs.size()));
      return petal_graph(sigs[idx]);
    }
    case FamilyTag::Flower: {
      need(2, "FLOWER");
      if (spec.children.size() != 1) throw ParameterError("FLOWER expects one center graph");
      const Graph petal = build_family(family(FamilyTag::Petal, spec.params));
      return join(build_family(spec.children[0]), petal);
    }
    case FamilyTag::Join:
    case FamilyTag::DisjointUnion: {
      if (spec.children.empty()) throw ParameterError("J()/U() expect at least one operand");
      Graph acc = build_family(spec.children[0]);
      for (std::size_t i = 1; i < spec.children.size(); ++i)
        acc = spec.tag == FamilyTag::Join ? join(acc, build_family(spec.children[i]))
                                          : disjoint_union(acc, build_family(spec.children[i]));
      return acc;
    }
  }
  throw ParameterError("unknown family tag");
}

// ---------------------------------------------------------------------------
// Literal syntax

inline std::string to_literal(const FamilySpec& spec) {
  auto ints = [&](const char* name) {
    std::string s = name;
    for (int p : spec.params) s += ":" + std::to_string(p);
    return s;
  };
  auto list = [&](const char* head) {
    std::string s = std::string(head) + "(";
    for (std::size_t i = 0; i < spec.children.size(); ++i) {
      if (i) s += ",";
      s += to_literal(spec.children[i]);
    }
    return s + ")";
  };
  switch (spec.tag) {
    case FamilyTag::K: return ints("K");
    case FamilyTag::C: return ints("C");
    case FamilyTag::E: return ints("E");
    case FamilyTag::P: return ints("P");
    case FamilyTag::W: return ints("W");
    case FamilyTag::S: return ints("S");
    case FamilyTag::Petal: return ints("PETAL");
    case FamilyTag::Flower:
      return "FLOWER(" + std::to_string(spec.params.at(0)) + "," +
             std::to_string(spec.params.at(1)) + "," + to_literal(spec.children.at(0)) + ")";
    case FamilyTag::Join: return list("J");
    case FamilyTag::DisjointUnion: return list("U");
  }
  return "?";
}

inline constexpr std::string_view kFamilyTagHelp =
    "K:n, C:n, E:n, P:n, W:n:k, S:n, PETAL:n:i, FLOWER(n,i,<graph>), J(<graph>,...), "
    "U(<graph>,...)";

namespace detail {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("family literal '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_) + "; valid forms: " + std::string(kFamilyTagHelp));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string s(text_.substr(start, pos_ - start));
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return s;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ - start == 1 && text_[start] == '-')) fail("expected integer");
    try {
      return std::stoi(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  FamilySpec parse_expr() {
    const std::string head = name();
    if (head == "J" || head == "U") {
      expect('(');
      FamilySpec spec{head == "J" ? FamilyTag::Join : FamilyTag::DisjointUnion, {}, {}};
      spec.children.push_back(parse_expr());
      while (consume(',')) spec.children.push_back(parse_expr());
      expect(')');
      return spec;
    }
    if (head == "FLOWER") {
      expect('(');
      FamilySpec spec{FamilyTag::Flower, {}, {}};
      spec.params.push_back(integer());
      expect(',');
      spec.params.push_back(integer());
      expect(',');
      spec.children.push_back(parse_expr());
      expect(')');
      return spec;
    }
    FamilySpec spec;
    std::size_t arity = 1;
    if (head == "K") spec.tag = FamilyTag::K;
    else if (head == "C") spec.tag = FamilyTag::C;
    else if (head == "E") spec.tag = FamilyTag::E;
    else if (head == "P") spec.tag = FamilyTag::P;
    else if (head == "S") spec.tag = FamilyTag::S;
    else if (head == "W") { spec.tag = FamilyTag::W; arity = 2; }
    else if (head == "PETAL") { spec.tag = FamilyTag::Petal; arity = 2; }
    else fail("unknown family tag '" + head + "'");
    for (std::size_t i = 0; i < arity; ++i) {
      expect(':');
      spec.params.push_back(integer());
    }
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FamilySpec parse_family_literal(std::string_view text) {
  return detail::LiteralParser(text).parse();
}

inline Graph graph_from_literal(std::string_view text) {
  return build_family(parse_family_literal(text));
}

// ---------------------------------------------------------------------------
// Structural recognition of the families the dimension registry knows about.

inline std::optional<int> petal_index(const PetalSignature& sig) {
  int edges = 0;
  for (auto c : sig) edges += c.edges;
  const auto all = petal_signatures(edges);
  auto it = std::find(all.begin(), all.end(), sig);
  if (it == all.end()) return std::nullopt;
  return static_cast<int>(it - all.begin());
}

// S_n = K_{n-3} + e_3 for n >= 4.
inline bool is_s_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 4) return false;
  const std::uint64_t uni = universal_vertices(g);
  if (std::popcount(uni) != n - 3) return false;
  const std::uint64_t rest = g.all_vertices() & ~uni;
  return induced_subgraph(g, rest).edge_count() == 0;
}

// Recognizes E, K, C, S and (via join factors) wheels and petals. Flowers and
// general joins are reported by recognize_join_family.
inline std::optional<FamilySpec> recognize(const Graph& g) {
  const int n = g.vertex_count();
  if (is_edgeless(g)) return family(FamilyTag::E, {n});
  if (is_complete(g)) return family(FamilyTag::K, {n});
  if (is_cycle(g)) return family(FamilyTag::C, {n});
  if (is_s_graph(g)) return family(FamilyTag::S, {n});
  if (auto sig = petal_signature_of(g)) {
    int edges = g.edge_count();
    return family(FamilyTag::Petal, {edges, *petal_index(*sig)});
  }
  const auto masks = join_factor_masks(g);
  if (masks.size() >= 2) {
    for (std::uint64_t axle : masks) {
      const Graph a = induced_subgraph(g, axle);
      if (!is_edgeless(a)) continue;
      const Graph rim = induced_subgraph(g, g.all_vertices() & ~axle);
      if (is_cycle(rim)) return family(FamilyTag::W, {rim.vertex_count(), a.vertex_count()});
    }
  }
  return std::nullopt;
}

}  // namespace unitdim
