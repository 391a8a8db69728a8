#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "unitdim/canonical.hpp"
#include "unitdim/embedder.hpp"
#include "unitdim/families.hpp"
#include "unitdim/geometry.hpp"
#include "unitdim/graph.hpp"
#include "unitdim/radius_profile.hpp"

namespace unitdim {

enum class DimKind { dim, sdim };
enum class Mode { crossings, non_crossing };

inline const char* to_string(DimKind k) { return k == DimKind::dim ? "dim" : "sdim"; }
inline const char* to_string(Mode m) { return m == Mode::crossings ? "crossings" : "non-crossing"; }

// Bound values are plain ints with two sentinels.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;
inline constexpr int kUnknown = std::numeric_limits<int>::max() / 4;

inline std::string format_bound(int v) {
  if (v == kNegInf) return "-inf";
  if (v == kUnknown) return "unknown";
  return std::to_string(v);
}

struct Certificate {
  std::string bound;  // "lower" or "upper"
  int value = 0;
  std::string rule;
  std::string anchor;
  std::vector<std::string> inputs;
};

struct DimensionBounds {
  DimKind kind = DimKind::dim;
  int lower = kNegInf;
  int upper = kUnknown;
  std::vector<Certificate> certificates;

  bool exact() const { return upper != kUnknown && lower == upper; }
};

struct RegistryEntry {
  std::string family;  // literal of the recognized family
  int sdim = 0;
  std::optional<int> dim;
  std::optional<RadiusProfile> profile;  // at sphere dimension sdim
  std::string rule;
  std::string anchor;
};

enum class JumpKind { no_jump, jump_at, undetermined };

struct JumpResult {
  JumpKind kind = JumpKind::undetermined;
  int n = 0;
};

// sdim(G + K_n) > sdim G + n for some n exactly when the infimum of the
// profile exceeds sqrt(2)/2; the first such n is where R^n(inf) passes 1.
inline JumpResult jump_test(const RadiusProfile& profile) {
  if (profile.empty()) throw ParameterError("jump_test requires a nonempty profile");
  double known_inf = 1.0;
  for (const auto& p : profile.pieces)
    if (!p.unspecified) known_inf = std::min(known_inf, p.lo);
  if (known_inf <= kHalfSqrt2 + kMembershipTol) return {JumpKind::no_jump, 0};
  const auto inf = profile.infimum();
  if (!inf || !profile.complete) return {JumpKind::undetermined, 0};
  const IterateResult it = iterate_cone_radius(*inf, 10000);
  if (!it.diverged) return {JumpKind::undetermined, 0};
  return {JumpKind::jump_at, it.steps};
}

// Closed-form wheel tables for W_n^k = C_n + e_k.
inline int wheel_dimension(int n, int k, bool non_crossing) {
  if (n < 3 || k < 1) throw ParameterError("wheel_dimension requires n >= 3 and k >= 1");
  const int row = std::min(k, 3) - 1;
  static constexpr int crossing_hex[3] = {2, 4, 5};
  static constexpr int crossing_other[3] = {3, 3, 4};
  static constexpr int nc_small[3] = {3, 3, 4};
  static constexpr int nc_large[3] = {3, 4, 5};
  if (!non_crossing) return n == 6 ? crossing_hex[row] : crossing_other[row];
  if (n < 6) return nc_small[row];
  if (n == 6) return crossing_hex[row];
  return nc_large[row];
}

namespace detail {

inline std::string describe_graph(const Graph& g) {
  if (auto spec = recognize(g)) return to_literal(*spec);
  const auto factors = join_decompose(g);
  if (factors.size() > 1 && g.vertex_count() > 0) {
    std::string s = "J(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ",";
      s += describe_graph(factors[i]);
    }
    return s + ")";
  }
  return "G(n=" + std::to_string(g.vertex_count()) + ",m=" + std::to_string(g.edge_count()) + ")";
}

inline bool is_linear_forest(const Graph& g) { return max_degree(g) <= 2 && !has_cycle(g); }

// Components with at least one edge, as (edges, is_cycle).
inline std::vector<std::pair<int, bool>> degree2_components(const Graph& g) {
  std::vector<std::pair<int, bool>> out;
  for (std::uint64_t comp : connected_components(g)) {
    const Graph c = induced_subgraph(g, comp);
    if (c.edge_count() == 0) continue;
    out.push_back({c.edge_count(), c.edge_count() == c.vertex_count()});
  }
  return out;
}

// Can H sit on the unit circle around a hub joined to every vertex of H?
// Unit chords of the unit circle span 60 degrees, so each component must be
// a subgraph of the hexagon. Without crossings the spokes rule out placing a
// vertex under any chord, so the arcs must be disjoint.
inline bool unit_circle_placeable(const Graph& h, Mode mode) {
  if (max_degree(h) > 2) return false;
  const auto comps = degree2_components(h);
  if (mode == Mode::crossings) {
    for (auto [e, cyc] : comps)
      if (cyc ? e != 6 : e > 5) return false;
    return true;
  }
  int total = 0;
  for (auto [e, cyc] : comps) {
    if (cyc) {
      if (e != 6 || comps.size() != 1) return false;
      return h.vertex_count() == 6;
    }
    total += e;
  }
  return total <= 5;
}

inline RadiusProfile lift_profile(const RadiusProfile& p, const std::string& rule) {
  RadiusProfile out;
  out.sphere_dim = p.sphere_dim + 1;
  for (const auto& piece : p.pieces) {
    if (piece.unspecified) {
      out.pieces.push_back(RadiusPiece::somewhere(rule));
      continue;
    }
    RadiusPiece q;
    q.lo = piece.lo;
    q.lo_closed = piece.lo_closed;
    q.hi = 1.0;
    q.hi_closed = false;
    q.rule = rule;
    out.pieces.push_back(q);
  }
  return out;
}

inline std::string graph_key(const Graph& g) {
  if (g.vertex_count() <= kCanonicalCap) return canonical_form(g);
  std::string s = "L" + std::to_string(g.vertex_count()) + ":";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + "-" + std::to_string(v) + ",";
  return s;
}

}  // namespace detail

struct EngineOptions {
  Mode mode = Mode::crossings;
  bool use_embedder = false;
  int restarts = 100;
  std::uint64_t seed = 0;
  int threads = 0;
};

// Bounds on dim and sdim from the family registry, join/cone composition and
// subgraph monotonicity. Memoized per isomorphism class; not thread-safe.
class Engine {
 public:
  explicit Engine(EngineOptions opts = {}) : opts_(opts) {}

  const EngineOptions& options() const { return opts_; }
  Mode mode() const { return opts_.mode; }

  // -------------------------------------------------------------------------
  // Registry

  std::optional<RegistryEntry> registry(const Graph& g) const {
    const int n = g.vertex_count();
    const bool nc = opts_.mode == Mode::non_crossing;
    RegistryEntry e;
    auto full = [](int d, const std::string& rule) {
      RadiusProfile p;
      p.sphere_dim = d;
      p.pieces.push_back(RadiusPiece::open(0.0, 1.0, rule));
      p.complete = true;
      return p;
    };
    if (is_edgeless(g)) {
      e.family = "E:" + std::to_string(n);
      e.anchor = "edgeless graphs: points on a sphere of any radius";
      e.rule = "registry.edgeless";
      if (n == 0) {
        e.sdim = kNegInf;
        e.dim = kNegInf;
      } else if (n == 1) {
        e.sdim = 0;
        e.dim = 0;
      } else {
        e.sdim = n == 2 ? 1 : 2;
        e.dim = 1;
        e.profile = full(e.sdim, e.rule);
      }
      return e;
    }
    if (is_complete(g)) {
      e.family = "K:" + std::to_string(n);
      e.sdim = n - 1;
      e.dim = n - 1;
      e.rule = "registry.complete";
      e.anchor = "complete graphs: unique simplex embedding, radius R^{n-2}(1/2)";
      RadiusProfile p;
      p.sphere_dim = n - 1;
      p.pieces.push_back(RadiusPiece::point(simplex_radius(n), e.rule));
      p.complete = true;
      e.profile = p;
      return e;
    }
    if (is_cycle(g)) {
      e.family = "C:" + std::to_string(n);
      e.rule = nc ? "registry.cycle.non_crossing" : "registry.cycle";
      RadiusProfile p;
      if (!nc && n != 6) {
        e.sdim = 2;
        e.dim = 2;
        e.anchor = "cycles on a circle are regular star polygons of circumradius below 1";
        p.sphere_dim = 2;
        for (int m = 1; 2 * m < n; ++m)
          if (auto r = star_polygon_radius(n, m); r && *r < 1.0)
            p.pieces.push_back(RadiusPiece::point(*r, e.rule));
        p.complete = true;
      } else if (nc && n < 6) {
        e.sdim = 2;
        e.dim = 2;
        e.anchor = "without crossings a cycle on a circle is the convex polygon";
        p.sphere_dim = 2;
        p.pieces.push_back(RadiusPiece::point(convex_polygon_radius(n), e.rule));
        p.complete = true;
      } else {
        e.sdim = 3;
        e.dim = 2;
        p.sphere_dim = 3;
        if (n % 2 == 0) {
          // Crown: alternate vertices on two parallel circles; any radius in (1/2,1).
          e.anchor = "even cycles on a 2-sphere as an alternating crown of any radius above 1/2";
          p.pieces.push_back(RadiusPiece::open(0.5, 1.0, e.rule + ".crown"));
          p.complete = true;
        } else {
          e.anchor = "odd cycles fit on a 2-sphere at some radius";
          p.pieces.push_back(RadiusPiece::somewhere(e.rule + ".unspecified"));
        }
      }
      e.profile = p;
      return e;
    }
    if (is_s_graph(g)) {
      e.family = "S:" + std::to_string(n);
      e.sdim = n - 1;
      e.rule = "registry.S";
      e.anchor = "S_n = K_{n-3} + e_3 sits on an S^[n-1] exactly for radii in (R^{n-4}(1/2), 1)";
      RadiusProfile p;
      p.sphere_dim = n - 1;
      p.pieces.push_back(RadiusPiece::open(iterate_cone_radius(0.5, n - 4).value, 1.0, e.rule));
      p.complete = true;
      e.profile = p;
      return e;
    }
    if (detail::is_linear_forest(g) && n >= 3) {
      // Paths laid head to tail along one arc of a circle.
      e.family = describe_linear_forest(g);
      const int edges = g.edge_count();
      const bool isolated = has_isolated_vertex(g);
      RadiusProfile p;
      p.sphere_dim = 2;
      e.rule = "registry.linear_forest";
      if (edges <= 2) {
        p.pieces.push_back(RadiusPiece::open(0.5, 1.0, e.rule));
      } else if (edges <= 5) {
        p.pieces.push_back(RadiusPiece::open(convex_polygon_radius(edges), 1.0, e.rule));
        p.complete = nc && !isolated;
      }
      if (!nc && p.empty()) {
        // Step around the circle; all but countably many radii keep vertices distinct.
        p.pieces.push_back(RadiusPiece::somewhere(e.rule + ".generic"));
      }
      if (!p.empty()) {
        e.sdim = 2;
        e.dim = 1;
        e.anchor = "linear forests with e edges lie along an arc of any circle with radius above r_e";
        e.profile = p;
        return e;
      }
      if (nc) {
        // No circle without crossings: every unit chord spans more than 60 degrees.
        e.sdim = 3;
        e.dim = 1;
        e.anchor = "linear forests are subgraphs of an even crown cycle on a 2-sphere";
        p.sphere_dim = 3;
        p.pieces.push_back(RadiusPiece::open(0.5, 1.0, e.rule + ".crown"));
        e.profile = p;
        return e;
      }
    }
    return std::nullopt;
  }

  RegistryEntry known_sdim(const FamilySpec& spec) const {
    const Graph g = build_family(spec);
    auto e = registry(g);
    if (!e) throw NotSupportedError("no registry entry for " + to_literal(spec));
    return *e;
  }

  // -------------------------------------------------------------------------
  // Bounds

  DimensionBounds bounds(const Graph& g, DimKind kind) {
    const std::string key = std::string(kind == DimKind::dim ? "d" : "s") + detail::graph_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DimensionBounds b = kind == DimKind::dim ? compute_dim(g) : compute_sdim(g);
    memo_.emplace(key, b);
    return b;
  }

  DimensionBounds dimension_bounds(const Graph& g, DimKind kind) { return bounds(g, kind); }

  // Sphere profiles known for g, each at some sphere dimension.
  std::vector<RadiusProfile> profiles(const Graph& g) {
    const std::string key = detail::graph_key(g);
    if (auto it = profile_memo_.find(key); it != profile_memo_.end()) return it->second;
    std::vector<RadiusProfile> out = compute_profiles(g);
    profile_memo_.emplace(key, out);
    return out;
  }

  // Exact sdim profile from the registry, if any.
  std::optional<RadiusProfile> sdim_profile(const Graph& g) const {
    if (auto e = registry(g)) return e->profile;
    return std::nullopt;
  }

  DimensionBounds sum_dimension(const std::vector<FamilySpec>& specs) {
    if (specs.size() < 2) throw ParameterError("sum_dimension requires at least two factors");
    std::vector<Graph> parts;
    for (const auto& s : specs) {
      Graph g = build_family(s);
      if (g.vertex_count() > 1 && !registry(g))
        throw NotSupportedError("no registry entry for " + to_literal(s));
      parts.push_back(std::move(g));
    }
    return bounds(join_all(parts), DimKind::dim);
  }

  void clear() {
    memo_.clear();
    profile_memo_.clear();
  }

 private:
  struct Collector {
    DimKind kind;
    DimensionBounds b;
    Certificate lo_cert, hi_cert;
    explicit Collector(DimKind k) : kind(k) { b.kind = k; }
    void lower(int v, std::string rule, std::string anchor, std::vector<std::string> inputs = {}) {
      if (v > b.lower || lo_cert.rule.empty()) {
        if (v < b.lower) return;
        b.lower = v;
        lo_cert = {"lower", v, std::move(rule), std::move(anchor), std::move(inputs)};
      }
    }
    void upper(int v, std::string rule, std::string anchor, std::vector<std::string> inputs = {}) {
      if (v < b.upper || hi_cert.rule.empty()) {
        if (v > b.upper) return;
        b.upper = v;
        hi_cert = {"upper", v, std::move(rule), std::move(anchor), std::move(inputs)};
      }
    }
    DimensionBounds finish() {
      if (!lo_cert.rule.empty()) b.certificates.push_back(lo_cert);
      if (!hi_cert.rule.empty()) b.certificates.push_back(hi_cert);
      if (b.upper != kUnknown && b.lower > b.upper)
        throw Error("internal inconsistency: lower bound exceeds upper bound");
      return b;
    }
  };

  static std::string describe_linear_forest(const Graph& g) {
    return "linear forest(n=" + std::to_string(g.vertex_count()) +
           ",m=" + std::to_string(g.edge_count()) + ")";
  }

  static std::string in(const Graph& g) { return detail::describe_graph(g); }

  static std::string dim_str(const char* what, const Graph& g, int v) {
    return std::string(what) + " " + in(g) + " = " + format_bound(v);
  }

  // Universal vertex v and the rest H with g = K_1 + H.
  static std::optional<std::pair<int, Graph>> cone_split(const Graph& g) {
    const std::uint64_t uni = universal_vertices(g);
    if (!uni || g.vertex_count() < 2) return std::nullopt;
    const int v = std::countr_zero(uni);
    return std::make_pair(v, remove_vertex(g, v));
  }

  // Bipartitions of the join factors into two sides of > 1 vertex each.
  static std::vector<std::pair<Graph, Graph>> join_splits(const Graph& g) {
    std::vector<std::pair<Graph, Graph>> out;
    const auto masks = join_factor_masks(g);
    const int k = static_cast<int>(masks.size());
    if (k < 2 || k > 16) return out;
    for (std::uint32_t sel = 1; sel < (1u << (k - 1)); ++sel) {
      std::uint64_t a = 0, b = 0;
      for (int i = 0; i < k; ++i) ((sel >> i & 1u) ? a : b) |= masks[i];
      if (std::popcount(a) < 2 || std::popcount(b) < 2) continue;
      out.push_back({induced_subgraph(g, a), induced_subgraph(g, b)});
    }
    return out;
  }

  // Each vertex with its neighbourhood spans the subgraph K_1 + G[N(v)].
  void star_lower_bounds(const Graph& g, Collector& c, DimKind kind) {
    const int n = g.vertex_count();
    for (int v = 0; v < n && c.b.lower < c.b.upper; ++v) {
      const std::uint64_t nb = g.neighbors(v);
      if (std::popcount(nb) < 2 || std::popcount(nb) == n - 1) continue;
      const Graph star = join(Graph(1), induced_subgraph(g, nb));
      const auto sb = bounds(star, kind);
      c.lower(sb.lower, "subgraph", "bounds are monotone under subgraphs",
              {dim_str(to_string(kind), star, sb.lower) + " (vertex with its neighbours)"});
    }
  }

  // g = H + K_k with every radius of H at sdim H too large for k cone steps:
  // then H + K_k misses S^[sdim H + k].
  void jump_lower_bound(const Graph& g, Collector& c) {
    std::uint64_t keep = g.all_vertices();
    int k = 0;
    for (std::uint64_t uni = universal_vertices(g); uni; uni &= uni - 1) {
      keep &= ~(uni & -uni);
      ++k;
      const Graph h = induced_subgraph(g, keep);
      if (h.vertex_count() < 2) return;
      const auto reg = registry(h);
      if (!reg || !reg->profile || !reg->profile->complete) continue;
      const JumpResult j = jump_test(*reg->profile);
      if (j.kind != JumpKind::jump_at || j.n > k) continue;
      c.lower(reg->sdim + k + 1, "jump", "radii above sqrt(2)/2 leave the sphere after repeated cones",
              {reg->family + " sdim " + std::to_string(reg->sdim) + ", profile " +
                   reg->profile->describe(),
               "R^" + std::to_string(j.n) + "(inf) > 1"});
    }
  }

  DimensionBounds compute_dim(const Graph& g) {
    Collector c(DimKind::dim);
    const int n = g.vertex_count();
    if (n == 0) {
      c.lower(kNegInf, "empty", "the empty graph has dimension -inf");
      c.upper(kNegInf, "empty", "the empty graph has dimension -inf");
      return c.finish();
    }
    if (n == 1) {
      c.lower(0, "point", "a single vertex embeds in R^0");
      c.upper(0, "point", "a single vertex embeds in R^0");
      return c.finish();
    }
    c.lower(1, "distinct-points", "two distinct vertices need a line");
    c.upper(n - 1, "complete-supergraph", "every graph on n vertices is a subgraph of K_n",
            {"n = " + std::to_string(n)});
    const int omega = clique_number(g);
    c.lower(omega - 1, "clique", "K_w needs w-1 dimensions", {"clique number " + std::to_string(omega)});
    if (has_cycle(g) || max_degree(g) >= 3)
      c.lower(2, "line", "on a line a vertex has two unit neighbours and no cycle closes");
    if (detail::is_linear_forest(g)) c.upper(1, "line", "paths lie on a line");

    const auto reg = registry(g);
    if (reg && reg->dim) {
      c.lower(*reg->dim, reg->rule, reg->anchor, {reg->family});
      c.upper(*reg->dim, reg->rule, reg->anchor, {reg->family});
    }

    // Subgraph monotonicity over vertex-deleted subgraphs. Above the canonical
    // cap the memo no longer merges isomorphic subgraphs, so this is skipped.
    const bool small = n <= kCanonicalCap;
    for (int v = 0; small && v < n && c.b.lower < c.b.upper; ++v) {
      const Graph h = remove_vertex(g, v);
      const auto hb = bounds(h, DimKind::dim);
      c.lower(hb.lower, "subgraph", "dimension is monotone under subgraphs",
              {dim_str("dim", h, hb.lower)});
    }

    if (small) star_lower_bounds(g, c, DimKind::dim);

    if (auto cone = cone_split(g); cone && c.b.lower < c.b.upper) {
      const Graph& h = cone->second;
      if (h.vertex_count() >= 3) {
        if (detail::unit_circle_placeable(h, opts_.mode))
          c.upper(2, "unit-circle", "hub at the origin and the rest on the unit circle",
                  {in(h) + " fits the unit circle"});
        else
          c.lower(3, "unit-circle",
                  "in the plane the neighbours of a hub lie on its unit circle",
                  {in(h) + " does not fit the unit circle"});
      }
      if (is_cycle(h) ||
          (opts_.mode == Mode::non_crossing && petal_signature_of(h) && h.edge_count() <= 6))
        c.upper(3, "unit-sphere", "cycles and small petals fit the unit 2-sphere around a hub",
                {in(h)});
      const auto hs = bounds(h, DimKind::sdim);
      if (hs.upper != kUnknown)
        c.upper(hs.upper + 1, "cone", "apex at distance sqrt(1-r^2) over a sphere embedding",
                {dim_str("sdim", h, hs.upper)});
    }

    for (const auto& [a, b] : join_splits(g)) {
      if (c.b.lower >= c.b.upper) break;
      const auto sa = bounds(a, DimKind::sdim);
      const auto sb = bounds(b, DimKind::sdim);
      const std::vector<std::string> inputs{dim_str("sdim", a, sa.lower),
                                            dim_str("sdim", b, sb.lower)};
      c.lower(sa.lower + sb.lower, "connector",
              "G+H in R^n splits into orthogonal spheres S^[n1], S^[n2] with n1+n2 = n", inputs);
      // Strict when both sphere dimensions are exact and no radii pair up.
      if (sa.exact() && sb.exact()) {
        const auto pa = sdim_profile(a), pb = sdim_profile(b);
        if (pa && pb && pa->sphere_dim == sa.lower && pb->sphere_dim == sb.lower) {
          const auto w = orthogonal_radii(*pa, *pb);
          if (w.verdict == Feasibility::infeasible)
            c.lower(sa.lower + sb.lower + 1, "connector-strict",
                    "no radii at the spherical dimensions satisfy r1^2 + r2^2 = 1",
                    {pa->describe(), pb->describe()});
        }
      }
      for (const auto& pa : profiles(a))
        for (const auto& pb : profiles(b)) {
          const int d = pa.sphere_dim + pb.sphere_dim;
          if (d >= c.b.upper) continue;
          const auto w = orthogonal_radii(pa, pb);
          if (w.verdict != Feasibility::feasible) continue;
          std::vector<std::string> ins{in(a) + " on " + pa.describe(), in(b) + " on " + pb.describe()};
          if (w.radii_known)
            ins.push_back("r1 = " + format_radius(w.r1) + ", r2 = " + format_radius(w.r2));
          c.upper(d, "connector", "orthogonal spheres with r1^2 + r2^2 = 1 give G+H", ins);
        }
    }

    for (const auto& p : profiles(g))
      c.upper(p.sphere_dim, "sphere", "an embedding on a sphere is an embedding",
              {in(g) + " on " + p.describe()});

    if (opts_.use_embedder && c.b.lower < c.b.upper) embed_upper(g, c, false);
    return c.finish();
  }

  DimensionBounds compute_sdim(const Graph& g) {
    Collector c(DimKind::sdim);
    const int n = g.vertex_count();
    if (n == 0) {
      c.lower(kNegInf, "empty", "the empty graph has spherical dimension -inf");
      c.upper(kNegInf, "empty", "the empty graph has spherical dimension -inf");
      return c.finish();
    }
    if (n == 1) {
      c.lower(0, "point", "a single vertex");
      c.upper(0, "point", "a single vertex");
      return c.finish();
    }
    c.lower(n == 2 ? 1 : 2, "sphere-points", "an S^[1] holds only two points");
    c.upper(n - 1, "complete-supergraph", "subgraph of K_n, which lies on an S^[n-1]",
            {"n = " + std::to_string(n)});

    const auto reg = registry(g);
    if (reg) {
      c.lower(reg->sdim, reg->rule, reg->anchor, {reg->family});
      c.upper(reg->sdim, reg->rule, reg->anchor, {reg->family});
    }

    const auto db = bounds(g, DimKind::dim);
    c.lower(db.lower, "dimension", "sdim is at least dim", {dim_str("dim", g, db.lower)});

    const bool small = n <= kCanonicalCap;
    for (int v = 0; small && v < n && c.b.lower < c.b.upper; ++v) {
      const Graph h = remove_vertex(g, v);
      const auto hb = bounds(h, DimKind::sdim);
      c.lower(hb.lower, "subgraph", "spherical dimension is monotone under subgraphs",
              {dim_str("sdim", h, hb.lower)});
    }

    if (small) star_lower_bounds(g, c, DimKind::sdim);

    if (auto cone = cone_split(g)) {
      const auto hb = bounds(cone->second, DimKind::sdim);
      if (hb.lower != kNegInf)
        c.lower(hb.lower + 1, "add-vertex", "adding a universal vertex raises sdim",
                {dim_str("sdim", cone->second, hb.lower)});
    }
    jump_lower_bound(g, c);

    for (const auto& p : profiles(g))
      c.upper(p.sphere_dim, "profile", "a radius below 1 is known", {p.describe()});

    if (opts_.use_embedder && c.b.lower < c.b.upper) embed_upper(g, c, true);
    return c.finish();
  }

  std::vector<RadiusProfile> compute_profiles(const Graph& g) {
    std::vector<RadiusProfile> out;
    const int n = g.vertex_count();
    if (n < 2) return out;
    auto add = [&](RadiusProfile p) {
      if (p.empty()) return;
      for (const auto& q : out)
        if (q.sphere_dim == p.sphere_dim && q.pieces.size() == p.pieces.size()) {
          bool same = true;
          for (std::size_t i = 0; i < p.pieces.size() && same; ++i)
            same = q.pieces[i].lo == p.pieces[i].lo && q.pieces[i].hi == p.pieces[i].hi &&
                   q.pieces[i].unspecified == p.pieces[i].unspecified;
          if (same) return;
        }
      out.push_back(std::move(p));
    };
    if (auto reg = registry(g); reg && reg->profile) {
      add(*reg->profile);
      add(detail::lift_profile(*reg->profile, "lift"));
    } else {
      // Subgraph of the simplex.
      RadiusProfile p;
      p.sphere_dim = n - 1;
      p.pieces.push_back(RadiusPiece::point(simplex_radius(n), "simplex-supergraph"));
      add(p);
      add(detail::lift_profile(p, "lift"));
    }
    // Isolated vertices go anywhere on a sphere of dimension >= 2.
    if (has_isolated_vertex(g) && !is_edgeless(g)) {
      std::uint64_t keep = 0;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) > 0) keep |= std::uint64_t{1} << v;
      const Graph core = induced_subgraph(g, keep);
      for (auto p : profiles(core)) {
        if (p.sphere_dim < 2) p = detail::lift_profile(p, "lift");
        for (auto& piece : p.pieces) piece.rule = "isolated-vertices/" + piece.rule;
        p.complete = false;
        add(p);
      }
    }
    // Disjoint union of components on a common radius (crossings only).
    if (opts_.mode == Mode::crossings) {
      const auto comps = connected_components(g);
      if (comps.size() >= 2 && !has_isolated_vertex(g)) {
        const Graph first = induced_subgraph(g, comps[0]);
        const Graph rest = induced_subgraph(g, g.all_vertices() & ~comps[0]);
        for (const auto& pa : profiles(first))
          for (const auto& pb : profiles(rest)) {
            if (pa.sphere_dim < 2 || pb.sphere_dim < 2) continue;
            if (auto p = intersect_profiles(pa, pb)) add(*p);
          }
      }
    }
    if (auto cone = cone_split(g)) {
      for (const auto& p : profiles(cone->second)) add(cone_profile(p, "cone"));
    }
    for (const auto& [a, b] : join_splits(g)) {
      for (const auto& pa : profiles(a))
        for (const auto& pb : profiles(b))
          if (pa.contains(kHalfSqrt2) && pb.contains(kHalfSqrt2)) {
            RadiusProfile p;
            p.sphere_dim = pa.sphere_dim + pb.sphere_dim;
            p.pieces.push_back(RadiusPiece::point(kHalfSqrt2, "orthogonal-half-sqrt2"));
            add(p);
            add(detail::lift_profile(p, "lift"));
          }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.sphere_dim < b.sphere_dim; });
    return out;
  }

  // Common radii of two profiles taken to the larger sphere dimension.
  static std::optional<RadiusProfile> intersect_profiles(RadiusProfile a, RadiusProfile b) {
    while (a.sphere_dim < b.sphere_dim) a = detail::lift_profile(a, "lift");
    while (b.sphere_dim < a.sphere_dim) b = detail::lift_profile(b, "lift");
    RadiusProfile out;
    out.sphere_dim = a.sphere_dim;
    for (const auto& pa : a.pieces)
      for (const auto& pb : b.pieces) {
        if (pa.unspecified || pb.unspecified) continue;
        RadiusPiece q;
        q.lo = std::max(pa.lo, pb.lo);
        q.hi = std::min(pa.hi, pb.hi);
        q.lo_closed = (pa.lo == q.lo ? pa.lo_closed : true) && (pb.lo == q.lo ? pb.lo_closed : true);
        q.hi_closed = (pa.hi == q.hi ? pa.hi_closed : true) && (pb.hi == q.hi ? pb.hi_closed : true);
        q.rule = "disjoint-union";
        if (q.lo < q.hi || (q.lo == q.hi && q.lo_closed && q.hi_closed)) {
          if (q.lo == q.hi) q = RadiusPiece::point(q.lo, "disjoint-union");
          out.pieces.push_back(q);
        }
      }
    if (out.empty()) return std::nullopt;
    return out;
  }

  void embed_upper(const Graph& g, Collector& c, bool on_sphere) {
    const int start = std::max(c.b.lower, on_sphere ? 1 : 1);
    for (int d = start; d < c.b.upper; ++d) {
      EmbedRequest req;
      req.graph = g;
      req.ambient_dim = d;
      req.on_sphere = on_sphere;
      req.forbid_crossings = opts_.mode == Mode::non_crossing;
      req.restarts = opts_.restarts;
      req.seed = fnv1a(detail::graph_key(g), static_cast<std::uint64_t>(d) ^ opts_.seed);
      req.threads = opts_.threads;
      const EmbedResult r = find_embedding(req);
      if (r.found) {
        c.upper(d, "embedding", "numerical embedding validated independently",
                {"restart " + std::to_string(r.restart_index) + ", residual " +
                 format_radius(r.report.max_edge_residual)});
        return;
      }
    }
  }

  EngineOptions opts_;
  std::unordered_map<std::string, DimensionBounds> memo_;
  std::unordered_map<std::string, std::vector<RadiusProfile>> profile_memo_;
};

inline DimensionBounds dimension_bounds(const Graph& g, DimKind kind, Mode mode) {
  Engine e(EngineOptions{mode});
  return e.bounds(g, kind);
}

}  // namespace unitdim
