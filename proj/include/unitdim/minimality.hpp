#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "unitdim/canonical.hpp"
#include "unitdim/embedder.hpp"
#include "unitdim/engine.hpp"
#include "unitdim/minors.hpp"

namespace unitdim {

enum class Verdict { minimal, not_minimal, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::minimal: return "minimal";
    case Verdict::not_minimal: return "not_minimal";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct MinorFinding {
  Graph minor;
  std::string description;
  std::string reason;
};

struct MinimalityReport {
  Graph graph;
  DimKind kind = DimKind::dim;
  Mode mode = Mode::crossings;
  int value = 0;
  int minors_checked = 0;
  int engine_certified = 0;
  int inherited = 0;
  int embedder_certified = 0;
  std::vector<MinorFinding> failures;
  std::vector<MinorFinding> inconclusive_minors;
  std::vector<MinorFinding> passes;  // only filled when requested
  Verdict verdict = Verdict::inconclusive;
};

struct MinimalityOptions {
  int restarts = 100;
  int cap = kDefaultMinorCap;
  int threads = 0;
  std::uint64_t seed = 0;  // mixed into the per-minor seeds
  std::optional<int> target;  // required value; a mismatch is a failure
  bool record_passes = false;
};

// Checks that g attains its exact value and every proper minor falls below
// it. Each proper minor is settled by, in order: an engine lower bound at or
// above the value (failure), an engine upper bound below it, a deletion parent
// already shown below it (subgraphs never exceed their supergraph), or a
// numerical embedding one dimension lower. Anything else is inconclusive.
inline MinimalityReport verify_minor_minimal(const Graph& g, DimKind kind, Mode mode,
                                             const MinimalityOptions& opts = {}) {
  Engine engine(EngineOptions{mode});
  MinimalityReport rep;
  rep.graph = g;
  rep.kind = kind;
  rep.mode = mode;
  const DimensionBounds root = engine.bounds(g, kind);
  if (!root.exact())
    throw InconclusiveRootError(std::string(to_string(kind)) + " of " + detail::describe_graph(g) +
                                " is only bounded in [" + format_bound(root.lower) + ", " +
                                format_bound(root.upper) + "]");
  rep.value = root.lower;
  if (opts.target && *opts.target != rep.value) {
    rep.failures.push_back({g, detail::describe_graph(g),
                            std::string(to_string(kind)) + " is " + format_bound(rep.value) +
                                ", not the target " + std::to_string(*opts.target)});
  }

  const MinorLattice lat = minor_lattice(g, opts.cap);
  const int count = static_cast<int>(lat.nodes.size());
  std::vector<std::vector<int>> deletion_parents(count);
  for (int p = 0; p < count; ++p)
    for (int ch : lat.nodes[p].deletion_children) deletion_parents[ch].push_back(p);

  std::vector<int> order;
  for (int i = 1; i < count; ++i) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Graph& ga = lat.nodes[a].graph;
    const Graph& gb = lat.nodes[b].graph;
    const int sa = ga.vertex_count() + ga.edge_count(), sb = gb.vertex_count() + gb.edge_count();
    if (sa != sb) return sa > sb;
    return lat.nodes[a].form < lat.nodes[b].form;
  });

  const int below = rep.value - 1;
  std::vector<char> certified(count, 0);
  for (int id : order) {
    const auto& node = lat.nodes[id];
    const Graph& h = node.graph;
    const std::string desc = detail::describe_graph(h);
    ++rep.minors_checked;
    const DimensionBounds hb = engine.bounds(h, kind);
    if (hb.lower >= rep.value) {
      rep.failures.push_back({h, desc,
                              std::string(to_string(kind)) + " >= " + format_bound(hb.lower) +
                                  " (" + (hb.certificates.empty() ? "" : hb.certificates[0].rule) +
                                  ")"});
      continue;
    }
    if (hb.upper <= below) {
      certified[id] = 1;
      ++rep.engine_certified;
      if (opts.record_passes)
        rep.passes.push_back({h, desc, "engine upper bound " + format_bound(hb.upper)});
      continue;
    }
    const auto& parents = deletion_parents[id];
    if (std::any_of(parents.begin(), parents.end(), [&](int p) { return p != 0 && certified[p]; })) {
      certified[id] = 1;
      ++rep.inherited;
      if (opts.record_passes) rep.passes.push_back({h, desc, "subgraph of a certified minor"});
      continue;
    }
    bool found = false;
    if (below >= 1) {
      EmbedRequest req;
      req.graph = h;
      req.ambient_dim = below;
      req.on_sphere = kind == DimKind::sdim;
      req.forbid_crossings = mode == Mode::non_crossing;
      req.restarts = opts.restarts;
      req.threads = opts.threads;
      req.seed = fnv1a(node.form, static_cast<std::uint64_t>(below)) ^ opts.seed;
      const EmbedResult er = find_embedding(req);
      found = er.found;
    }
    if (found) {
      certified[id] = 1;
      ++rep.embedder_certified;
      if (opts.record_passes)
        rep.passes.push_back({h, desc, "embedding in dimension " + std::to_string(below)});
    } else {
      rep.inconclusive_minors.push_back(
          {h, desc,
           "bounds [" + format_bound(hb.lower) + ", " + format_bound(hb.upper) +
               "], no embedding in dimension " + std::to_string(below) + " after " +
               std::to_string(opts.restarts) + " restarts"});
    }
  }
  if (!rep.failures.empty()) rep.verdict = Verdict::not_minimal;
  else if (!rep.inconclusive_minors.empty()) rep.verdict = Verdict::inconclusive;
  else rep.verdict = Verdict::minimal;
  return rep;
}

// ---------------------------------------------------------------------------

struct SCandidateReport {
  int n = 0;
  int graphs_checked = 0;
  std::vector<Graph> candidates;    // minor minimal for sdim n-1
  std::vector<Graph> inconclusive;  // sdim or minimality undecided
};

// All n-vertex graphs that are minor minimal with respect to sdim n-1.
inline SCandidateReport enumerate_S_candidates(int n, const MinimalityOptions& opts = {}) {
  if (n < 1 || n > 7) throw ParameterError("enumerate_S_candidates supports 1 <= n <= 7");
  SCandidateReport rep;
  rep.n = n;
  Engine engine(EngineOptions{Mode::crossings});
  const int target = n - 1;
  for (const Graph& g : all_graphs(n)) {
    ++rep.graphs_checked;
    const DimensionBounds b = engine.bounds(g, DimKind::sdim);
    if (b.upper < target) continue;
    if (b.lower < target) {
      EmbedRequest req;
      req.graph = g;
      req.ambient_dim = target - 1;
      req.on_sphere = true;
      req.restarts = opts.restarts;
      req.threads = opts.threads;
      req.seed = fnv1a(canonical_form(g), static_cast<std::uint64_t>(target - 1)) ^ opts.seed;
      if (target - 1 >= 1 && find_embedding(req).found) continue;
      rep.inconclusive.push_back(g);
      continue;
    }
    MinimalityOptions mo = opts;
    mo.target = target;
    const MinimalityReport mr = verify_minor_minimal(g, DimKind::sdim, Mode::crossings, mo);
    if (mr.verdict == Verdict::minimal) rep.candidates.push_back(g);
    else if (mr.verdict == Verdict::inconclusive) rep.inconclusive.push_back(g);
  }
  return rep;
}

// ---------------------------------------------------------------------------

struct FourVertexEntry {
  Graph graph;
  int sdim = 0;
  bool sdim_exact = false;
  std::optional<double> radius;  // circle radius found when sdim is 2
  bool ok = false;
  std::string note;
};

struct FourVertexReport {
  std::vector<FourVertexEntry> entries;
  bool all_ok = false;
};

// Every 4-vertex graph of spherical dimension 2 fits a circle of radius at
// most sqrt(2)/2; the rest contain K_{3,1} and have spherical dimension 3.
inline FourVertexReport check_4vertex_lemma(int restarts = 100, int threads = 0) {
  FourVertexReport rep;
  Engine engine(EngineOptions{Mode::crossings});
  const double cap = kHalfSqrt2 + kCertificateTol;
  rep.all_ok = true;
  for (const Graph& g : all_graphs(4)) {
    FourVertexEntry e;
    e.graph = g;
    const DimensionBounds b = engine.bounds(g, DimKind::sdim);
    e.sdim = b.upper;
    e.sdim_exact = b.exact();
    const bool has_claw = max_degree(g) >= 3;
    if (b.exact() && b.upper == 2) {
      EmbedRequest req;
      req.graph = g;
      req.ambient_dim = 2;
      req.on_sphere = true;
      req.max_radius = kHalfSqrt2;
      req.restarts = restarts;
      req.threads = threads;
      req.seed = fnv1a(canonical_form(g), 2);
      const EmbedResult r = find_embedding(req);
      if (r.found) e.radius = r.report.sphere_radius;
      e.ok = r.found && e.radius && *e.radius <= cap && !has_claw;
      e.note = r.found ? "circle radius " + format_radius(*e.radius) : r.status();
    } else if (b.exact() && b.upper == 3) {
      e.ok = has_claw;
      e.note = "contains K_{3,1}";
    } else {
      e.note = "spherical dimension not exact";
    }
    rep.all_ok = rep.all_ok && e.ok;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace unitdim
