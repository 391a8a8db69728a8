#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unitdim/unitdim.hpp"

namespace unitdim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

inline std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

struct Common {
  std::string mode = "crossings";
  int restarts = 100;
  std::uint64_t seed = 0;
  double tol = kCertificateTol;
  bool json = false;
  bool explain = false;
  std::string svg;
  bool failures_only = false;
  int cap = kDefaultMinorCap;

  Mode parsed_mode() const { return mode == "non-crossing" ? Mode::non_crossing : Mode::crossings; }
};

inline void print_bounds(std::ostream& out, const Graph& g, const DimensionBounds& b, bool explain) {
  if (b.exact()) out << format_bound(b.lower) << "\n";
  else out << "[" << format_bound(b.lower) << ", " << format_bound(b.upper) << "]\n";
  if (!explain) return;
  out << detail::describe_graph(g) << "\n";
  for (const auto& c : b.certificates) {
    out << "  " << c.bound << " " << format_bound(c.value) << ": " << c.rule << " (" << c.anchor
        << ")\n";
    for (const auto& in : c.inputs) out << "    from " << in << "\n";
  }
}

inline void print_embedding(std::ostream& out, const Embedding& e) {
  for (int v = 0; v < e.coords.rows(); ++v) {
    out << v;
    for (int k = 0; k < e.coords.cols(); ++k) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %.12g", e.coords(v, k));
      out << buf;
    }
    out << "\n";
  }
}

inline void print_table(std::ostream& out, const TableSection& t) {
  out << t.name << (t.all_match() ? " ok" : " MISMATCH") << "\n";
  if (t.rows.empty()) {
    int shown = 0;
    for (const auto& c : t.cells) {
      out << "  " << c.label << " " << c.actual << (c.match ? "" : " (expected " + c.expected + ")");
      out << ((++shown % 6 == 0) ? "\n" : "");
    }
    if (shown % 6) out << "\n";
    return;
  }
  out << "  " << std::string(6, ' ');
  for (const auto& c : t.columns) out << " " << c;
  out << "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%-6s", t.rows[r].c_str());
    out << "  " << buf;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      const auto& cell = t.cells[r * t.columns.size() + c];
      std::string v = cell.match ? cell.actual : cell.actual + "!=" + cell.expected;
      out << " " << v << std::string(t.columns[c].size() > v.size() ? t.columns[c].size() - v.size() : 0, ' ');
    }
    out << "\n";
  }
}

inline json table_json(const TableSection& t) {
  json cells = json::array();
  for (const auto& c : t.cells)
    cells.push_back({{"label", c.label}, {"expected", c.expected}, {"actual", c.actual}, {"match", c.match}});
  return {{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}, {"match", t.all_match()},
          {"cells", std::move(cells)}};
}

// Runs one command line. Output goes to out, diagnostics to err.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"unit-distance dimension of graphs", "unitdim"};
  app.require_subcommand(1);
  Common o;

  auto add_mode = [&](CLI::App* s) {
    s->add_option("--mode", o.mode, "crossings or non-crossing")
        ->check(CLI::IsMember({"crossings", "non-crossing"}));
  };
  auto add_search = [&](CLI::App* s) {
    s->add_option("--restarts", o.restarts, "random restarts")->check(CLI::PositiveNumber);
    s->add_option("--seed", o.seed, "base seed");
  };

  std::string graph_arg;
  auto add_graph = [&](CLI::App* s) {
    s->add_option("graph", graph_arg, "graph file or family literal (" + std::string(kFamilyTagHelp) + ")")
        ->required();
  };

  // dim / sdim
  bool use_embedder = false;
  std::vector<CLI::App*> dim_cmds;
  for (const char* name : {"dim", "sdim"}) {
    auto* s = app.add_subcommand(name, std::string("bounds on ") +
                                           (name[0] == 'd' ? "the dimension" : "the spherical dimension"));
    add_graph(s);
    add_mode(s);
    add_search(s);
    s->add_flag("--json", o.json, "JSON output");
    s->add_flag("--explain", o.explain, "print the rule chain");
    s->add_flag("--embedder", use_embedder, "close gaps with the numerical embedder");
    dim_cmds.push_back(s);
  }

  // embed
  int embed_dim = 2;
  bool on_sphere = false;
  std::optional<double> radius;
  auto* embed = app.add_subcommand("embed", "search for a unit-distance embedding");
  add_graph(embed);
  add_mode(embed);
  add_search(embed);
  embed->add_option("--dim,-d", embed_dim, "ambient dimension")->required()->check(CLI::PositiveNumber);
  embed->add_flag("--sphere", on_sphere, "vertices on a sphere of radius below 1 about the origin");
  embed->add_option("--radius", radius, "fixed sphere radius")->check(CLI::Range(0.0, 1.0));
  embed->add_option("--tol", o.tol, "certificate tolerance")->check(CLI::PositiveNumber);
  embed->add_flag("--json", o.json, "JSON output");
  embed->add_option("--svg", o.svg, "write an SVG projection to PATH");

  // minors
  bool proper = false;
  auto* minors = app.add_subcommand("minors", "list the minors up to isomorphism");
  add_graph(minors);
  minors->add_flag("--proper", proper, "exclude the graph itself");
  minors->add_option("--cap", o.cap, "vertex cap for the minor lattice")->check(CLI::PositiveNumber);
  minors->add_flag("--json", o.json, "JSON output");

  // verify-minimal
  std::string kind_name = "dim";
  std::optional<int> target;
  auto* verify = app.add_subcommand("verify-minimal", "check minor minimality");
  add_graph(verify);
  add_mode(verify);
  add_search(verify);
  verify->add_option("--kind", kind_name, "dim or sdim")->check(CLI::IsMember({"dim", "sdim"}));
  verify->add_option("--target", target, "required value of the graph itself");
  verify->add_option("--cap", o.cap, "vertex cap for the minor lattice")->check(CLI::PositiveNumber);
  verify->add_flag("--json", o.json, "JSON output");
  verify->add_flag("--failures-only", o.failures_only, "report failures and inconclusive minors only");

  // radius
  auto* rad = app.add_subcommand("radius", "closed-form radii");
  rad->require_subcommand(1);
  int pn = 0, pm = 0, sn = 0, steps = 0;
  double cr = 0.0;
  auto* rpoly = rad->add_subcommand("polygon", "circumradius of the unit-sided star polygon {n/m}");
  rpoly->add_option("n", pn)->required();
  rpoly->add_option("m", pm)->required();
  auto* rcone = rad->add_subcommand("cone", "R(r) = 1/(2 sqrt(1 - r^2))");
  rcone->add_option("r", cr)->required();
  auto* rsimp = rad->add_subcommand("simplex", "circumradius of the unit simplex on n vertices");
  rsimp->add_option("n", sn)->required();
  auto* riter = rad->add_subcommand("iterate", "apply R k times");
  riter->add_option("r", cr)->required();
  riter->add_option("k", steps)->required();

  // tables
  std::string which = "all";
  bool mode_given = false;
  auto* tables = app.add_subcommand("tables", "regenerate the polygon and wheel tables");
  tables->add_option("which", which, "polygon, wheel or all")->check(CLI::IsMember({"polygon", "wheel", "all"}));
  tables->add_option("--mode", o.mode, "crossings or non-crossing")
      ->check(CLI::IsMember({"crossings", "non-crossing"}))
      ->each([&](const std::string&) { mode_given = true; });
  tables->add_flag("--json", o.json, "JSON output");

  // petals
  int petal_n = 0;
  auto* petals = app.add_subcommand("petals", "list the petals with n edges");
  petals->add_option("n", petal_n)->required()->check(CLI::Range(1, 16));
  petals->add_flag("--json", o.json, "JSON output");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "join factors and components");
  add_graph(decompose);
  decompose->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    for (std::size_t i = 0; i < dim_cmds.size(); ++i) {
      if (!dim_cmds[i]->parsed()) continue;
      const DimKind kind = i == 0 ? DimKind::dim : DimKind::sdim;
      const Graph g = load_graph(graph_arg);
      EngineOptions eo;
      eo.mode = o.parsed_mode();
      eo.use_embedder = use_embedder;
      eo.restarts = o.restarts;
      eo.seed = o.seed;
      Engine engine(eo);
      const DimensionBounds b = engine.bounds(g, kind);
      if (o.json) {
        json j = to_json(b);
        j["graph"] = detail::describe_graph(g);
        j["mode"] = to_string(eo.mode);
        if (kind == DimKind::sdim) {
          json ps = json::array();
          for (const auto& p : engine.profiles(g)) ps.push_back(to_json(p));
          j["profiles"] = std::move(ps);
        }
        out << j.dump(2) << "\n";
      } else {
        print_bounds(out, g, b, o.explain);
        if (o.explain && kind == DimKind::sdim)
          for (const auto& p : engine.profiles(g)) out << "  radii " << p.describe() << "\n";
      }
      return b.exact() ? kExitOk : kExitInconclusive;
    }

    if (embed->parsed()) {
      EmbedRequest req;
      req.graph = load_graph(graph_arg);
      req.ambient_dim = embed_dim;
      req.on_sphere = on_sphere || radius.has_value();
      req.sphere_radius = radius;
      req.forbid_crossings = o.parsed_mode() == Mode::non_crossing;
      req.restarts = o.restarts;
      req.seed = o.seed;
      req.tolerance = o.tol;
      const EmbedResult r = find_embedding(req);
      if (o.json) {
        json j = {{"found", r.found}, {"status", r.status()}, {"restarts_tried", r.restarts_tried},
                  {"restart_index", r.restart_index}};
        if (r.embedding) {
          j["embedding"] = to_json(*r.embedding);
          j["certificate"] = to_json(r.report);
        }
        out << j.dump(2) << "\n";
      } else {
        out << r.status();
        if (r.found) out << " (restart " << r.restart_index << ")";
        out << "\n";
        if (r.embedding) {
          print_embedding(out, *r.embedding);
          char buf[128];
          std::snprintf(buf, sizeof buf, "max edge residual %.12g, min separation %.12g\n",
                        r.report.max_edge_residual, r.report.min_vertex_separation);
          out << buf;
          if (r.report.sphere_radius) out << "sphere radius " << format_radius(*r.report.sphere_radius) << "\n";
          if (!r.report.crossings.empty()) out << "crossings " << r.report.crossings.size() << "\n";
        }
      }
      if (!o.svg.empty() && r.embedding) {
        std::ofstream f(o.svg);
        if (!f) throw Error("cannot write '" + o.svg + "'");
        f << to_svg(*r.embedding);
      }
      return r.found ? kExitOk : kExitInconclusive;
    }

    if (minors->parsed()) {
      const Graph g = load_graph(graph_arg);
      const auto list = minor_closure(g, proper, true, o.cap);
      if (o.json) {
        json arr = json::array();
        for (const auto& h : list)
          arr.push_back({{"graph", detail::describe_graph(h)}, {"n", h.vertex_count()}, {"edges", edges_json(h)}});
        out << json{{"count", list.size()}, {"minors", std::move(arr)}}.dump(2) << "\n";
      } else {
        out << list.size() << " minors\n";
        for (const auto& h : list) out << "  " << detail::describe_graph(h) << "  " << to_string(h) << "\n";
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Graph g = load_graph(graph_arg);
      MinimalityOptions mo;
      mo.restarts = o.restarts;
      mo.seed = o.seed;
      mo.cap = o.cap;
      mo.target = target;
      const DimKind kind = kind_name == "sdim" ? DimKind::sdim : DimKind::dim;
      const MinimalityReport r = verify_minor_minimal(g, kind, o.parsed_mode(), mo);
      if (o.json) {
        out << to_json(r, o.failures_only).dump(2) << "\n";
      } else {
        out << to_string(r.verdict) << "\n";
        if (!o.failures_only)
          out << to_string(kind) << " " << format_bound(r.value) << ", " << r.minors_checked
              << " proper minors: " << r.engine_certified << " by bounds, " << r.inherited
              << " as subgraphs, " << r.embedder_certified << " by embedding\n";
        for (const auto& f : r.failures) out << "  failure " << f.description << ": " << f.reason << "\n";
        for (const auto& f : r.inconclusive_minors)
          out << "  inconclusive " << f.description << ": " << f.reason << "\n";
      }
      if (r.verdict == Verdict::inconclusive) return kExitInconclusive;
      return kExitOk;
    }

    if (rad->parsed()) {
      if (rpoly->parsed()) {
        const auto r = star_polygon_radius(pn, pm);
        out << (r ? fixed12(*r) : std::string("degenerate")) << "\n";
      } else if (rcone->parsed()) {
        out << fixed12(cone_radius(cr)) << "\n";
      } else if (rsimp->parsed()) {
        out << fixed12(simplex_radius(sn)) << "\n";
      } else if (riter->parsed()) {
        const auto r = iterate_cone_radius(cr, steps);
        if (r.diverged) out << "diverged at step " << r.steps << " (" << fixed12(r.value) << ")\n";
        else out << fixed12(r.value) << "\n";
      }
      return kExitOk;
    }

    if (tables->parsed()) {
      std::vector<TableSection> sections;
      if (which != "wheel") sections.push_back(polygon_table());
      if (which != "polygon") {
        const bool both = !mode_given;
        if (both || o.parsed_mode() == Mode::crossings) sections.push_back(wheel_table_crossings());
        if (both || o.parsed_mode() == Mode::non_crossing) sections.push_back(wheel_table_non_crossing());
      }
      bool ok = true;
      json arr = json::array();
      for (const auto& s : sections) {
        ok = ok && s.all_match();
        if (o.json) arr.push_back(table_json(s));
        else print_table(out, s);
      }
      if (o.json) out << json{{"match", ok}, {"tables", std::move(arr)}}.dump(2) << "\n";
      return ok ? kExitOk : kExitError;
    }

    if (petals->parsed()) {
      const auto sigs = petal_signatures(petal_n);
      json arr = json::array();
      for (std::size_t i = 0; i < sigs.size(); ++i) {
        std::string desc;
        for (auto c : sigs[i]) {
          if (!desc.empty()) desc += " U ";
          desc += c.cycle ? "C_" + std::to_string(c.edges) : "P_" + std::to_string(c.edges + 1);
        }
        const std::string lit = "PETAL:" + std::to_string(petal_n) + ":" + std::to_string(i);
        if (o.json) arr.push_back({{"literal", lit}, {"components", desc}, {"edges", edges_json(petal_graph(sigs[i]))}});
        else out << lit << "  " << desc << "\n";
      }
      if (o.json) out << arr.dump(2) << "\n";
      return kExitOk;
    }

    if (decompose->parsed()) {
      const Graph g = load_graph(graph_arg);
      const auto factors = join_decompose(g);
      const auto comps = connected_components(g);
      const auto fam = recognize(g);
      if (o.json) {
        json fs = json::array(), cs = json::array();
        for (const auto& f : factors) fs.push_back(detail::describe_graph(f));
        for (auto m : comps) cs.push_back(detail::describe_graph(induced_subgraph(g, m)));
        out << json{{"graph", detail::describe_graph(g)},
                    {"family", fam ? json(to_literal(*fam)) : json(nullptr)},
                    {"join_factors", std::move(fs)},
                    {"components", std::move(cs)}}
                   .dump(2)
            << "\n";
      } else {
        out << "graph " << to_string(g) << "\n";
        out << "family " << (fam ? to_literal(*fam) : std::string("none")) << "\n";
        out << "join factors " << factors.size() << "\n";
        for (const auto& f : factors) out << "  " << detail::describe_graph(f) << "\n";
        out << "components " << comps.size() << "\n";
        for (auto m : comps) out << "  " << detail::describe_graph(induced_subgraph(g, m)) << "\n";
      }
      return kExitOk;
    }
  } catch (const InconclusiveRootError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace unitdim::cli
