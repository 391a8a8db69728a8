#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unitdim/embedder.hpp"
#include "unitdim/engine.hpp"
#include "unitdim/families.hpp"
#include "unitdim/minimality.hpp"

namespace unitdim {

using json = nlohmann::json;

// Graph text format: first line n, then one "u v" pair per line, 0-indexed
// with u < v, edges ascending, LF line ends.
inline Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  Graph g;
  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string extra;
      if (!(ls >> n) || (ls >> extra)) fail("expected the vertex count");
      if (n < 0 || n > Graph::kMaxVertices) fail("vertex count out of range");
      g = empty_graph(n);
      continue;
    }
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) fail("expected an edge 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u == v) fail("self loop");
    if (g.adjacent(u, v)) fail("duplicate edge");
    g.add_edge(u, v);
  }
  if (n < 0) {
    lineno = std::max(lineno, 1);
    fail("missing vertex count");
  }
  return g;
}

inline std::string serialize_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph_text(ss.str());
}

// A family literal, or else the path of a graph file.
inline Graph load_graph(const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) return read_graph_file(arg);
  return graph_from_literal(arg);
}

// ---------------------------------------------------------------------------
// JSON

inline json edges_json(const Graph& g) {
  json out = json::array();
  for (auto [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

inline json to_json(const Embedding& e) {
  json coords = json::array();
  for (int i = 0; i < e.coords.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < e.coords.cols(); ++j) row.push_back(e.coords(i, j));
    coords.push_back(std::move(row));
  }
  return {{"ambient_dim", e.ambient_dim},
          {"coords", std::move(coords)},
          {"graph", {{"n", e.graph.vertex_count()}, {"edges", edges_json(e.graph)}}}};
}

inline Embedding embedding_from_json(const json& j) {
  Embedding e;
  e.ambient_dim = j.at("ambient_dim").get<int>();
  const json& gj = j.at("graph");
  e.graph = empty_graph(gj.at("n").get<int>());
  for (const auto& ed : gj.at("edges")) e.graph.add_edge(ed.at(0).get<int>(), ed.at(1).get<int>());
  const json& c = j.at("coords");
  e.coords.resize(static_cast<Eigen::Index>(c.size()), e.ambient_dim);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int k = 0; k < e.ambient_dim; ++k) e.coords(i, k) = c.at(i).at(k).get<double>();
  return e;
}

inline json to_json(const CertificateReport& r) {
  json out = {{"valid", r.valid},
              {"max_edge_residual", r.max_edge_residual},
              {"min_vertex_separation", r.min_vertex_separation},
              {"reason", r.reason}};
  out["sphere_deviation"] = r.sphere_deviation ? json(*r.sphere_deviation) : json(nullptr);
  out["sphere_radius"] = r.sphere_radius ? json(*r.sphere_radius) : json(nullptr);
  json cr = json::array();
  for (auto& [a, b] : r.crossings) cr.push_back({{a.first, a.second}, {b.first, b.second}});
  out["crossings"] = std::move(cr);
  json ve = json::array();
  for (auto& [v, e] : r.vertex_on_edge) ve.push_back({v, {e.first, e.second}});
  out["vertex_on_edge"] = std::move(ve);
  return out;
}

inline json bound_json(int v) {
  if (v == kNegInf) return "-inf";
  if (v == kUnknown) return nullptr;
  return v;
}

inline json to_json(const Certificate& c) {
  return {{"bound", c.bound}, {"value", bound_json(c.value)}, {"rule", c.rule},
          {"anchor", c.anchor}, {"inputs", c.inputs}};
}

inline json to_json(const DimensionBounds& b) {
  json certs = json::array();
  for (const auto& c : b.certificates) certs.push_back(to_json(c));
  return {{"kind", to_string(b.kind)}, {"lower", bound_json(b.lower)},
          {"upper", bound_json(b.upper)}, {"exact", b.exact()}, {"certificates", std::move(certs)}};
}

inline json to_json(const MinorFinding& f) {
  return {{"minor", f.description}, {"n", f.minor.vertex_count()}, {"edges", edges_json(f.minor)},
          {"reason", f.reason}};
}

inline json to_json(const MinimalityReport& r, bool failures_only = false) {
  json out = {{"graph", detail::describe_graph(r.graph)},
              {"kind", to_string(r.kind)},
              {"mode", to_string(r.mode)},
              {"value", bound_json(r.value)},
              {"verdict", to_string(r.verdict)},
              {"minors_checked", r.minors_checked}};
  json fails = json::array(), inc = json::array();
  for (const auto& f : r.failures) fails.push_back(to_json(f));
  for (const auto& f : r.inconclusive_minors) inc.push_back(to_json(f));
  out["failures"] = std::move(fails);
  out["inconclusive"] = std::move(inc);
  if (!failures_only) {
    out["engine_certified"] = r.engine_certified;
    out["inherited"] = r.inherited;
    out["embedder_certified"] = r.embedder_certified;
  }
  return out;
}

inline json to_json(const RadiusProfile& p) {
  json pieces = json::array();
  for (const auto& piece : p.pieces) {
    if (piece.unspecified) {
      pieces.push_back({{"unspecified", true}, {"rule", piece.rule}});
      continue;
    }
    pieces.push_back({{"lo", piece.lo}, {"hi", piece.hi}, {"lo_closed", piece.lo_closed},
                      {"hi_closed", piece.hi_closed}, {"rule", piece.rule}});
  }
  return {{"sphere_dim", p.sphere_dim}, {"complete", p.complete}, {"pieces", std::move(pieces)}};
}

// ---------------------------------------------------------------------------
// SVG: projection onto the first two coordinates.

inline std::string to_svg(const Embedding& e, int size = 400) {
  const int n = e.graph.vertex_count();
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  auto xy = [&](int v) {
    const double x = e.ambient_dim >= 1 ? e.coords(v, 0) : 0.0;
    const double y = e.ambient_dim >= 2 ? e.coords(v, 1) : 0.0;
    return std::pair{x, y};
  };
  for (int v = 0; v < n; ++v) {
    auto [x, y] = xy(v);
    if (v == 0 || x < minx) minx = x;
    if (v == 0 || x > maxx) maxx = x;
    if (v == 0 || y < miny) miny = y;
    if (v == 0 || y > maxy) maxy = y;
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double margin = 20.0;
  const double scale = (size - 2 * margin) / span;
  auto px = [&](double x) { return margin + (x - minx) * scale; };
  auto py = [&](double y) { return size - margin - (y - miny) * scale; };
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\">\n", size, size);
  out += buf;
  for (auto [u, v] : e.graph.edges()) {
    auto [x1, y1] = xy(u);
    auto [x2, y2] = xy(v);
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\"/>\n",
                  px(x1), py(y1), px(x2), py(y2));
    out += buf;
  }
  for (int v = 0; v < n; ++v) {
    auto [x, y] = xy(v);
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.3f\" cy=\"%.3f\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n"
                  "  <text x=\"%.3f\" y=\"%.3f\" font-size=\"10\">%d</text>\n",
                  px(x), py(y), px(x) + 5, py(y) - 5, v);
    out += buf;
  }
  return out + "</svg>\n";
}

}  // namespace unitdim
