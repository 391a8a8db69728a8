#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "unitdim/io.hpp"

using namespace unitdim;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unitdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path, std::ios::binary) << body;
  return path.string();
}

}  // namespace

TEST(GraphText, RoundTripIsByteIdentical) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    const std::string text = serialize_graph_text(g);
    EXPECT_EQ(serialize_graph_text(parse_graph_text(text)), text);
    EXPECT_EQ(parse_graph_text(text), g);
  }
}

TEST(GraphText, ErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("3\n0 1\n1 x\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3\n0 1\n0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("3\n0 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("3\n1 1\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("").find("line 1"), std::string::npos);
  EXPECT_NE(message("abc\n").find("line 1"), std::string::npos);
}

TEST(Json, EmbeddingRoundTrip) {
  const auto e = star_polygon_embedding(5, 2);
  const auto back = embedding_from_json(to_json(e));
  EXPECT_EQ(back.graph, e.graph);
  EXPECT_EQ(back.ambient_dim, 2);
  EXPECT_LT((back.coords - e.coords).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Json, BoundsAndReports) {
  const auto b = dimension_bounds(cycle_graph(6), DimKind::sdim, Mode::crossings);
  const auto j = to_json(b);
  EXPECT_EQ(j["lower"], 3);
  EXPECT_EQ(j["upper"], 3);
  ASSERT_FALSE(j["certificates"].empty());
  EXPECT_TRUE(j["certificates"][0].contains("anchor"));
  EXPECT_EQ(bound_json(kNegInf), "-inf");
  EXPECT_TRUE(bound_json(kUnknown).is_null());
  const auto rep = to_json(validate(star_polygon_embedding(5, 2)));
  EXPECT_EQ(rep["crossings"].size(), 5u);
}

TEST(Cli, DimOfW6) {
  const auto r = run({"dim", "W:6:1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, PolygonRadius) {
  const auto r = run({"radius", "polygon", "6", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.000000000000\n");
  EXPECT_EQ(run({"radius", "cone", "0.5"}).out, "0.577350269190\n");
  EXPECT_EQ(run({"radius", "polygon", "6", "2"}).out, "degenerate\n");
  EXPECT_EQ(run({"radius", "polygon", "6", "3"}).code, 1);
}

TEST(Cli, Tables) {
  const auto r = run({"tables", "wheel", "--mode", "crossings"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
  EXPECT_EQ(run({"tables"}).code, 0);
  const auto j = run({"tables", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(json::accept(j.out));
}

TEST(Cli, ParseErrorNamesLine) {
  const auto path = temp_file("unitdim_bad_graph.txt", "4\n0 1\n2 2\n");
  const auto r = run({"dim", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, GraphFileInput) {
  const auto path = temp_file("unitdim_k4.txt", serialize_graph_text(complete_graph(4)));
  const auto r = run({"dim", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  std::filesystem::remove(path);
}

TEST(Cli, UnknownLiteralListsTags) {
  const auto r = run({"dim", "Q:5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("W:n:k"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("PETAL:n:i"), std::string::npos) << r.err;
}

TEST(Cli, InconclusiveExitsTwo) {
  Graph pet(10);
  for (int i = 0; i < 5; ++i) {
    pet.add_edge(i, (i + 1) % 5);
    pet.add_edge(i, i + 5);
    pet.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  const auto path = temp_file("unitdim_petersen.txt", serialize_graph_text(pet));
  const auto d = run({"dim", path});
  EXPECT_EQ(d.code, 2);
  EXPECT_EQ(d.out.front(), '[');
  EXPECT_EQ(run({"verify-minimal", path}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyMinimal) {
  const auto r = run({"verify-minimal", "K:4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("minimal"), std::string::npos);
  const auto j = run({"verify-minimal", "W:6:1", "--json", "--failures-only"});
  EXPECT_EQ(j.code, 0);
  const auto parsed = json::parse(j.out);
  EXPECT_EQ(parsed["verdict"], "not_minimal");
}

TEST(Cli, EmbedIsSeedStable) {
  const auto a = run({"embed", "W:7:1", "-d", "3", "--seed", "5", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto b = run({"embed", "W:7:1", "-d", "3", "--seed", "5", "--json"});
  EXPECT_EQ(a.out, b.out);
  setenv("UNITDIM_THREADS", "1", 1);
  const auto c = run({"embed", "W:7:1", "-d", "3", "--seed", "5", "--json"});
  unsetenv("UNITDIM_THREADS");
  EXPECT_EQ(a.out, c.out);
  const auto parsed = json::parse(a.out);
  EXPECT_TRUE(parsed.contains("coords") || parsed.contains("embedding"));
}

TEST(Cli, EmbedInconclusive) {
  const auto r = run({"embed", "K:4", "-d", "2", "--restarts", "5"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, EmbedSvg) {
  const auto path = (std::filesystem::temp_directory_path() / "unitdim_w6.svg").string();
  const auto r = run({"embed", "W:6:1", "-d", "2", "--svg", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_NE(ss.str().find("<svg"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SubcommandsRun) {
  EXPECT_EQ(run({"sdim", "C:6"}).out, "3\n");
  EXPECT_EQ(run({"sdim", "C:7", "--mode", "non-crossing"}).out, "3\n");
  EXPECT_EQ(run({"minors", "K:3", "--proper"}).code, 0);
  EXPECT_EQ(run({"petals", "3"}).code, 0);
  EXPECT_EQ(run({"decompose", "W:6:2"}).code, 0);
  EXPECT_EQ(run({"radius", "simplex", "3"}).out, "0.577350269190\n");
  EXPECT_EQ(run({"radius", "iterate", "0.5", "2"}).out, "0.612372435696\n");
  EXPECT_NE(run({}).code, 0);
  EXPECT_NE(run({"dim"}).code, 0);
}
