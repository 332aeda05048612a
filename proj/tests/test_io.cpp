#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "ghgeom/io.hpp"

using namespace ghgeom;
using io::json;

namespace {

MetricTree y_tree() {
  return MetricTree{{"c", "a", "b", "d"},
                    {TreeEdge{0, 1, 2.0}, TreeEdge{0, 2, 3.0}, TreeEdge{0, 3, 4.0}}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("spaces round-trip through JSON") {
  FiniteMetricSpace s({"a", "b", "c"},
                      {{0.0, 1.0, 3.0}, {1.0, 0.0, 2.0}, {3.0, 2.0, 0.0}});
  json j = io::space_to_json(s);
  FiniteMetricSpace back = io::space_from_json(j);
  CHECK(back.labels() == s.labels());
  CHECK(back.matrix() == s.matrix());
  CHECK(back.eps() == s.eps());

  SUBCASE("eps is optional") {
    json bare{{"labels", {"a", "b"}}, {"matrix", {{0.0, 1.0}, {1.0, 0.0}}}};
    CHECK(io::space_from_json(bare).eps() == kDefaultEps);
    CHECK(io::space_from_json(bare, 1e-6).eps() == 1e-6);
  }

  SUBCASE("missing or malformed fields") {
    try {
      io::space_from_json(json{{"labels", {"a"}}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
    CHECK_THROWS_AS(io::space_from_json(json{{"labels", {"a", "b"}},
                                             {"matrix", {{0.0, 1.0}}}}),
                    Error);  // not square
    CHECK_THROWS_AS(io::space_from_json(json{{"labels", {"a"}}, {"matrix", {{"x"}}}}), Error);
  }
}

TEST_CASE("trees round-trip and accept labels or indices") {
  MetricTree t = y_tree();
  json j = io::tree_to_json(t);
  MetricTree back = io::tree_from_json(j);
  CHECK(back.vertex_labels() == t.vertex_labels());
  CHECK(back.edge_count() == 3);
  CHECK(back.vdist(1, 3) == 6.0);

  SUBCASE("indices as endpoints") {
    json byidx{{"vertices", {"x", "y"}}, {"edges", {{0, 1, 2.5}}}};
    MetricTree s = io::tree_from_json(byidx);
    CHECK(s.vdist(0, 1) == 2.5);
  }

  SUBCASE("unknown labels are parse errors") {
    json bad{{"vertices", {"x", "y"}}, {"edges", {{"x", "z", 1.0}}}};
    try {
      io::tree_from_json(bad);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }

  SUBCASE("malformed edge rows") {
    CHECK_THROWS_AS(io::tree_from_json(json{{"vertices", {"x", "y"}}, {"edges", {{0, 1}}}}),
                    Error);
  }
}

TEST_CASE("subsets round-trip") {
  MetricTree t = y_tree();
  json j{{"vertices", {"a", 2}}, {"edge_points", {{2, 1.5}}}};
  TreeSubsetX x = io::subset_from_json(j, t);
  REQUIRE(x.points.size() == 3);
  CHECK(x.points[0].vertex == 1);
  CHECK(x.points[1].vertex == 2);
  CHECK(x.points[2].edge == 2);
  CHECK(x.points[2].offset == 1.5);

  json out = io::subset_to_json(t, x);
  TreeSubsetX back = io::subset_from_json(out, t);
  CHECK(back.points.size() == 3);
  CHECK(back.points[2].offset == 1.5);

  SUBCASE("empty subsets and unknown vertices are rejected") {
    CHECK_THROWS_AS(io::subset_from_json(json::object(), t), Error);
    CHECK_THROWS_AS(io::subset_from_json(json{{"vertices", {"nope"}}}, t), Error);
  }

  SUBCASE("edge point offsets are validated") {
    try {
      io::subset_from_json(json{{"edge_points", {{0, 9.0}}}}, t);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfRange);
    }
  }
}

TEST_CASE("interval unions round-trip in canonical form") {
  MetricTree t = y_tree();
  json j{{"edge_intervals", {{0, 0.5, 1.0}, {0, 1.0, 1.5}, {1, 0.0, 2.0}}}};
  IntervalUnion s = io::intervals_from_json(j, t);
  // Touching pieces merge; the center vertex covered via edge 1 materializes
  // as a degenerate piece at the near end of edge 0 (and on edge 2).
  REQUIRE(s.on_edge(0).size() == 2);
  CHECK(s.on_edge(0)[0].lo == 0.0);
  CHECK(s.on_edge(0)[0].hi == 0.0);
  CHECK(s.on_edge(0)[1].lo == 0.5);
  CHECK(s.on_edge(0)[1].hi == 1.5);

  json out = io::intervals_to_json(s);
  IntervalUnion back = io::intervals_from_json(out, t);
  CHECK(back.piece_count() == s.piece_count());
  // The covered center vertex shows up as materialized degenerate pieces.
  CHECK(s.vertex_covered(0));

  SUBCASE("bad intervals") {
    try {
      io::intervals_from_json(json{{"edge_intervals", {{0, 1.0, 5.0}}}}, t);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfRange);
    }
    try {
      io::intervals_from_json(json{{"edge_intervals", {{7, 0.0, 1.0}}}}, t);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
    CHECK_THROWS_AS(io::intervals_from_json(json{{"edge_intervals", {{0, 1.5, 1.0}}}}, t),
                    Error);
  }
}

TEST_CASE("member lists accept labels, indices, and both shapes") {
  FiniteMetricSpace s({"a", "b", "c"},
                      {{0.0, 1.0, 3.0}, {1.0, 0.0, 2.0}, {3.0, 2.0, 0.0}});
  CHECK(io::members_from_json(json::parse(R"(["a", 2])"), s) == std::vector<int>{0, 2});
  CHECK(io::members_from_json(json{{"members", {"b"}}}, s) == std::vector<int>{1});
  CHECK_THROWS_AS(io::members_from_json(json::parse(R"(["zzz"])"), s), Error);
  CHECK_THROWS_AS(io::members_from_json(json{{"other", 1}}, s), Error);
}

TEST_CASE("files load and save") {
  const auto path = temp_file("ghgeom_io_test.json");
  io::save_text_file(path.string(), R"({"labels": ["a"], "matrix": [[0.0]]})");
  json j = io::load_json_file(path.string());
  CHECK(io::space_from_json(j).size() == 1);

  SUBCASE("parse failures carry the path") {
    std::ofstream(path) << "{not json";
    try {
      io::load_json_file(path.string());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(std::string(e.what()).find("ghgeom_io_test") != std::string::npos);
    }
  }

  SUBCASE("missing files") {
    CHECK_THROWS_AS(io::load_json_file("/nonexistent/nowhere.json"), Error);
  }

  std::filesystem::remove(path);
}

TEST_CASE("report rendering") {
  json j{{"value", 1.5}, {"name", "plain"}, {"nested", {1, 2}}, {"tricky", "a,b\"c"}};

  SUBCASE("json is pretty with a trailing newline") {
    std::string s = io::render_report(j, io::Format::Json);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"value\": 1.5") != std::string::npos);
  }

  SUBCASE("csv renders one row per field") {
    std::string s = io::render_report(j, io::Format::Csv);
    CHECK(s.find("key,value\n") == 0);
    CHECK(s.find("value,1.5") != std::string::npos);
    CHECK(s.find("name,plain") != std::string::npos);
    CHECK(s.find("nested,\"[1,2]\"") != std::string::npos);
    CHECK(s.find("tricky,\"a,b\"\"c\"") != std::string::npos);
  }

  SUBCASE("format names") {
    CHECK(io::format_from_string("json") == io::Format::Json);
    CHECK(io::format_from_string("csv") == io::Format::Csv);
    CHECK_THROWS_AS(io::format_from_string("xml"), Error);
  }
}

TEST_SUITE_END();
