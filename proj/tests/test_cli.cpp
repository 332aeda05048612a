#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ghgeom/cli.hpp"

using namespace ghgeom;
using nlohmann::json;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli");

namespace {

/// Scratch directory with the input files the subcommands consume; removed
/// on destruction so repeated runs stay clean.
struct CliFixture {
    fs::path dir;

    CliFixture() {
        dir = fs::temp_directory_path() / "ghgeom-cli-test";
        fs::create_directories(dir);
        write("space.json", R"({
            "labels": ["a", "b", "c"],
            "matrix": [[0, 1, 3], [1, 0, 2], [3, 2, 0]]
        })");
        write("a.json", R"({"members": ["a", "b"]})");
        write("b.json", R"(["b", "c"])");
        write("x.json", R"({"labels": ["p", "q"], "matrix": [[0, 3], [3, 0]]})");
        write("y.json", R"({"labels": ["r", "s"], "matrix": [[0, 5], [5, 0]]})");
        write("tree.json", R"({
            "vertices": ["u", "v"],
            "edges": [["u", "v", 10.0]]
        })");
        write("subset.json", R"({"vertices": ["u", "v"], "edge_points": [[0, 3.0]]})");
        write("left.json", R"({"edge_intervals": [[0, 0.0, 2.0]]})");
        write("right.json", R"({"edge_intervals": [[0, 8.0, 10.0]]})");
    }
    ~CliFixture() { fs::remove_all(dir); }

    void write(const std::string& name, const std::string& content) {
        std::ofstream f(dir / name);
        f << content;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
    json j;  // parsed stdout when it is JSON, else null
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    r.j = json::parse(r.out, nullptr, false);
    return r;
}

json parse_err(const RunResult& r) { return json::parse(r.err); }

}  // namespace

TEST_CASE("hausdorff subcommand reports both oriented halves") {
    CliFixture fx;
    RunResult r = run({"hausdorff", "--space", fx.path("space.json"), "--a", fx.path("a.json"),
                       "--b", fx.path("b.json")});
    REQUIRE(r.code == 0);
    CHECK(r.j["oriented_ab"] == 1.0);
    CHECK(r.j["oriented_ba"] == 2.0);
    CHECK(r.j["distance"] == 2.0);
}

TEST_CASE("hausdorff respects --out and --format csv") {
    CliFixture fx;
    SUBCASE("csv renders key,value rows") {
        RunResult r = run({"hausdorff", "--space", fx.path("space.json"), "--a",
                           fx.path("a.json"), "--b", fx.path("b.json"), "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("key,value\n", 0) == 0);
        CHECK(r.out.find("distance,2.0\n") != std::string::npos);
    }
    SUBCASE("--out writes the report to a file instead of stdout") {
        const std::string out_path = fx.path("report.json");
        RunResult r = run({"hausdorff", "--space", fx.path("space.json"), "--a",
                           fx.path("a.json"), "--b", fx.path("b.json"), "--out", out_path});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
        std::ifstream f(out_path);
        REQUIRE(f.good());
        json j = json::parse(f);
        CHECK(j["distance"] == 2.0);
    }
}

TEST_CASE("gh subcommand reports value and labeled witness") {
    CliFixture fx;
    RunResult r = run({"gh", "--x", fx.path("x.json"), "--y", fx.path("y.json")});
    REQUIRE(r.code == 0);
    CHECK(r.j["value"] == 1.0);
    CHECK(r.j["exact"] == true);
    json expected = json::array({json::array({"p", "r"}), json::array({"q", "s"})});
    CHECK(r.j["witness"] == expected);
    CHECK(!r.j.contains("nodes_explored"));

    RunResult stats = run({"gh", "--x", fx.path("x.json"), "--y", fx.path("y.json"), "--stats",
                           "--engine", "serial"});
    REQUIRE(stats.code == 0);
    CHECK(stats.j["value"] == 1.0);
    CHECK(stats.j["nodes_explored"].get<long long>() >= 0);
}

TEST_CASE("ultra subcommand reports matrix, classes and quotient") {
    CliFixture fx;
    RunResult r = run({"ultra", "--space", fx.path("space.json")});
    REQUIRE(r.code == 0);
    json u = json::array({json::array({0.0, 1.0, 2.0}), json::array({1.0, 0.0, 2.0}),
                          json::array({2.0, 2.0, 0.0})});
    CHECK(r.j["u_matrix"] == u);
    CHECK(r.j["classes"].size() == 3);
    CHECK(r.j["quotient"]["labels"].size() == 3);
    CHECK(r.j["connectivity_defect"] == 1.0);
    CHECK(!r.j.contains("t"));

    RunResult conn = run({"ultra", "--space", fx.path("space.json"), "--t", "2.0"});
    REQUIRE(conn.code == 0);
    CHECK(conn.j["t"] == 2.0);
    CHECK(conn.j["threshold_connected"] == true);

    RunResult cut = run({"ultra", "--space", fx.path("space.json"), "--t", "1.9"});
    REQUIRE(cut.code == 0);
    CHECK(cut.j["threshold_connected"] == false);
}

TEST_CASE("tree-report subcommand reproduces the segment instance") {
    CliFixture fx;
    RunResult r = run({"tree-report", "--tree", fx.path("tree.json"), "--subset",
                       fx.path("subset.json")});
    REQUIRE(r.code == 0);
    CHECK(r.j["d_h"] == 3.5);
    CHECK(r.j["u_diam"] == 7.0);
    CHECK(r.j["condition"] == "boundary-empty");
    CHECK(r.j["identity_checked"] == true);
    CHECK(r.j["identity_residual"] == 0.0);
    CHECK(r.j["pass"] == true);
    CHECK(!r.j.contains("gh_spot"));

    RunResult spot = run({"tree-report", "--tree", fx.path("tree.json"), "--subset",
                          fx.path("subset.json"), "--gh-check"});
    REQUIRE(spot.code == 0);
    CHECK(spot.j["gh_spot"] == 3.5);
}

TEST_CASE("geodesic subcommand slices between two interval unions") {
    CliFixture fx;
    RunResult r = run({"geodesic", "--tree", fx.path("tree.json"), "--a", fx.path("left.json"),
                       "--b", fx.path("right.json"), "--steps", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.j["d"] == 8.0);
    json grid = json::array({0.0, 2.0, 4.0, 6.0, 8.0});
    CHECK(r.j["grid"] == grid);
    CHECK(r.j["additive"] == true);
    CHECK(r.j["worst_residual"].get<double>() <= 1e-9);
    REQUIRE(r.j["slices"].size() == 5);
    CHECK(r.j["slices"][0] == json::parse(R"({"edge_intervals": [[0, 0.0, 2.0]]})"));

    RunResult grid_run = run({"geodesic", "--tree", fx.path("tree.json"), "--a",
                              fx.path("left.json"), "--b", fx.path("right.json"), "--grid",
                              "0,8"});
    REQUIRE(grid_run.code == 0);
    CHECK(grid_run.j["grid"] == json::array({0.0, 8.0}));
    CHECK(grid_run.j["pairwise"][0][1] == 8.0);
}

TEST_CASE("dt-check subcommand") {
    CliFixture fx;
    SUBCASE("small instance computes the cross gh bound") {
        RunResult r = run({"dt-check", "--space", fx.path("x.json"), "--t", "4.0"});
        REQUIRE(r.code == 0);
        CHECK(r.j["t"] == 4.0);
        CHECK(r.j["delta"] == 0.4);
        CHECK(r.j["threshold_connected"] == true);
        CHECK(r.j["complex_connected"] == true);
        CHECK(r.j["distortion_limit"] == 4.0);
        CHECK(r.j["distortion"].get<double>() <= 4.0 + 1e-9);
        REQUIRE(!r.j["gh_cross"].is_null());
        CHECK(r.j["gh_cross"].get<double>() <= r.j["gh_cross_limit"].get<double>() + 1e-9);
        CHECK(r.j["pass"] == true);
    }
    SUBCASE("oversized instances leave gh_cross null") {
        RunResult r = run({"dt-check", "--space", fx.path("space.json"), "--t", "3.0"});
        REQUIRE(r.code == 0);
        CHECK(r.j["gh_cross"].is_null());
        CHECK(r.j["pass"] == true);
    }
    SUBCASE("below the connectivity threshold both sides disconnect") {
        RunResult r = run({"dt-check", "--space", fx.path("x.json"), "--t", "1.0"});
        REQUIRE(r.code == 0);
        CHECK(r.j["threshold_connected"] == false);
        CHECK(r.j["complex_connected"] == false);
        CHECK(r.j["pass"] == true);
    }
}

TEST_CASE("verify subcommand is deterministic for a fixed seed") {
    auto scrub = [](json j) {
        j.erase("total_ms");
        for (json& c : j["criteria"]) {
            c.erase("runtime_ms");
            // The performance criterion scores wall-clock time, which is the
            // one legitimately nondeterministic field.
            if (c["name"] == "performance") c.erase("worst_residual");
        }
        return j;
    };
    RunResult first = run({"verify", "--seed", "7", "--trials", "2"});
    RunResult second = run({"verify", "--seed", "7", "--trials", "2"});
    REQUIRE(first.code == 0);
    REQUIRE(second.code == 0);
    CHECK(first.j["pass"] == true);
    CHECK(first.j["seed"] == 7);
    CHECK(first.j["trials_override"] == 2);
    REQUIRE(first.j["criteria"].size() == 10);
    for (const json& c : first.j["criteria"]) {
        CHECK(c["pass"] == true);
        CHECK(c["failures"] == 0);
    }
    CHECK(first.j["criteria"][0]["name"] == "delta1-identity");
    CHECK(first.j["criteria"][9]["name"] == "performance");
    CHECK(scrub(first.j) == scrub(second.j));
}

TEST_CASE("usage and domain errors exit with code 2 and a JSON error") {
    CliFixture fx;
    SUBCASE("missing required option") {
        RunResult r = run({"gh", "--x", fx.path("x.json")});
        CHECK(r.code == 2);
        CHECK(parse_err(r)["error"] == "usage-error");
    }
    SUBCASE("unknown subcommand") {
        RunResult r = run({"frobnicate"});
        CHECK(r.code == 2);
        CHECK(parse_err(r)["error"] == "usage-error");
    }
    SUBCASE("rejected format value") {
        RunResult r = run({"hausdorff", "--space", fx.path("space.json"), "--a",
                           fx.path("a.json"), "--b", fx.path("b.json"), "--format", "xml"});
        CHECK(r.code == 2);
        CHECK(parse_err(r)["error"] == "usage-error");
    }
    SUBCASE("missing input file") {
        RunResult r = run({"ultra", "--space", fx.path("no-such-file.json")});
        CHECK(r.code == 2);
        json e = parse_err(r);
        CHECK(e["error"] == "ParseError");
        CHECK(e["message"].get<std::string>().find("no-such-file") != std::string::npos);
    }
    SUBCASE("domain error surfaces the error kind") {
        fx.write("bad-subset.json", R"({"vertices": [], "edge_points": [[5, 1.0]]})");
        RunResult r = run({"tree-report", "--tree", fx.path("tree.json"), "--subset",
                           fx.path("bad-subset.json")});
        CHECK(r.code == 2);
        CHECK(parse_err(r)["error"] == "IndexOutOfRange");
    }
    SUBCASE("negative eps is rejected during validation") {
        RunResult r = run({"ultra", "--space", fx.path("space.json"), "--eps", "-1.0"});
        CHECK(r.code == 2);
        CHECK(parse_err(r)["error"] == "ValidationError");
    }
}

TEST_CASE("help exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hausdorff") != std::string::npos);
}

TEST_SUITE_END();
