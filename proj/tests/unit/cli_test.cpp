#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "hypvol/families.hpp"
#include "hypvol/map_ops.hpp"
#include "hypvol/serialize.hpp"
#include "render.hpp"

using namespace hypvol;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line_of(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find(needle) != std::string::npos) return line;
  }
  return {};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hypvol_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Render, SixDigitsHalfEven) {
  EXPECT_EQ(cli::fixed6(0.0078125), "0.007812");
  EXPECT_EQ(cli::fixed6(0.0234375), "0.023438");
  EXPECT_EQ(cli::fixed6(-1e-9), "0.000000");
  EXPECT_EQ(cli::fixed6(16.0427423092), "16.042742");
  EXPECT_EQ(cli::number6(3.66386237670887).dump(), "3.663862");
}

TEST(Cli, Lobachevsky) {
  const Result r = run({"lob", "--theta", "0.7853981633974483"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.457983\n");
  const Result j = run({"--format", "json", "lob", "--theta", "0.7853981633974483"});
  EXPECT_EQ(json::parse(j.out)["value"].get<double>(), 0.457983);
}

TEST(Cli, Constants) {
  const Result r = run({"constants"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("v_tet 1.014942"), std::string::npos);
  EXPECT_NE(r.out.find("q14 12.046092"), std::string::npos);
}

TEST(Cli, TwoBridgeFiftyFiveSeventeenths) {
  const Result r = run({"link", "two-bridge", "--fraction", "55/17", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(line_of(r.out, "adams-twist").find("16.042742"), std::string::npos) << r.out;
  EXPECT_NE(line_of(r.out, "agol-thurston").find("20.298832"), std::string::npos);
  EXPECT_NE(line_of(r.out, "white-face").find("19.111120"), std::string::npos);
  EXPECT_NE(r.out.find("best upper: two-bridge-upper 14.655450"), std::string::npos);
  EXPECT_NE(r.out.find("t=3 c=11 white 3:2 4:3"), std::string::npos);
}

TEST(Cli, TwoBridgeJson) {
  const Result r = run({"--format", "json", "link", "two-bridge", "--fraction", "55/17", "--jones", "2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["input"]["continued_fraction"], json::array({3, 4, 4}));
  EXPECT_EQ(doc["census"]["t"], 3);
  EXPECT_EQ(doc["census"]["c"], 11);
  EXPECT_EQ(doc["best_upper"], "two-bridge-upper");
  const auto& warnings = doc["warnings"];
  EXPECT_TRUE(std::is_sorted(warnings.begin(), warnings.end()));
  bool saw_adams_twist = false;
  for (const auto& b : doc["bounds"]) {
    EXPECT_FALSE(b["citation"].get<std::string>().empty());
    EXPECT_EQ(b["applicable"].get<bool>(), b["value"].is_number()) << b["name"];
    if (b["name"] == "adams-twist") {
      saw_adams_twist = true;
      EXPECT_EQ(b["value"].get<double>(), 16.042742);
    }
  }
  EXPECT_TRUE(saw_adams_twist);
}

TEST(Cli, FlagsGateTwistReports) {
  Result r = run({"link", "twists", "--lengths", "3,4,4", "--bound", "adams-twist"});
  EXPECT_EQ(r.code, 3);
  r = run({"link", "twists", "--lengths", "3,4,4", "--alternating", "--reduced", "--not-borromean", "--bound",
           "adams-twist"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "adams-twist 16.042742\n");
  r = run({"link", "twists", "--lengths", "3,4,4", "--census", "3:2,4:3", "--bound", "white-face"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "white-face 19.111120\n");
}

TEST(Cli, PrismNineReport) {
  const Result r = run({"poly", "family", "--name", "prism", "--n", "9", "--bounds"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(line_of(r.out, "edge-triangle-trivalent").find("41.612606"), std::string::npos);
  EXPECT_NE(line_of(r.out, "prism-atkinson").find("42.134417"), std::string::npos);
  EXPECT_NE(r.out.find("best upper: edge-count 38.470555"), std::string::npos);
}

TEST(Cli, FamilyReportCarriesRectificationVolume) {
  const Result r = run({"--format", "json", "poly", "family", "--name", "two-apex-pyramid", "--n", "6", "--bounds"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  const double vol = doc["input"]["rectification_volume"].get<double>();
  for (const auto& b : doc["bounds"]) {
    if (!b["applicable"].get<bool>()) continue;
    if (b["kind"] == "upper") EXPECT_GE(b["value"].get<double>(), vol) << b["name"];
    else EXPECT_LE(b["value"].get<double>(), vol) << b["name"];
  }
}

TEST(Cli, EightVertexMedialIsFlagged) {
  const Result r = run({"poly", "family", "--name", "pyramid", "--n", "4", "--bounds"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("medial has 8 vertices"), std::string::npos);
}

TEST(Cli, MedialRoundTrip) {
  const auto cube_file = scratch("cube.json");
  const auto medial_file = scratch("medial.json");
  ASSERT_EQ(run({"poly", "family", "--name", "cube", "--out", cube_file.string()}).code, 0);
  ASSERT_EQ(run({"poly", "medial", "--file", cube_file.string(), "--out", medial_file.string()}).code, 0);
  const CombinatorialMap loaded = map_from_json(slurp(medial_file));
  EXPECT_EQ(validate_map(loaded), census_of(medial(cube())));
  EXPECT_TRUE(maps_isomorphic(loaded, medial(cube())));
  const Result g = run({"poly", "graph", "--file", medial_file.string()});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("V=12 E=24 F=14"), std::string::npos);
}

TEST(Cli, DualToStdout) {
  const auto file = scratch("prism5.json");
  ASSERT_EQ(run({"poly", "family", "--name", "prism", "--n", "5", "--out", file.string()}).code, 0);
  const Result r = run({"poly", "dual", "--file", file.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(maps_isomorphic(map_from_json(r.out), bipyramid(5)));
}

TEST(Cli, AugmentFromFractionAndFile) {
  const Result r = run({"--format", "json", "link", "augment", "--fraction", "55/17"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["white_census"], json({{"3", 2}, {"4", 3}}));
  EXPECT_EQ(doc["dark_faces"].size(), 6u);

  const auto file = scratch("diagram.json");
  std::ofstream(file) << diagram_to_json(two_bridge_diagram(13, 5));
  const Result f = run({"link", "augment", "--file", file.string()});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("white 3:2 4:2 5:2"), std::string::npos) << f.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lob"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "constants"}).code, 2);
  EXPECT_EQ(run({"link", "two-bridge", "--fraction", "4/2"}).code, 2);
  EXPECT_EQ(run({"link", "two-bridge", "--fraction", "55"}).code, 2);
  EXPECT_EQ(run({"link", "twists", "--lengths", "3,x"}).code, 2);
  EXPECT_EQ(run({"link", "twists", "--lengths", "3,4", "--census", "2:1"}).code, 2);
  EXPECT_EQ(run({"link", "augment"}).code, 2);
  EXPECT_EQ(run({"poly", "family", "--name", "dodecahedron"}).code, 2);
  EXPECT_EQ(run({"poly", "family", "--name", "pyramid"}).code, 2);
  EXPECT_EQ(run({"poly", "family", "--name", "pyramid", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"poly", "graph", "--file", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"poly", "family", "--name", "pyramid", "--n", "6", "--bound", "atkinson"}).code, 3);
  EXPECT_EQ(run({"poly", "family", "--name", "pyramid", "--n", "6", "--bound", "no-such-bound"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"darts":2,"alpha":[0,1],"sigma":[0,1]})";
  const Result r = run({"poly", "graph", "--file", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"--format", "json", "link", "two-bridge", "--fraction", "55/17"},
      {"link", "two-bridge", "--fraction", "89/34", "--jones", "5,4"},
      {"--format", "json", "poly", "family", "--name", "prism", "--n", "9", "--bounds"},
      {"poly", "family", "--name", "two-apex-pyramid", "--n", "7", "--bounds"},
      {"constants"},
  };
  for (const auto& c : commands) {
    const Result a = run(c);
    const Result b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}
