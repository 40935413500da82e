#include "funcbody/cli.hpp"
#include "funcbody/errors.hpp"
#include "funcbody/io.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace funcbody {
namespace {

using testing::Gen;
using testing::vec;

std::string data(const std::string& name) { return std::string(FUNCBODY_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content = {}) {
  const auto path = std::filesystem::temp_directory_path() / ("funcbody_test_" + name);
  if (!content.empty()) std::ofstream(path) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  setenv("FUNCBODY_LOG", "quiet", 1);
  args.insert(args.begin(), "funcbody");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kTwoDirections = R"({"directions": [[1, 0, 0], [0, 0, 1]]})";

TEST(Io, DumpFormatsDoublesWithSeventeenDigits) {
  io::Json j = io::Json::object();
  j["a"] = 0.1;
  j["b"] = 2.0;
  j["c"] = -0.0;
  j["d"] = std::nan("");
  j["e"] = io::Json::array({1.0, 0.5});
  j["f"] = "text";
  j["g"] = true;
  EXPECT_EQ(io::dump(j),
            "{\n  \"a\": 0.10000000000000001,\n  \"b\": 2.0,\n  \"c\": 0.0,\n  \"d\": null,\n"
            "  \"e\": [1.0, 0.5],\n  \"f\": \"text\",\n  \"g\": true\n}\n");
}

TEST(Io, PolytopeRoundTrip) {
  Gen g(71);
  for (int trial = 0; trial < 5; ++trial) {
    const Polytope p = convex_hull(g.cloud(3, 12));
    const Polytope q = io::parse_polytope(io::parse_text(io::dump(io::to_json(p))));
    ASSERT_EQ(p.vertices().size(), q.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      EXPECT_EQ((p.vertices()[i] - q.vertices()[i]).norm(), 0.0);
    }
    EXPECT_NEAR(volume(p), volume(q), 1e-14 * volume(p));
  }
}

TEST(Io, FunctionMeasureAndWeightRoundTrip) {
  Gen g(72);
  const PiecewiseAffineConvex u = act_add_constant(cone_function(g.body(3)), 0.25);
  const PiecewiseAffineConvex w = io::parse_function(io::parse_text(io::dump(io::to_json(u))));
  for (int k = 0; k < 20; ++k) {
    const Vector x = g.point(3, 2.0);
    EXPECT_EQ(u.evaluate(x), w.evaluate(x));
  }
  const DiscreteSphericalMeasure m = boundary_measure(g.body(3));
  const DiscreteSphericalMeasure m2 = io::parse_measure(io::parse_text(io::dump(io::to_json(m))));
  ASSERT_EQ(m.atoms().size(), m2.atoms().size());
  for (std::size_t i = 0; i < m.atoms().size(); ++i) {
    EXPECT_EQ(m.atoms()[i].weight, m2.atoms()[i].weight);
  }
  const WeightFunction zeta = g.weight();
  const WeightFunction z2 = io::parse_weight(io::parse_text(io::dump(io::to_json(zeta))));
  for (double t : {-1.0, 0.0, 0.3, 0.7, 1.5}) EXPECT_EQ(zeta(t), z2(t));
}

TEST(Io, NamedConstructors) {
  const PiecewiseAffineConvex cone = io::parse_function(io::load_file(data("cone_cube_shifted.json")));
  EXPECT_NEAR(cone.evaluate(vec({0.5, -0.25, 0.0})), 0.8, 1e-15);
  const PiecewiseAffineConvex ind = io::parse_function(
      io::parse_text(R"({"indicator": {"vertices": [[0,0],[1,0],[0,1]]}, "constant": 0.5})"));
  EXPECT_DOUBLE_EQ(ind.evaluate(vec({0.2, 0.2})), 0.5);
  EXPECT_TRUE(std::isinf(ind.evaluate(vec({1.0, 1.0}))));
  const WeightFunction tent = io::parse_weight(io::parse_text(R"({"tent": {"height": 2, "width": 4}})"));
  EXPECT_DOUBLE_EQ(tent(1.0), 1.5);
  const QuadratureConfig cfg =
      io::parse_config(io::parse_text(R"({"nodes": 6, "tolerance": 1e-9, "seed": 3})"));
  EXPECT_EQ(cfg.nodes, 6);
  EXPECT_EQ(cfg.tolerance, 1e-9);
  EXPECT_EQ(cfg.seed, 3u);
}

TEST(Io, MalformedInputRaisesParseError) {
  EXPECT_THROW(io::load_file(data("malformed.json")), ParseError);
  EXPECT_THROW(io::load_file(data("does_not_exist.json")), ParseError);
  EXPECT_THROW(io::parse_polytope(io::parse_text(R"({"vertex": []})")), ParseError);
  EXPECT_THROW(io::parse_polytope(io::parse_text(R"({"vertices": [[0, "x"]]})")), ParseError);
  EXPECT_THROW(io::parse_measure(io::parse_text(R"({"atoms": [{"dir": [1, 0]}]})")), ParseError);
  EXPECT_THROW(io::parse_weight(io::parse_text(R"({"values": [1, 0]})")), ParseError);
  EXPECT_THROW(io::parse_weight(io::parse_text(R"({"breakpoints": [0, 1], "values": [0, 1]})")),
               InvalidArgument);
}

TEST(Io, SupportCsvHasOneRowPerDirection) {
  const SupportBody body(std::vector<Vector>{vec({1, 0, 0}), vec({0, 0, 1})},
                         std::vector<double>{0.5, 0.25}, "test");
  std::ostringstream csv;
  io::write_support_csv(body, csv);
  std::istringstream lines(csv.str());
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
  EXPECT_NE(csv.str().find("0.5"), std::string::npos);
}

TEST(Cli, ClassicalProjectionBodyOfThePolytopeP) {
  const auto r = run({"classical", "--op", "projection-body", "--in", data("polytope_p.json"),
                      "--config", temp_file("dirs.json", kTwoDirections)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const io::Json j = io::parse_text(r.out);
  EXPECT_NEAR(j["support"]["values"][0].get<double>(), 0.5, 1e-14);
  EXPECT_NEAR(j["support"]["values"][1].get<double>(), 0.25, 1e-14);
  EXPECT_TRUE(j.contains("polytope"));
}

TEST(Cli, FunctionalProjectionBodyOfTheSimplexCone) {
  const auto r = run({"projection-body", "--zeta", data("tent.json"), "--fn",
                      data("cone_simplex3.json"), "--config", temp_file("dirs.json", kTwoDirections)});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const io::Json j = io::parse_text(r.out);
  // h(Pi T, e1) = 1/2 and the tent gives the factor (n - 1) m_1 = 1/3.
  EXPECT_NEAR(j["support"]["values"][0].get<double>(), 1.0 / 6.0, 1e-13);
  EXPECT_LE(j["error_estimate"].get<double>(), 1e-8);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"lyz-measure", "--zeta", data("tent.json"), "--fn",
                                      data("cone_cube_shifted.json")};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const std::string path = temp_file("lyz.json");
  std::vector<std::string> with_out = args;
  with_out.insert(with_out.end(), {"--out", path});
  ASSERT_EQ(run(with_out).code, kExitOk);
  EXPECT_EQ(slurp(path), a.out);
}

TEST(Cli, IndicatorCheckPasses) {
  const auto r = run({"check", "--kind", "indicator", "--zeta", data("tent.json"), "--poly",
                      data("cube.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(io::parse_text(r.out)["pass"].get<bool>());
}

TEST(Cli, ValuationAndGrowthChecks) {
  const auto v = run({"check", "--kind", "valuation", "--op", "difference-body", "--zeta",
                      data("tent.json"), "--fn", data("cone_cube.json"), "--fn",
                      data("cone_cube_shifted.json")});
  EXPECT_EQ(v.code, kExitOk) << v.err;
  const auto g = run({"check", "--kind", "growth", "--op", "level-set-body", "--zeta",
                      data("tent.json"), "--poly", data("simplex3.json")});
  EXPECT_EQ(g.code, kExitOk) << g.err;
  const auto rad = run({"check", "--kind", "radial", "--zeta", data("tent.json"), "--poly",
                        data("cube.json")});
  EXPECT_EQ(rad.code, kExitOk) << rad.err;
}

TEST(Cli, FailedCheckExitsWithOne) {
  const auto r = run({"check", "--kind", "equivariance", "--zeta", data("tent.json"), "--fn",
                      data("cone_simplex3.json"), "--check-tol", "1e-300"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_FALSE(io::parse_text(r.out)["pass"].get<bool>());
}

TEST(Cli, BadInputExitsWithTwo) {
  EXPECT_EQ(run({"classical", "--op", "Pi", "--in", data("malformed.json")}).code, kExitBadInput);
  EXPECT_EQ(run({"classical", "--op", "nonsense", "--in", data("cube.json")}).code, kExitBadInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(run({"projection-body", "--zeta", data("tent.json")}).code, kExitBadInput);
  EXPECT_EQ(run({"check", "--kind", "radial", "--zeta", data("tent.json"), "--poly",
                 data("simplex3.json")})
                .code,
            kExitBadInput);
  EXPECT_EQ(run({"projection-body", "--zeta", data("tent.json"), "--fn", data("cone_cube.json"),
                 "--nodes", "1"})
                .code,
            kExitBadInput);
}

TEST(Cli, NumericFailureExitsWithThree) {
  const std::string flat = temp_file("flat.json", R"({"vertices": [[0,0,0],[1,0,0],[0,1,0]]})");
  const auto r = run({"classical", "--op", "moment-body", "--in", flat});
  EXPECT_EQ(r.code, kExitNumeric);
}

TEST(Cli, EmitsPlotAndMesh) {
  const std::string csv = temp_file("plot.csv");
  const std::string off = temp_file("mesh.off");
  std::remove(csv.c_str());
  std::remove(off.c_str());
  ASSERT_EQ(run({"classical", "--op", "Pi", "--in", data("cube.json"), "--emit-plot", csv,
                 "--emit-mesh", off})
                .code,
            kExitOk);
  EXPECT_FALSE(slurp(csv).empty());
  const std::string mesh = slurp(off);
  ASSERT_GE(mesh.size(), 3u);
  EXPECT_EQ(mesh.substr(0, 3), "OFF");
}

}  // namespace
}  // namespace funcbody
