#include <gtest/gtest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <unistd.h>

#include <sstream>

#include "cli_runner.hpp"
#include "metrikos/io.hpp"
#include "support.hpp"

namespace metrikos {
namespace {

using testing::run_cli;

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { dir_ = testing::scratch_dir("metrikos-cli"); }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }
  static std::string file(const std::string& name, const std::string& text) {
    return testing::write_text(dir_ / name, text).string();
  }
  static inline std::filesystem::path dir_;
};

TEST_F(Cli, DistExamples) {
  auto r = run_cli({"dist", "--metric", "euclidean", "-p", "0,0", "-q", "1,1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "1.41421356237\n");
  r = run_cli({"dist", "--metric", "chebyshev", "-p", "0,0", "-q", "1,1"});
  EXPECT_EQ(r.out, "1\n");
  r = run_cli({"dist", "--metric", "taxicab", "-p", "0,0", "-q", "1,1"});
  EXPECT_EQ(r.out, "2\n");
  r = run_cli({"dist", "--metric", "greatcircle", "-p", "0,0,1", "-q", "0,0,-1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3.14159265359\n");
  r = run_cli({"dist", "--metric", "realline", "-p", "-2", "-q", "3"});
  EXPECT_EQ(r.out, "5\n");
}

TEST_F(Cli, DistOnGraphAndMatrix) {
  const auto g = file("g.json", R"({"vertices": 3, "edges": [[0, 1, 1.5], [1, 2, 2]]})");
  auto r = run_cli({"dist", "--metric", "graph", "--graph", g, "-p", "0", "-q", "2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "3.5\n");
  const auto m = file("m.csv", "a,b\n0,7\n7,0\n");
  r = run_cli({"dist", "--metric", "matrix", "--matrix", m, "-p", "0", "-q", "1"});
  EXPECT_EQ(r.out, "7\n");
}

TEST_F(Cli, DistUsageErrors) {
  EXPECT_EQ(run_cli({"dist", "--metric", "bogus", "-p", "0,0", "-q", "1,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"dist", "--metric", "euclidean", "-p", "0,0", "-q", "1,1,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"dist", "--metric", "euclidean", "-p", "0,x", "-q", "1,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"dist", "--metric", "euclidean", "-p", "0,0"}).exit_code, 2);
  EXPECT_EQ(run_cli({"dist", "--metric", "greatcircle", "-p", "0,0,2", "-q", "0,0,1"}).exit_code, 2);
  EXPECT_EQ(run_cli({"dist", "--metric", "graph", "-p", "0", "-q", "1"}).exit_code, 2);
  EXPECT_EQ(run_cli({}).exit_code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).exit_code, 2);
}

TEST_F(Cli, CheckMatrixExamples) {
  auto r = run_cli({"check", "--matrix", file("ok.csv", "0,1\n1,0\n")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("triangle       PASS"), std::string::npos);

  r = run_cli({"check", "--matrix", file("bad.csv", "0,1,4\n1,0,1\n4,1,0\n")});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("triangle       FAIL"), std::string::npos);
  EXPECT_NE(r.out.find("triangle (0, 1, 2): 4 > 2"), std::string::npos) << r.out;
}

TEST_F(Cli, CheckPointSets) {
  testing::Rng rng(601);
  const auto pts = file("pts.json", io::point_set_to_json(testing::random_points(rng, 64, 2)));
  EXPECT_EQ(run_cli({"check", "--metric", "taxicab", "--points", pts}).exit_code, 0);
  EXPECT_EQ(run_cli({"check", "--metric", "taxicab", "--random", "64", "--seed", "3"}).exit_code, 0);
  EXPECT_EQ(run_cli({"check", "--metric", "greatcircle", "--random", "32"}).exit_code, 0);
  const auto g = file("g2.json", R"({"vertices": 3, "edges": [[0, 1, 1], [1, 2, 1]]})");
  EXPECT_EQ(run_cli({"check", "--metric", "graph", "--graph", g}).exit_code, 0);
}

TEST_F(Cli, CheckErrors) {
  EXPECT_EQ(run_cli({"check", "--matrix", file("ns.csv", "0,1,2\n1,0\n")}).exit_code, 2);
  EXPECT_EQ(run_cli({"check", "--matrix", (dir_ / "missing.csv").string()}).exit_code, 2);
  EXPECT_EQ(run_cli({"check", "--metric", "taxicab", "--points", file("bad.json", "{")}).exit_code, 2);
  EXPECT_EQ(run_cli({"check"}).exit_code, 2);
}

TEST_F(Cli, IsometryExamples) {
  const std::string rot = R"({"map": "rotation", "theta": 0.7853981633974483})";
  auto r = run_cli({"isometry", "--metric", "euclidean", "--map", rot, "--random", "32"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "ISOMETRY\n");

  const auto two = file("two.json", R"({"dim": 2, "points": [[0, 0], [1, 0]]})");
  r = run_cli({"isometry", "--metric", "taxicab", "--map", rot, "--points", two});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out.rfind("NOT ISOMETRY\n", 0), 0u);
  EXPECT_NE(r.out.find("before 1, after 1.41421356237"), std::string::npos) << r.out;

  r = run_cli({"isometry", "--metric", "taxicab", "--map", R"({"map": "swap_axes"})", "--random", "32"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "ISOMETRY\n");

  const auto mapfile = file("map.json", R"({"map": "sphere", "matrix": [[0, -1, 0], [1, 0, 0], [0, 0, 1]]})");
  r = run_cli({"isometry", "--metric", "greatcircle", "--map", mapfile, "--random", "32"});
  EXPECT_EQ(r.exit_code, 0);
}

TEST_F(Cli, IsometryErrors) {
  EXPECT_EQ(run_cli({"isometry", "--metric", "taxicab", "--map", R"({"map": "shear"})", "--random", "4"})
                .exit_code,
            2);
  EXPECT_EQ(run_cli({"isometry", "--metric", "taxicab", "--map", "{bad", "--random", "4"}).exit_code, 2);
  EXPECT_EQ(run_cli({"isometry", "--metric", "taxicab", "--random", "4"}).exit_code, 2);
}

TEST_F(Cli, GridExamples) {
  auto r = run_cli({"grid", "--width", "10", "--height", "10", "--from", "0,0", "--to", "1,1"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "distance: 2\ngeodesics: 2\n");
  r = run_cli({"grid", "--width", "10", "--height", "10", "--from", "0,0", "--to", "2,2"});
  EXPECT_EQ(r.out, "distance: 4\ngeodesics: 6\n");
  r = run_cli({"grid", "--width", "10", "--height", "10", "--from", "0,0", "--to", "0,0"});
  EXPECT_EQ(r.out, "distance: 0\ngeodesics: 1\n");
  EXPECT_EQ(run_cli({"grid", "--width", "3", "--height", "3", "--from", "0,0", "--to", "5,5"}).exit_code, 2);
  EXPECT_EQ(run_cli({"grid", "--width", "0", "--height", "3", "--from", "0,0", "--to", "0,0"}).exit_code, 2);
}

std::string path_data(const std::string& svg) {
  std::istringstream in(svg);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  EXPECT_EQ(tree.get<std::string>("svg.<xmlattr>.version"), "1.1");
  for (const auto& [tag, child] : tree.get_child("svg"))
    if (tag == "path") return child.get<std::string>("<xmlattr>.d");
  return {};
}

TEST_F(Cli, BallSvgShapes) {
  const auto diamond = run_cli({"ball-svg", "--metric", "taxicab", "--radius", "1"});
  ASSERT_EQ(diamond.exit_code, 0);
  for (const char* v : {"360 200", "200 40", "40 200", "200 360"})
    EXPECT_NE(path_data(diamond.out).find(v), std::string::npos) << v;

  const auto out = (dir_ / "square.svg").string();
  ASSERT_EQ(run_cli({"ball-svg", "--metric", "chebyshev", "--radius", "1", "--out", out}).exit_code, 0);
  const std::string square = path_data(testing::read_text(out));
  for (const char* v : {"360 40", "40 40", "40 360", "360 360"})
    EXPECT_NE(square.find(v), std::string::npos) << v;

  const auto circle = run_cli({"ball-svg", "--metric", "euclidean", "--radius", "1"});
  ASSERT_EQ(circle.exit_code, 0);
  const std::string d = path_data(circle.out);
  EXPECT_EQ(std::count(d.begin(), d.end(), 'L'), 255);
  EXPECT_NE(d.find("M 360 200"), std::string::npos);
}

TEST_F(Cli, BallSvgErrors) {
  EXPECT_EQ(run_cli({"ball-svg", "--metric", "discrete"}).exit_code, 2);
  EXPECT_EQ(run_cli({"ball-svg", "--metric", "euclidean", "--radius", "-1"}).exit_code, 2);
  EXPECT_NE(run_cli({"ball-svg", "--metric", "euclidean", "--out", "/nonexistent/dir/x.svg"}).exit_code, 0);
}

TEST_F(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cmds = {
      {"check", "--metric", "euclidean", "--random", "20", "--seed", "9"},
      {"isometry", "--metric", "chebyshev", "--map", R"({"map": "rotation", "theta": 0.5})", "--random",
       "20", "--seed", "9"},
      {"ball-svg", "--metric", "euclidean", "--center", "1,-2", "--radius", "3"},
  };
  for (const auto& c : cmds) {
    const auto a = run_cli(c), b = run_cli(c);
    EXPECT_EQ(a.exit_code, b.exit_code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
  const auto s1 = run_cli({"isometry", "--metric", "chebyshev", "--map",
                           R"({"map": "rotation", "theta": 0.5})", "--random", "20", "--seed", "1"});
  const auto s2 = run_cli({"isometry", "--metric", "chebyshev", "--map",
                           R"({"map": "rotation", "theta": 0.5})", "--random", "20", "--seed", "2"});
  EXPECT_NE(s1.out, s2.out);
}

}  // namespace
}  // namespace metrikos
