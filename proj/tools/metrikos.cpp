// metrikos: command-line front end for the metric toolkit.
//
// Exit codes: 0 success / certified pass, 1 certified failure (axiom or
// isometry violation), 2 usage or input error, 3 output file not writable.

#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metrikos/balls.hpp"
#include "metrikos/error.hpp"
#include "metrikos/format.hpp"
#include "metrikos/io.hpp"
#include "metrikos/isometry.hpp"
#include "metrikos/metric.hpp"
#include "metrikos/path_metrics.hpp"
#include "metrikos/svg.hpp"

namespace {

using namespace metrikos;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr std::size_t kMaxWitnessesShown = 10;

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string metric;
  std::string p, q;
  std::string graph_file;
  std::string matrix_file;
  std::string points_file;
  std::size_t random_count = 0;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double abs_tol = ToleranceConfig{}.abs_tol;
  double rel_tol = ToleranceConfig{}.rel_tol;
  std::string center = "0,0";
  double radius = 1.0;
  std::size_t samples = 256;
  std::string out;
  std::string map;
  std::size_t width = 0, height = 0;
  std::string from, to;
};

ToleranceConfig tolerances(const Options& o) {
  ToleranceConfig tol{o.abs_tol, o.rel_tol};
  tol.validate();
  return tol;
}

MetricSpec resolve_metric(const Options& o) {
  if (o.metric == "graph") {
    if (o.graph_file.empty()) throw ParseError("--metric graph needs --graph FILE");
    return MetricSpec::graph_path(io::parse_graph_json(io::read_file(o.graph_file)));
  }
  if (o.metric == "matrix") {
    if (o.matrix_file.empty()) throw ParseError("--metric matrix needs --matrix FILE");
    auto lm = io::parse_matrix_csv(io::read_file(o.matrix_file));
    return MetricSpec::matrix(std::move(lm.matrix), std::move(lm.labels));
  }
  return metric_from_tag(o.metric);
}

std::vector<PointN> random_sample(const MetricSpec& spec, std::size_t count, std::size_t dim,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PointN> out;
  const auto name = spec.name();
  if (name == "greatcircle") {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (out.size() < count) {
      const double x = gauss(rng), y = gauss(rng), z = gauss(rng);
      const double n = std::sqrt(x * x + y * y + z * z);
      if (n < 1e-6) continue;
      out.push_back(PointN{x / n, y / n, z / n});
    }
    return out;
  }
  if (name == "realline") dim = 1;
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(dim);
    for (auto& v : c) v = coord(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

std::vector<PointN> resolve_sample(const MetricSpec& spec, const Options& o) {
  if (!o.points_file.empty()) return io::parse_point_set_json(io::read_file(o.points_file));
  if (o.random_count > 0) return random_sample(spec, o.random_count, o.dim, o.seed);
  if (const auto* g = std::get_if<MetricSpec::GraphPath>(&spec.variant())) {
    std::vector<PointN> all;
    for (std::size_t v = 0; v < g->graph->vertex_count(); ++v) all.push_back(index_point(v));
    return all;
  }
  throw ParseError("need --points FILE or --random N");
}

std::string witness_line(const Witness& w, const std::vector<std::string>& labels) {
  std::string ids = "(";
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    if (k) ids += ", ";
    const std::size_t i = w.indices[k];
    ids += i < labels.size() ? labels[i] : std::to_string(i);
  }
  ids += ")";
  const std::string lhs = format_number(w.lhs);
  const std::string rhs = format_number(w.rhs);
  switch (w.axiom) {
    case Axiom::Symmetry: return "symmetry " + ids + ": " + lhs + " != " + rhs;
    case Axiom::Nonnegativity: return "nonnegativity " + ids + ": " + lhs + " < 0";
    case Axiom::Identity: return "identity " + ids + ": d = " + lhs;
    case Axiom::Triangle: return "triangle " + ids + ": " + lhs + " > " + rhs;
  }
  return {};
}

int print_report(const AxiomReport& r, const std::vector<std::string>& labels) {
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  std::cout << "symmetry       " << verdict(r.symmetry_ok) << '\n'
            << "nonnegativity  " << verdict(r.nonnegativity_ok) << '\n'
            << "identity       " << verdict(r.identity_ok) << '\n'
            << "triangle       " << verdict(r.triangle_ok) << '\n';
  if (!r.witnesses.empty()) {
    const std::size_t shown = std::min(r.witnesses.size(), kMaxWitnessesShown);
    std::cout << r.witnesses.size() << " witness(es), showing " << shown << ":\n";
    for (std::size_t i = 0; i < shown; ++i) {
      std::cout << "  " << witness_line(r.witnesses[i], labels) << '\n';
    }
  }
  return r.all_ok() ? kExitOk : kExitFailed;
}

int cmd_dist(const Options& o) {
  const MetricSpec spec = resolve_metric(o);
  const PointN p = io::parse_point(o.p);
  const PointN q = io::parse_point(o.q);
  std::cout << format_number(distance(spec, p, q)) << '\n';
  return kExitOk;
}

int cmd_check(const Options& o) {
  const ToleranceConfig tol = tolerances(o);
  if (o.metric.empty() || o.metric == "matrix") {
    if (o.matrix_file.empty()) throw ParseError("check needs --matrix FILE or --metric TAG");
    const auto lm = io::parse_matrix_csv(io::read_file(o.matrix_file));
    return print_report(verify_axioms(lm.matrix, tol), lm.labels);
  }
  const MetricSpec spec = resolve_metric(o);
  return print_report(verify_axioms(spec, resolve_sample(spec, o), tol), {});
}

int cmd_ball_svg(const Options& o) {
  const MetricSpec spec = metric_from_tag(o.metric);
  const PointN center = io::parse_point(o.center);
  const BoundaryPolyline boundary = ball_boundary(spec, center, o.radius, o.samples);
  const std::string doc = svg::ball_figure(boundary).render();
  if (o.out.empty() || o.out == "-") {
    std::cout << doc;
  } else {
    try {
      io::write_file(o.out, doc);
    } catch (const Error& e) {
      throw OutputError(e.what());
    }
  }
  return kExitOk;
}

int cmd_isometry(const Options& o) {
  const ToleranceConfig tol = tolerances(o);
  const std::string text = !o.map.empty() && o.map.front() == '{' ? o.map : io::read_file(o.map);
  const io::AnyMap map = io::parse_map_json(text);
  const MetricSpec spec = resolve_metric(o);
  Options sampling = o;
  if (std::holds_alternative<SphereMap>(map)) sampling.dim = 3;
  const std::vector<PointN> sample = resolve_sample(spec, sampling);
  const IsometryVerdict v =
      std::visit([&](const auto& f) { return is_isometry(f, spec, sample, tol); }, map);
  if (v.isometry) {
    std::cout << "ISOMETRY\n";
    return kExitOk;
  }
  const IsometryWitness& w = *v.witness;
  std::cout << "NOT ISOMETRY\n"
            << "witness: points " << w.i << ' ' << sample[w.i].to_string() << " and " << w.j << ' '
            << sample[w.j].to_string() << ": before " << format_number(w.before) << ", after "
            << format_number(w.after) << '\n';
  return kExitFailed;
}

std::pair<std::size_t, std::size_t> lattice_point(const std::string& text, std::size_t width,
                                                  std::size_t height) {
  const PointN p = io::parse_point(text);
  if (p.dim() != 2) throw ParseError("lattice points are i,j");
  for (int k = 0; k < 2; ++k) {
    const std::size_t limit = k == 0 ? width : height;
    if (p[k] < 0 || p[k] != std::floor(p[k]) || p[k] >= static_cast<double>(limit)) {
      throw CarrierError("lattice point " + text + " is outside the grid");
    }
  }
  return {static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1])};
}

int cmd_grid(const Options& o) {
  const WeightedGraph g = grid_graph(o.width, o.height);
  const auto [i0, j0] = lattice_point(o.from, o.width, o.height);
  const auto [i1, j1] = lattice_point(o.to, o.width, o.height);
  const std::size_t u = grid_vertex(o.width, i0, j0);
  const std::size_t v = grid_vertex(o.width, i1, j1);
  std::cout << "distance: " << format_number(shortest_path_distance(g, u, v)) << '\n'
            << "geodesics: " << count_geodesics(g, u, v) << '\n';
  return kExitOk;
}

void add_tolerance_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--abs-tol", o.abs_tol, "Absolute tolerance")->capture_default_str();
  cmd->add_option("--rel-tol", o.rel_tol, "Relative tolerance")->capture_default_str();
}

void add_sample_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--points", o.points_file, "Point-set JSON file");
  cmd->add_option("--random", o.random_count, "Use N seeded random points instead of --points");
  cmd->add_option("--dim", o.dim, "Dimension of random points")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for random points")->capture_default_str();
  cmd->add_option("--graph", o.graph_file, "Graph JSON file (for --metric graph)");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"metrikos: metric-space toolkit"};
  app.require_subcommand(1);

  auto* dist = app.add_subcommand("dist", "Distance between two points");
  dist->add_option("--metric", o.metric,
                   "euclidean|taxicab|chebyshev|discrete|realline|greatcircle|graph|matrix")
      ->required();
  dist->add_option("-p", o.p, "First point, comma separated (vertex id for graph)")->required();
  dist->add_option("-q", o.q, "Second point")->required();
  dist->add_option("--graph", o.graph_file, "Graph JSON file");
  dist->add_option("--matrix", o.matrix_file, "Distance matrix CSV file");

  auto* check = app.add_subcommand("check", "Certify the metric axioms");
  check->add_option("--matrix", o.matrix_file, "Distance matrix CSV file");
  check->add_option("--metric", o.metric, "Metric tag for a point sample");
  add_sample_flags(check, o);
  add_tolerance_flags(check, o);

  auto* ball = app.add_subcommand("ball-svg", "Render a ball boundary as SVG");
  ball->add_option("--metric", o.metric, "euclidean|taxicab|chebyshev")->required();
  ball->add_option("--center", o.center, "Center x,y")->capture_default_str();
  ball->add_option("--radius", o.radius, "Radius")->capture_default_str();
  ball->add_option("--samples", o.samples, "Boundary samples")->capture_default_str();
  ball->add_option("--out", o.out, "Output file (stdout when omitted)");

  auto* iso = app.add_subcommand("isometry", "Test whether a map preserves a metric");
  iso->add_option("--map", o.map, "Map JSON, inline or a file path")->required();
  iso->add_option("--metric", o.metric, "Metric tag")->required();
  add_sample_flags(iso, o);
  add_tolerance_flags(iso, o);

  auto* grid = app.add_subcommand("grid", "Taxicab grid distance and geodesic count");
  grid->add_option("--width", o.width, "Grid width")->required();
  grid->add_option("--height", o.height, "Grid height")->required();
  grid->add_option("--from", o.from, "Source lattice point i,j")->required();
  grid->add_option("--to", o.to, "Target lattice point i,j")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) return cmd_dist(o);
    if (*check) return cmd_check(o);
    if (*ball) return cmd_ball_svg(o);
    if (*iso) return cmd_isometry(o);
    if (*grid) return cmd_grid(o);
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const metrikos::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
