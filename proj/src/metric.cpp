#include "metrikos/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "metrikos/error.hpp"
#include "metrikos/plane_metrics.hpp"
#include "metrikos/sphere.hpp"

namespace metrikos {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t require_index(const PointN& x, std::size_t n, const char* what) {
  if (x.dim() != 1) {
    throw DimensionMismatchError(std::string(what) + " points are 1-d indices");
  }
  const double c = x[0];
  if (c < 0.0 || c != std::floor(c) || c >= static_cast<double>(n)) {
    throw CarrierError(std::string(what) + " index " + x.to_string() + " out of range");
  }
  return static_cast<std::size_t>(c);
}

void require_dim(const PointN& x, std::size_t dim, const char* what) {
  if (x.dim() != dim) {
    throw DimensionMismatchError(std::string(what) + " expects points of dimension " +
                                 std::to_string(dim));
  }
}

bool contains(const std::vector<PointN>& set, const PointN& x) {
  return std::find(set.begin(), set.end(), x) != set.end();
}

}  // namespace

DistanceMatrix::DistanceMatrix(std::size_t n) : DistanceMatrix(n, std::vector<double>(n * n, 0.0)) {}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw InvalidArgumentError("distance matrix must be at least 1x1");
  if (entries_.size() != n_ * n_) throw InvalidArgumentError("distance matrix must be square");
  for (double e : entries_) {
    if (!std::isfinite(e)) throw InvalidArgumentError("distance matrix entries must be finite");
  }
}

DistanceMatrix::DistanceMatrix(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
  if (n_ == 0) throw InvalidArgumentError("distance matrix must be at least 1x1");
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgumentError("distance matrix must be square");
    for (double e : row) {
      if (!std::isfinite(e)) throw InvalidArgumentError("distance matrix entries must be finite");
      entries_.push_back(e);
    }
  }
}

void DistanceMatrix::set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) throw InvalidArgumentError("distance matrix entries must be finite");
  entries_.at(i * n_ + j) = value;
}

MetricSpec MetricSpec::graph_path(WeightedGraph graph) {
  auto g = std::make_shared<const WeightedGraph>(std::move(graph));
  auto table = std::make_shared<const std::vector<std::vector<double>>>(all_pairs_distances(*g));
  return MetricSpec(GraphPath{std::move(g), std::move(table)});
}

MetricSpec MetricSpec::polyline_arc(Polyline polyline) {
  return MetricSpec(PolylineArc{std::make_shared<const Polyline>(std::move(polyline))});
}

MetricSpec MetricSpec::matrix(DistanceMatrix m, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < m.size(); ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != m.size()) {
    throw InvalidArgumentError("label count must equal matrix size");
  }
  return MetricSpec(Matrix{std::make_shared<const DistanceMatrix>(std::move(m)), std::move(labels)});
}

std::string_view MetricSpec::name() const noexcept {
  return std::visit(Overloaded{
                        [](const Euclidean&) { return std::string_view("euclidean"); },
                        [](const Taxicab&) { return std::string_view("taxicab"); },
                        [](const Chebyshev&) { return std::string_view("chebyshev"); },
                        [](const Discrete&) { return std::string_view("discrete"); },
                        [](const RealLine&) { return std::string_view("realline"); },
                        [](const GreatCircle&) { return std::string_view("greatcircle"); },
                        [](const GraphPath&) { return std::string_view("graph"); },
                        [](const PolylineArc&) { return std::string_view("polyline"); },
                        [](const Subspace&) { return std::string_view("subspace"); },
                        [](const Matrix&) { return std::string_view("matrix"); },
                    },
                    v_);
}

MetricSpec metric_from_tag(std::string_view tag) {
  if (tag == "euclidean") return MetricSpec::euclidean();
  if (tag == "taxicab") return MetricSpec::taxicab();
  if (tag == "chebyshev") return MetricSpec::chebyshev();
  if (tag == "discrete") return MetricSpec::discrete();
  if (tag == "realline") return MetricSpec::real_line();
  if (tag == "greatcircle") return MetricSpec::great_circle();
  throw ParseError("unknown metric tag '" + std::string(tag) + "'");
}

PointN index_point(std::size_t i) { return PointN{static_cast<double>(i)}; }

void check_carrier(const MetricSpec& spec, const PointN& x) {
  std::visit(Overloaded{
                 [](const MetricSpec::Euclidean&) {},
                 [](const MetricSpec::Taxicab&) {},
                 [](const MetricSpec::Chebyshev&) {},
                 [](const MetricSpec::Discrete&) {},
                 [&](const MetricSpec::RealLine&) { require_dim(x, 1, "realline"); },
                 [&](const MetricSpec::GreatCircle&) { SpherePoint{x}; },
                 [&](const MetricSpec::GraphPath& g) {
                   require_index(x, g.graph->vertex_count(), "graph");
                 },
                 [&](const MetricSpec::PolylineArc& p) {
                   require_index(x, p.polyline->size(), "polyline");
                 },
                 [&](const MetricSpec::Subspace& s) {
                   if (!contains(s.allowed, x)) {
                     throw CarrierError("point " + x.to_string() + " is outside the subspace");
                   }
                 },
                 [&](const MetricSpec::Matrix& m) { require_index(x, m.matrix->size(), "matrix"); },
             },
             spec.variant());
}

double distance(const MetricSpec& spec, const PointN& x, const PointN& y) {
  return std::visit(
      Overloaded{
          [&](const MetricSpec::Euclidean&) { return euclidean_distance(x, y); },
          [&](const MetricSpec::Taxicab&) { return taxicab_distance(x, y); },
          [&](const MetricSpec::Chebyshev&) { return chebyshev_distance(x, y); },
          [&](const MetricSpec::Discrete&) { return discrete_distance(x, y); },
          [&](const MetricSpec::RealLine&) {
            require_dim(x, 1, "realline");
            require_dim(y, 1, "realline");
            return real_line_distance(x[0], y[0]);
          },
          [&](const MetricSpec::GreatCircle&) {
            return great_circle_distance(SpherePoint{x}, SpherePoint{y});
          },
          [&](const MetricSpec::GraphPath& g) {
            const std::size_t u = require_index(x, g.graph->vertex_count(), "graph");
            const std::size_t v = require_index(y, g.graph->vertex_count(), "graph");
            const double d = (*g.table)[u][v];
            if (std::isinf(d)) {
              throw InfiniteDistanceError("vertices " + std::to_string(u) + " and " +
                                          std::to_string(v) + " are disconnected");
            }
            return d;
          },
          [&](const MetricSpec::PolylineArc& p) {
            return polyline_arc_distance(*p.polyline, require_index(x, p.polyline->size(), "polyline"),
                                         require_index(y, p.polyline->size(), "polyline"));
          },
          [&](const MetricSpec::Subspace& s) {
            check_carrier(spec, x);
            check_carrier(spec, y);
            return distance(*s.base, x, y);
          },
          [&](const MetricSpec::Matrix& m) {
            const std::size_t i = require_index(x, m.matrix->size(), "matrix");
            const std::size_t j = require_index(y, m.matrix->size(), "matrix");
            return (*m.matrix)(i, j);
          },
      },
      spec.variant());
}

MetricSpec restrict(const MetricSpec& spec, std::vector<PointN> allowed) {
  if (allowed.empty()) throw InvalidArgumentError("restrict: allowed set is empty");
  for (const PointN& p : allowed) check_carrier(spec, p);
  for (const PointN& p : allowed) require_same_dim(allowed.front(), p);
  return MetricSpec(MetricSpec::Subspace{std::make_shared<const MetricSpec>(spec), std::move(allowed)});
}

DistanceMatrix matrix_from_points(const MetricSpec& spec, const std::vector<PointN>& sample) {
  if (sample.empty()) throw InvalidArgumentError("matrix_from_points: empty sample");
  for (const PointN& p : sample) check_carrier(spec, p);
  DistanceMatrix m(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      m.set(i, j, distance(spec, sample[i], sample[j]));
    }
  }
  return m;
}

std::string_view axiom_name(Axiom a) noexcept {
  switch (a) {
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Nonnegativity: return "nonnegativity";
    case Axiom::Identity: return "identity";
    case Axiom::Triangle: return "triangle";
  }
  return "?";
}

namespace {

AxiomReport certify(const DistanceMatrix& d, const std::vector<PointN>* sample,
                    const ToleranceConfig& tol) {
  AxiomReport report;
  const std::size_t n = d.size();
  auto same_point = [&](std::size_t i, std::size_t j) {
    return i == j || (sample != nullptr && (*sample)[i] == (*sample)[j]);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = d(i, j);
      if (i < j) {
        const double dji = d(j, i);
        const double slack = tol.abs_tol + tol.rel_tol * std::max(std::abs(dij), std::abs(dji));
        if (std::abs(dij - dji) > slack) {
          report.symmetry_ok = false;
          report.witnesses.push_back({Axiom::Symmetry, {i, j}, dij, dji});
        }
      }
      if (dij < 0.0) {
        report.nonnegativity_ok = false;
        report.witnesses.push_back({Axiom::Nonnegativity, {i, j}, dij, 0.0});
      }
      const bool zero = std::abs(dij) <= tol.abs_tol;
      if (zero != same_point(i, j)) {
        report.identity_ok = false;
        report.witnesses.push_back({Axiom::Identity, {i, j}, dij, 0.0});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double dxy = d(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const double dyz = d(y, z);
        const double dxz = d(x, z);
        const double rhs = dxy + dyz;
        const double scale = std::max({std::abs(dxy), std::abs(dyz), std::abs(dxz)});
        if (dxz > rhs + tol.abs_tol + tol.rel_tol * scale) {
          report.triangle_ok = false;
          report.witnesses.push_back({Axiom::Triangle, {x, y, z}, dxz, rhs});
        }
      }
    }
  }
  return report;
}

}  // namespace

AxiomReport verify_axioms(const MetricSpec& spec, const std::vector<PointN>& sample,
                          const ToleranceConfig& tol) {
  tol.validate();
  if (sample.empty()) throw InvalidArgumentError("verify_axioms: empty sample");
  for (const PointN& p : sample) check_carrier(spec, p);
  const std::size_t n = sample.size();
  DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d.set(i, j, distance(spec, sample[i], sample[j]));
  }
  return certify(d, &sample, tol);
}

AxiomReport verify_axioms(const DistanceMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  return certify(m, nullptr, tol);
}

}  // namespace metrikos
