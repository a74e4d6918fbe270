#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metrikos/path_metrics.hpp"
#include "metrikos/point.hpp"

namespace metrikos {

/// Square matrix of finite reals. Symmetry and the zero diagonal are not
/// enforced here; verify_axioms checks them.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n);
  DistanceMatrix(std::size_t n, std::vector<double> entries);
  explicit DistanceMatrix(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value);

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Which distance function to evaluate, and on what carrier.
///
/// Plane-type metrics (Euclidean, Taxicab, Chebyshev, Discrete) act on
/// points of any common dimension; RealLine on dimension 1; GreatCircle
/// on unit vectors of R^3. GraphPath, PolylineArc and Matrix act on
/// indices, passed as 1-d points whose single coordinate is the vertex
/// (or row) number.
class MetricSpec {
 public:
  struct Euclidean {};
  struct Taxicab {};
  struct Chebyshev {};
  struct Discrete {};
  struct RealLine {};
  struct GreatCircle {};
  struct GraphPath {
    std::shared_ptr<const WeightedGraph> graph;
    /// All-pairs table, computed once; +inf marks disconnected pairs.
    std::shared_ptr<const std::vector<std::vector<double>>> table;
  };
  struct PolylineArc {
    std::shared_ptr<const Polyline> polyline;
  };
  struct Subspace {
    std::shared_ptr<const MetricSpec> base;
    std::vector<PointN> allowed;
  };
  struct Matrix {
    std::shared_ptr<const DistanceMatrix> matrix;
    std::vector<std::string> labels;
  };

  using Variant = std::variant<Euclidean, Taxicab, Chebyshev, Discrete, RealLine, GreatCircle,
                               GraphPath, PolylineArc, Subspace, Matrix>;

  static MetricSpec euclidean() { return MetricSpec(Euclidean{}); }
  static MetricSpec taxicab() { return MetricSpec(Taxicab{}); }
  static MetricSpec chebyshev() { return MetricSpec(Chebyshev{}); }
  static MetricSpec discrete() { return MetricSpec(Discrete{}); }
  static MetricSpec real_line() { return MetricSpec(RealLine{}); }
  static MetricSpec great_circle() { return MetricSpec(GreatCircle{}); }
  static MetricSpec graph_path(WeightedGraph graph);
  static MetricSpec polyline_arc(Polyline polyline);
  /// Labels default to "0".."n-1"; otherwise there must be n of them.
  static MetricSpec matrix(DistanceMatrix m, std::vector<std::string> labels = {});

  const Variant& variant() const noexcept { return v_; }
  std::string_view name() const noexcept;

 private:
  explicit MetricSpec(Variant v) : v_(std::move(v)) {}
  friend MetricSpec restrict(const MetricSpec&, std::vector<PointN>);
  Variant v_;
};

/// Parses a lowercase tag: euclidean, taxicab, chebyshev, discrete,
/// realline, greatcircle. Throws ParseError otherwise.
MetricSpec metric_from_tag(std::string_view tag);

/// The 1-d point naming vertex / row / polyline index i.
PointN index_point(std::size_t i);

/// Throws CarrierError (or DimensionMismatchError) unless x is in the
/// carrier of spec.
void check_carrier(const MetricSpec& spec, const PointN& x);

double distance(const MetricSpec& spec, const PointN& x, const PointN& y);

/// The metric of spec restricted to `allowed`.
MetricSpec restrict(const MetricSpec& spec, std::vector<PointN> allowed);

DistanceMatrix matrix_from_points(const MetricSpec& spec, const std::vector<PointN>& sample);

enum class Axiom { Symmetry, Nonnegativity, Identity, Triangle };

std::string_view axiom_name(Axiom a) noexcept;

/// One violated instance. Values are as evaluated:
///  - Symmetry      (i, j):    lhs = d(i, j), rhs = d(j, i)
///  - Nonnegativity (i, j):    lhs = d(i, j), rhs = 0
///  - Identity      (i, j):    lhs = d(i, j), rhs = 0; either the points
///                             coincide and lhs > abs_tol, or they differ
///                             and lhs <= abs_tol
///  - Triangle      (x, y, z): lhs = d(x, z), rhs = d(x, y) + d(y, z)
struct Witness {
  Axiom axiom;
  std::vector<std::size_t> indices;
  double lhs;
  double rhs;
};

struct AxiomReport {
  bool symmetry_ok = true;
  bool nonnegativity_ok = true;
  bool identity_ok = true;
  bool triangle_ok = true;
  std::vector<Witness> witnesses;

  bool all_ok() const noexcept {
    return symmetry_ok && nonnegativity_ok && identity_ok && triangle_ok;
  }
};

/// Exhaustive check of the metric axioms over `sample`: every ordered
/// pair for symmetry, nonnegativity and identity, every ordered triple
/// for the triangle inequality.
AxiomReport verify_axioms(const MetricSpec& spec, const std::vector<PointN>& sample,
                          const ToleranceConfig& tol = {});

/// Certifies a bare matrix over all of its rows.
AxiomReport verify_axioms(const DistanceMatrix& m, const ToleranceConfig& tol = {});

}  // namespace metrikos
