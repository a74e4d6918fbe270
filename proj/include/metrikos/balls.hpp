#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metrikos/metric.hpp"
#include "metrikos/point.hpp"

namespace metrikos {

/// Open ball {x : d(center, x) < radius}.
struct Ball {
  Ball(MetricSpec metric, PointN center, double radius);

  MetricSpec metric;
  PointN center;
  double radius;
};

bool ball_contains(const Ball& b, const PointN& x);

struct NestingResult {
  bool holds;
  std::optional<PointN> witness;  ///< a probe in B(q, t) but not in B(p, r)
};

/// Checks B(q, t) within B(p, r) on the given probes. Requires
/// d(p, q) < r and 0 < t <= r - d(p, q); violations of that are errors,
/// so a false verdict always points at a broken triangle inequality.
NestingResult check_nesting(const MetricSpec& metric, const PointN& p, double r, const PointN& q,
                            double t, const std::vector<PointN>& probes);

/// Level set {x : d(center, x) = radius} of a plane metric, traced
/// counterclockwise from center + (radius, 0).
struct BoundaryPolyline {
  MetricSpec metric;
  PointN center;
  double radius;
  std::vector<PointN> samples;
};

/// Euclidean gives a regular n-gon inscribed in the circle. Taxicab gives
/// the diamond and Chebyshev the square, sampled on their exact edges with
/// every corner included. Other metrics throw InvalidArgumentError.
BoundaryPolyline ball_boundary(const MetricSpec& metric, const PointN& center, double radius,
                               std::size_t n);

}  // namespace metrikos
