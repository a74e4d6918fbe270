#include "metrikos/balls.hpp"

#include <cmath>
#include <numbers>
#include <variant>

#include "metrikos/error.hpp"

namespace metrikos {

namespace {

void require_radius(double r, const char* what) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidArgumentError(std::string(what) + " must be positive and finite");
  }
}

/// Splits n samples over `edges` edges as evenly as possible.
std::size_t edge_count(std::size_t n, std::size_t edges, std::size_t k) {
  return n / edges + (k < n % edges ? 1 : 0);
}

/// Magnitudes (r (1 - m/c), r m/c) summing to exactly r: the larger part
/// is rounded and the smaller one is r minus it, exact by Sterbenz.
std::pair<double, double> split_exact(double r, std::size_t m, std::size_t c) {
  if (2 * m >= c) {
    const double v = r * (static_cast<double>(m) / static_cast<double>(c));
    return {r - v, v};
  }
  const double u = r * (static_cast<double>(c - m) / static_cast<double>(c));
  return {u, r - u};
}

std::vector<PointN> diamond(const PointN& center, double r, std::size_t n) {
  std::vector<PointN> out;
  out.reserve(n);
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t c = edge_count(n, 4, k);
    for (std::size_t m = 0; m < c; ++m) {
      auto [u, v] = split_exact(r, m, c);
      // Edge k runs from the vertex on axis k to the vertex on axis k+1.
      double x = 0, y = 0;
      switch (k) {
        case 0: x = u, y = v; break;
        case 1: x = -v, y = u; break;
        case 2: x = -u, y = -v; break;
        default: x = v, y = -u; break;
      }
      out.push_back(PointN{center[0] + x, center[1] + y});
    }
  }
  return out;
}

std::vector<PointN> square(const PointN& center, double r, std::size_t n) {
  // Eight half-edges, each starting at an axis point or a corner.
  static constexpr int start[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                      {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::vector<PointN> out;
  out.reserve(n);
  for (std::size_t k = 0; k < 8; ++k) {
    const std::size_t c = edge_count(n, 8, k);
    const int* a = start[k];
    const int* b = start[(k + 1) % 8];
    for (std::size_t m = 0; m < c; ++m) {
      const double lambda = static_cast<double>(m) / static_cast<double>(c);
      // One coordinate stays at +-r along each half-edge; the other moves
      // between 0 and +-r, so |moving| <= r holds after rounding.
      double xy[2];
      for (int i = 0; i < 2; ++i) {
        if (a[i] == b[i]) {
          xy[i] = a[i] * r;
        } else if (a[i] == 0) {
          xy[i] = b[i] * (r * lambda);
        } else {
          xy[i] = a[i] * (r * (1.0 - lambda));
        }
      }
      out.push_back(PointN{center[0] + xy[0], center[1] + xy[1]});
    }
  }
  return out;
}

std::vector<PointN> circle(const PointN& center, double r, std::size_t n) {
  std::vector<PointN> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    out.push_back(PointN{center[0] + r * std::cos(a), center[1] + r * std::sin(a)});
  }
  return out;
}

}  // namespace

Ball::Ball(MetricSpec m, PointN c, double r) : metric(std::move(m)), center(std::move(c)), radius(r) {
  require_radius(radius, "ball radius");
  check_carrier(metric, center);
}

bool ball_contains(const Ball& b, const PointN& x) {
  check_carrier(b.metric, x);
  return distance(b.metric, b.center, x) < b.radius;
}

NestingResult check_nesting(const MetricSpec& metric, const PointN& p, double r, const PointN& q,
                            double t, const std::vector<PointN>& probes) {
  require_radius(r, "outer radius");
  require_radius(t, "inner radius");
  check_carrier(metric, p);
  check_carrier(metric, q);
  const double dpq = distance(metric, p, q);
  if (!(dpq < r)) throw InvalidArgumentError("check_nesting: q is not inside B(p, r)");
  if (t > r - dpq) throw InvalidArgumentError("check_nesting: t exceeds r - d(p, q)");
  for (const PointN& x : probes) {
    check_carrier(metric, x);
    if (distance(metric, q, x) < t && !(distance(metric, p, x) < r)) {
      return {false, x};
    }
  }
  return {true, std::nullopt};
}

BoundaryPolyline ball_boundary(const MetricSpec& metric, const PointN& center, double radius,
                               std::size_t n) {
  require_radius(radius, "boundary radius");
  if (center.dim() != 2) throw DimensionMismatchError("ball boundaries are traced in the plane");
  if (n < 8) throw InvalidArgumentError("ball boundary needs at least 8 samples");
  std::vector<PointN> samples;
  const auto& v = metric.variant();
  if (std::holds_alternative<MetricSpec::Euclidean>(v)) {
    samples = circle(center, radius, n);
  } else if (std::holds_alternative<MetricSpec::Taxicab>(v)) {
    samples = diamond(center, radius, n);
  } else if (std::holds_alternative<MetricSpec::Chebyshev>(v)) {
    samples = square(center, radius, n);
  } else {
    throw InvalidArgumentError("no plane boundary curve for metric '" + std::string(metric.name()) +
                               "'");
  }
  return {metric, center, radius, std::move(samples)};
}

}  // namespace metrikos
