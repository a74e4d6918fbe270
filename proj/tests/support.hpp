#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "metrikos/isometry.hpp"
#include "metrikos/path_metrics.hpp"
#include "metrikos/point.hpp"
#include "metrikos/sphere.hpp"

namespace metrikos::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline PointN random_point(Rng& rng, std::size_t dim, double lo = -10.0, double hi = 10.0) {
  std::vector<double> c(dim);
  for (auto& v : c) v = uniform(rng, lo, hi);
  return PointN(std::move(c));
}

inline std::vector<PointN> random_points(Rng& rng, std::size_t n, std::size_t dim) {
  std::vector<PointN> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, dim));
  return out;
}

inline Vec3 gaussian_vec3(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(rng), g(rng), g(rng)};
}

inline SpherePoint random_sphere_point(Rng& rng) {
  while (true) {
    const Vec3 v = gaussian_vec3(rng);
    if (norm(v) > 1e-6) return SpherePoint::from_direction(v);
  }
}

inline std::vector<PointN> random_sphere_points(Rng& rng, std::size_t n) {
  std::vector<PointN> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_sphere_point(rng).to_point());
  return out;
}

/// Gram-Schmidt on a Gaussian matrix; determinant +1 or -1 at random.
inline Mat3 random_orthogonal(Rng& rng) {
  std::array<Vec3, 3> rows{gaussian_vec3(rng), gaussian_vec3(rng), gaussian_vec3(rng)};
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < i; ++k) {
      const double d = dot(rows[i], rows[k]);
      for (int c = 0; c < 3; ++c) rows[i][c] -= d * rows[k][c];
    }
    const double n = norm(rows[i]);
    for (int c = 0; c < 3; ++c) rows[i][c] /= n;
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    for (int c = 0; c < 3; ++c) rows[2][c] = -rows[2][c];
  }
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) m[i][c] = rows[i][c];
  return m;
}

/// Random spanning tree plus `extra` chords. Lengths are integers in
/// [1, 9] when `integer`, otherwise reals in [0.1, 10).
inline WeightedGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra,
                                            bool integer = false) {
  auto length = [&] {
    return integer ? static_cast<double>(std::uniform_int_distribution<int>(1, 9)(rng))
                   : uniform(rng, 0.1, 10.0);
  };
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.push_back({u, v, length()});
    seen.emplace(u, v);
  }
  for (std::size_t k = 0; k < extra && n > 2; ++k) {
    std::size_t a = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    std::size_t b = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!seen.emplace(a, b).second) continue;
    edges.push_back({a, b, length()});
  }
  return WeightedGraph(n, std::move(edges));
}

inline Polyline random_polyline(Rng& rng, std::size_t n) {
  std::vector<PointN> v;
  while (v.size() < n) {
    PointN p = random_point(rng, 2);
    if (!v.empty() && v.back() == p) continue;
    v.push_back(std::move(p));
  }
  return Polyline(std::move(v));
}

}  // namespace metrikos::testing

#include <functional>
#include <numbers>
#include <string>

#include "metrikos/metric.hpp"

namespace metrikos::testing {

/// A metric together with ways to draw carrier points, used to build
/// random ball configurations.
struct MetricWorld {
  std::string label;
  MetricSpec spec;
  double scale;  ///< typical distance between carrier points
  std::function<PointN(Rng&)> any;
  /// A point drawn so that points within `radius` of `center` are likely.
  std::function<PointN(Rng&, const PointN& center, double radius)> near;
};

inline PointN random_index(Rng& rng, std::size_t n) {
  return index_point(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

inline std::vector<MetricWorld> builtin_worlds(Rng& rng) {
  std::vector<MetricWorld> out;
  auto box_near = [](Rng& r, const PointN& c, double rad) {
    std::vector<double> v(c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) v[i] = uniform(r, c[i] - rad, c[i] + rad);
    return PointN(std::move(v));
  };
  auto plane_any = [](Rng& r) { return random_point(r, 2); };
  out.push_back({"euclidean", MetricSpec::euclidean(), 10, plane_any, box_near});
  out.push_back({"taxicab", MetricSpec::taxicab(), 10, plane_any, box_near});
  out.push_back({"chebyshev", MetricSpec::chebyshev(), 10, plane_any, box_near});
  out.push_back({"realline", MetricSpec::real_line(), 10, [](Rng& r) { return random_point(r, 1); },
                 box_near});
  out.push_back({"discrete", MetricSpec::discrete(), 2, plane_any,
                 [](Rng& r, const PointN& c, double) {
                   return std::bernoulli_distribution(0.5)(r) ? c : random_point(r, 2);
                 }});
  out.push_back({"greatcircle", MetricSpec::great_circle(), std::numbers::pi,
                 [](Rng& r) { return random_sphere_point(r).to_point(); },
                 [](Rng& r, const PointN& c, double rad) {
                   // Exponential map at c along a random tangent direction.
                   const Vec3 p{c[0], c[1], c[2]};
                   Vec3 u = cross(p, gaussian_vec3(r));
                   const double un = norm(u);
                   for (double& x : u) x /= un;
                   const double a = uniform(r, 0.0, std::min(rad, std::numbers::pi));
                   return SpherePoint::from_direction({p[0] * std::cos(a) + u[0] * std::sin(a),
                                                       p[1] * std::cos(a) + u[1] * std::sin(a),
                                                       p[2] * std::cos(a) + u[2] * std::sin(a)})
                       .to_point();
                 }});
  const std::size_t grid_side = 10;
  out.push_back({"graph", MetricSpec::graph_path(grid_graph(grid_side, grid_side)), 18,
                 [=](Rng& r) { return random_index(r, grid_side * grid_side); },
                 [=](Rng& r, const PointN&, double) { return random_index(r, grid_side * grid_side); }});
  const std::size_t poly_n = 60;
  out.push_back({"polyline", MetricSpec::polyline_arc(random_polyline(rng, poly_n)), 300,
                 [=](Rng& r) { return random_index(r, poly_n); },
                 [=](Rng& r, const PointN&, double) { return random_index(r, poly_n); }});
  const std::size_t mat_n = 40;
  out.push_back({"matrix", MetricSpec::matrix(matrix_from_points(MetricSpec::euclidean(),
                                                                 random_points(rng, mat_n, 2))),
                 10, [=](Rng& r) { return random_index(r, mat_n); },
                 [=](Rng& r, const PointN&, double) { return random_index(r, mat_n); }});
  return out;
}

struct NestingConfig {
  PointN p;
  double r;
  PointN q;
  double t;
};

/// Draws p, r, q with d(p, q) < r and 0 < t <= r - d(p, q); one time in
/// four t takes the extreme value r - d(p, q).
inline NestingConfig random_nesting_config(Rng& rng, const MetricWorld& w) {
  while (true) {
    PointN p = w.any(rng);
    const double r = uniform(rng, 0.0, w.scale);
    if (!(r > 0)) continue;
    PointN q = std::bernoulli_distribution(0.1)(rng) ? p : w.near(rng, p, r);
    const double dpq = distance(w.spec, p, q);
    if (!(dpq < r)) continue;
    const double room = r - dpq;
    double t = std::bernoulli_distribution(0.25)(rng) ? room : uniform(rng, 0.0, room);
    if (!(t > 0)) continue;
    return {std::move(p), r, std::move(q), t};
  }
}

}  // namespace metrikos::testing

#include <limits>
#include <utility>

#include "metrikos/plane_metrics.hpp"

namespace metrikos::testing {

/// Dense sampling of the circle; returns (min, max) distance to x.
inline std::pair<double, double> brute_force_extrema(const PointN& x, const Circle3D& c, int samples) {
  const Vec3 n = c.normal;
  const Vec3 helper = std::abs(n[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 u = cross(n, helper);
  const double un = norm(u);
  for (double& v : u) v /= un;
  const Vec3 w = cross(n, u);
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (int k = 0; k < samples; ++k) {
    const double a = 2 * std::numbers::pi * k / samples;
    PointN p{c.center[0] + c.radius * (std::cos(a) * u[0] + std::sin(a) * w[0]),
             c.center[1] + c.radius * (std::cos(a) * u[1] + std::sin(a) * w[1]),
             c.center[2] + c.radius * (std::cos(a) * u[2] + std::sin(a) * w[2])};
    const double d = euclidean_distance(x, p);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

}  // namespace metrikos::testing
