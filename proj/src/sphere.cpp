#include "metrikos/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "metrikos/error.hpp"
#include "metrikos/plane_metrics.hpp"

namespace metrikos {

namespace {

constexpr double kDegenerateTol = 1e-12;

Vec3 to_vec3(const PointN& p) {
  if (p.dim() != 3) {
    throw DimensionMismatchError("expected a point of dimension 3");
  }
  return {p[0], p[1], p[2]};
}

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Vec3 unit(const Vec3& v, const char* what) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw InvalidArgumentError(std::string(what) + " must be a nonzero finite vector");
  }
  return scale(v, 1.0 / n);
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::hypot(a[0], a[1], a[2]); }

double triple_product(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

SpherePoint::SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

SpherePoint::SpherePoint(const Vec3& v) {
  const double n = norm(v);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kAdmissionTol) {
    throw CarrierError("point is not on the unit sphere");
  }
  v_ = scale(v, 1.0 / n);
}

SpherePoint::SpherePoint(const PointN& p) : SpherePoint(to_vec3(p)) {}

SpherePoint SpherePoint::from_direction(const Vec3& v) {
  return SpherePoint(Normalized{}, unit(v, "direction"));
}

Circle3D::Circle3D(PointN c, double r, const Vec3& n)
    : center(std::move(c)), radius(r), normal(unit(n, "circle normal")) {
  to_vec3(center);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgumentError("circle radius must be positive and finite");
  }
}

Circle2D::Circle2D(PointN c, double r) : center(std::move(c)), radius(r) {
  if (center.dim() != 2) {
    throw DimensionMismatchError("Circle2D center must have dimension 2");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgumentError("circle radius must be positive and finite");
  }
}

double chord_distance(const SpherePoint& p, const SpherePoint& q) {
  return euclidean_distance(p.to_point(), q.to_point());
}

double chord_to_arc(double chord) {
  if (!(chord >= 0.0)) throw InvalidArgumentError("chord length must be nonnegative");
  // Rounding can push a diameter slightly past 2.
  return 2.0 * std::asin(std::clamp(chord / 2.0, 0.0, 1.0));
}

double arc_to_chord(double arc) {
  if (!(arc >= 0.0)) throw InvalidArgumentError("arc length must be nonnegative");
  return 2.0 * std::sin(arc / 2.0);
}

double great_circle_distance(const SpherePoint& p, const SpherePoint& q) {
  const double chord = chord_distance(p, q);
  if (chord <= std::numbers::sqrt2) return chord_to_arc(chord);
  // Past a quarter turn asin loses accuracy; use the chord to -q instead.
  const PointN minus_q{-q[0], -q[1], -q[2]};
  const double supplement = euclidean_distance(p.to_point(), minus_q);
  return std::numbers::pi - 2.0 * std::asin(std::clamp(supplement / 2.0, 0.0, 1.0));
}

double sinc(double t) {
  if (!(t >= 0.0)) throw InvalidArgumentError("sinc: argument must be nonnegative");
  if (t == 0.0) return 1.0;
  return std::sin(t) / t;
}

double comparability_delta(double epsilon) {
  if (!(epsilon > 0.0)) {
    throw InvalidArgumentError("comparability_delta: epsilon must be positive");
  }
  constexpr double half_pi = std::numbers::pi / 2.0;
  // arc / chord = t / sin t with t = arc / 2, at most pi/2 on the sphere.
  if (epsilon >= half_pi - 1.0) return 2.0;
  const double target = 1.0 + epsilon;
  double lo = 0.0;  // ratio(lo) <= target
  double hi = half_pi;
  while (true) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (mid / std::sin(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 2.0 * std::sin(lo);
}

PointN circular_projection(const Circle2D& c, const PointN& p) {
  if (p.dim() != 2) throw DimensionMismatchError("circular_projection expects a 2-d point");
  if (p == c.center) {
    throw DegenerateError("circular projection is undefined at the center");
  }
  const double len = euclidean_distance(p, c.center);
  const double k = c.radius / len;
  return PointN{c.center[0] + k * (p[0] - c.center[0]), c.center[1] + k * (p[1] - c.center[1])};
}

CircleExtrema circle_extremal_points(const PointN& x, const Circle3D& c) {
  const Vec3 center = to_vec3(c.center);
  const Vec3 offset = sub(to_vec3(x), center);
  // Drop the component along the normal: this is x~ - center.
  const Vec3 in_plane = sub(offset, scale(c.normal, dot(offset, c.normal)));
  const double m = norm(in_plane);
  if (m <= kDegenerateTol * std::max(1.0, norm(offset))) {
    throw DegenerateError("point projects onto the circle center; all circle points are extremal");
  }
  const Vec3 u = scale(in_plane, 1.0 / m);
  const Vec3 a = add(center, scale(u, c.radius));
  const Vec3 b = sub(center, scale(u, c.radius));
  PointN pa{a[0], a[1], a[2]};
  PointN pb{b[0], b[1], b[2]};
  if (euclidean_distance(x, pa) <= euclidean_distance(x, pb)) {
    return {std::move(pa), std::move(pb)};
  }
  return {std::move(pb), std::move(pa)};
}

Circle3D equidistant_circle(const SpherePoint& q, const SpherePoint& r) {
  const double h = dot(q.vec(), r.vec());
  const Vec3 center = scale(q.vec(), h);
  const double radius = norm(sub(r.vec(), center));
  if (radius <= kDegenerateTol) {
    throw DegenerateError("q and r are equal or antipodal; the circle is a single point");
  }
  return Circle3D(PointN{center[0], center[1], center[2]}, radius, q.vec());
}

SpherePoint r0_construction(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r) {
  const Vec3 center = scale(q.vec(), dot(q.vec(), r.vec()));
  if (norm(sub(r.vec(), center)) <= kDegenerateTol) return r;
  const Circle3D a = equidistant_circle(q, r);
  const CircleExtrema ext = circle_extremal_points(p.to_point(), a);
  return SpherePoint(ext.farthest);
}

}  // namespace metrikos
