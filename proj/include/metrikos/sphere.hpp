#pragma once

#include <array>

#include "metrikos/point.hpp"

namespace metrikos {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
/// a . (b x c)
double triple_product(const Vec3& a, const Vec3& b, const Vec3& c);

/// A point of the unit sphere in R^3. Inputs whose norm is within 1e-9
/// of 1 are renormalized; anything else is rejected.
class SpherePoint {
 public:
  static constexpr double kAdmissionTol = 1e-9;

  SpherePoint(double x, double y, double z);
  explicit SpherePoint(const Vec3& v);
  explicit SpherePoint(const PointN& p);

  /// Normalizes any nonzero finite vector onto the sphere.
  static SpherePoint from_direction(const Vec3& v);

  const Vec3& vec() const noexcept { return v_; }
  double operator[](std::size_t i) const { return v_[i]; }
  PointN to_point() const { return PointN{v_[0], v_[1], v_[2]}; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  struct Normalized {};
  SpherePoint(Normalized, const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// A circle in R^3: center, radius and the unit normal of its plane.
struct Circle3D {
  Circle3D(PointN center, double radius, const Vec3& normal);

  PointN center;
  double radius;
  Vec3 normal;
};

/// A circle in the plane.
struct Circle2D {
  Circle2D(PointN center, double radius);

  PointN center;
  double radius;
};

/// Ambient Euclidean distance; lies in [0, 2].
double chord_distance(const SpherePoint& p, const SpherePoint& q);

/// Length of the shorter great-circle arc, 2 asin(chord / 2), in [0, pi].
double great_circle_distance(const SpherePoint& p, const SpherePoint& q);

/// Converts between chord and arc length on the unit sphere.
double chord_to_arc(double chord);
double arc_to_chord(double arc);

/// sin(t) / t, extended by 1 at t = 0.
double sinc(double t);

/// Largest delta <= 2 with arc <= (1 + epsilon) * chord whenever
/// chord < delta. Solved by bisection on t / sin t = 1 + epsilon over
/// (0, pi/2]; delta = 2 sin t.
double comparability_delta(double epsilon);

/// Radial projection of p onto c along the segment from p to c.center.
PointN circular_projection(const Circle2D& c, const PointN& p);

struct CircleExtrema {
  PointN nearest;
  PointN farthest;
};

/// Points of c at minimal and maximal distance from x. Throws
/// DegenerateError when x projects onto the circle's center, in which
/// case every circle point is equidistant from x.
CircleExtrema circle_extremal_points(const PointN& x, const Circle3D& c);

/// The circle of sphere points at the same distance from q as r.
/// Requires q and r to be neither equal nor antipodal.
Circle3D equidistant_circle(const SpherePoint& q, const SpherePoint& r);

/// The point r0 of that circle farthest from p. Returns r itself when the
/// circle collapses (q equal or antipodal to r). Throws DegenerateError
/// when p is equal or antipodal to q.
SpherePoint r0_construction(const SpherePoint& p, const SpherePoint& q,
                            const SpherePoint& r);

}  // namespace metrikos
