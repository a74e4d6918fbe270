#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "metrikos/metric.hpp"
#include "metrikos/point.hpp"
#include "metrikos/sphere.hpp"

namespace metrikos {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// x -> linear * x + offset on R^2.
struct PlaneMap {
  PlaneMap(const Mat2& linear, const std::array<double, 2>& offset);
  static PlaneMap identity();

  Mat2 linear;
  std::array<double, 2> offset;
};

namespace maps {
struct Translation {
  double a1, a2;
};
struct ReflectOrigin {};
struct ReflectX1 {};  ///< (x1, x2) -> (-x1, x2)
struct ReflectX2 {};  ///< (x1, x2) -> (x1, -x2)
struct SwapAxes {};
struct Rotation {
  double theta;
};
struct ReflectAboutPoint {
  double a1, a2;
};
}  // namespace maps

using MapTag = std::variant<maps::Translation, maps::ReflectOrigin, maps::ReflectX1, maps::ReflectX2,
                            maps::SwapAxes, maps::Rotation, maps::ReflectAboutPoint>;

PlaneMap named_map(const MapTag& tag);

/// x -> f(g(x))
PlaneMap compose(const PlaneMap& f, const PlaneMap& g);

/// An orthogonal map of R^3 (rotation or reflection through the origin).
class SphereMap {
 public:
  static constexpr double kOrthogonalityTol = 1e-9;

  /// Throws InvalidArgumentError unless linear^T linear = I within
  /// kOrthogonalityTol entrywise.
  explicit SphereMap(const Mat3& linear);
  static SphereMap identity();
  /// Right-handed rotation by `angle` about `axis`.
  static SphereMap rotation(const Vec3& axis, double angle);

  const Mat3& linear() const noexcept { return linear_; }
  double determinant() const noexcept;

 private:
  Mat3 linear_;
};

SphereMap compose(const SphereMap& f, const SphereMap& g);

/// An orthogonal map taking p to q: the rotation in the plane of p and q,
/// the identity when p == q, and a half-turn about an axis orthogonal to p
/// when they are antipodal.
SphereMap map_sending(const SpherePoint& p, const SpherePoint& q);

PointN apply(const PlaneMap& f, const PointN& p);
PointN apply(const SphereMap& f, const PointN& p);
SpherePoint apply(const SphereMap& f, const SpherePoint& p);

struct IsometryWitness {
  std::size_t i;
  std::size_t j;
  double before;  ///< d(x_i, x_j)
  double after;   ///< d(f(x_i), f(x_j))
};

struct IsometryVerdict {
  bool isometry;
  std::optional<IsometryWitness> witness;
};

/// Checks |d(f x, f y) - d(x, y)| <= abs_tol + rel_tol * d(x, y) over all
/// sample pairs. The witness is the first failing pair in (i, j) order.
IsometryVerdict is_isometry(const PlaneMap& f, const MetricSpec& spec,
                            const std::vector<PointN>& sample, const ToleranceConfig& tol = {});
IsometryVerdict is_isometry(const SphereMap& f, const MetricSpec& spec,
                            const std::vector<PointN>& sample, const ToleranceConfig& tol = {});

}  // namespace metrikos
