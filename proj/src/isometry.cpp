#include "metrikos/isometry.hpp"

#include <cmath>

#include "metrikos/error.hpp"

namespace metrikos {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

template <class F>
IsometryVerdict certify_images(const F& f, const MetricSpec& spec, const std::vector<PointN>& sample,
                               const ToleranceConfig& tol) {
  tol.validate();
  std::vector<PointN> images;
  images.reserve(sample.size());
  for (const PointN& x : sample) {
    check_carrier(spec, x);
    PointN y = apply(f, x);
    check_carrier(spec, y);
    images.push_back(std::move(y));
  }
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      const double before = distance(spec, sample[i], sample[j]);
      const double after = distance(spec, images[i], images[j]);
      if (std::abs(after - before) > tol.abs_tol + tol.rel_tol * before) {
        return {false, IsometryWitness{i, j, before, after}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

PlaneMap::PlaneMap(const Mat2& l, const std::array<double, 2>& o) : linear(l), offset(o) {
  for (const auto& row : linear)
    for (double v : row)
      if (!std::isfinite(v)) throw InvalidArgumentError("plane map entries must be finite");
  for (double v : offset)
    if (!std::isfinite(v)) throw InvalidArgumentError("plane map entries must be finite");
}

PlaneMap PlaneMap::identity() { return PlaneMap({{{1, 0}, {0, 1}}}, {0, 0}); }

PlaneMap named_map(const MapTag& tag) {
  return std::visit(
      Overloaded{
          [](const maps::Translation& t) { return PlaneMap({{{1, 0}, {0, 1}}}, {t.a1, t.a2}); },
          [](const maps::ReflectOrigin&) { return PlaneMap({{{-1, 0}, {0, -1}}}, {0, 0}); },
          [](const maps::ReflectX1&) { return PlaneMap({{{-1, 0}, {0, 1}}}, {0, 0}); },
          [](const maps::ReflectX2&) { return PlaneMap({{{1, 0}, {0, -1}}}, {0, 0}); },
          [](const maps::SwapAxes&) { return PlaneMap({{{0, 1}, {1, 0}}}, {0, 0}); },
          [](const maps::Rotation& r) {
            const double c = std::cos(r.theta);
            const double s = std::sin(r.theta);
            return PlaneMap({{{c, -s}, {s, c}}}, {0, 0});
          },
          [](const maps::ReflectAboutPoint& a) {
            return PlaneMap({{{-1, 0}, {0, -1}}}, {2 * a.a1, 2 * a.a2});
          },
      },
      tag);
}

PlaneMap compose(const PlaneMap& f, const PlaneMap& g) {
  Mat2 l{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) l[i][j] = f.linear[i][0] * g.linear[0][j] + f.linear[i][1] * g.linear[1][j];
  std::array<double, 2> o{};
  for (int i = 0; i < 2; ++i) {
    o[i] = f.linear[i][0] * g.offset[0] + f.linear[i][1] * g.offset[1] + f.offset[i];
  }
  return PlaneMap(l, o);
}

SphereMap::SphereMap(const Mat3& linear) : linear_(linear) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!std::isfinite(linear_[i][j])) throw InvalidArgumentError("sphere map entries must be finite");
      double g = 0.0;
      for (int k = 0; k < 3; ++k) g += linear_[k][i] * linear_[k][j];
      if (std::abs(g - (i == j ? 1.0 : 0.0)) > kOrthogonalityTol) {
        throw InvalidArgumentError("sphere map must be orthogonal");
      }
    }
  }
}

SphereMap SphereMap::identity() { return SphereMap({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}); }

SphereMap SphereMap::rotation(const Vec3& axis, double angle) {
  const double n = norm(axis);
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgumentError("rotation axis must be nonzero");
  const double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  return SphereMap({{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
                     {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
                     {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}});
}

double SphereMap::determinant() const noexcept {
  const Mat3& m = linear_;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SphereMap compose(const SphereMap& f, const SphereMap& g) {
  return SphereMap(multiply(f.linear(), g.linear()));
}

SphereMap map_sending(const SpherePoint& p, const SpherePoint& q) {
  if (p == q) return SphereMap::identity();
  const Vec3 axis = cross(p.vec(), q.vec());
  if (norm(axis) > 1e-12) {
    return SphereMap::rotation(axis, std::atan2(norm(axis), dot(p.vec(), q.vec())));
  }
  if (dot(p.vec(), q.vec()) > 0.0) return SphereMap::identity();
  // Antipodal: half-turn about any unit axis orthogonal to p.
  const Vec3& v = p.vec();
  const Vec3 helper = std::abs(v[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  return SphereMap::rotation(cross(v, helper), std::acos(-1.0));
}

PointN apply(const PlaneMap& f, const PointN& p) {
  if (p.dim() != 2) throw DimensionMismatchError("plane maps act on 2-d points");
  return PointN{f.linear[0][0] * p[0] + f.linear[0][1] * p[1] + f.offset[0],
                f.linear[1][0] * p[0] + f.linear[1][1] * p[1] + f.offset[1]};
}

PointN apply(const SphereMap& f, const PointN& p) {
  if (p.dim() != 3) throw DimensionMismatchError("sphere maps act on 3-d points");
  const Mat3& m = f.linear();
  return PointN{m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2],
                m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2],
                m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2]};
}

SpherePoint apply(const SphereMap& f, const SpherePoint& p) {
  return SpherePoint(apply(f, p.to_point()));
}

IsometryVerdict is_isometry(const PlaneMap& f, const MetricSpec& spec,
                            const std::vector<PointN>& sample, const ToleranceConfig& tol) {
  return certify_images(f, spec, sample, tol);
}

IsometryVerdict is_isometry(const SphereMap& f, const MetricSpec& spec,
                            const std::vector<PointN>& sample, const ToleranceConfig& tol) {
  return certify_images(f, spec, sample, tol);
}

}  // namespace metrikos
