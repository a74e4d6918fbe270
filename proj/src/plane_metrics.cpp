#include "metrikos/plane_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "metrikos/error.hpp"

namespace metrikos {

double real_line_distance(double r, double t) {
  if (!std::isfinite(r) || !std::isfinite(t)) {
    throw InvalidArgumentError("real_line_distance: non-finite input");
  }
  return std::abs(r - t);
}

double euclidean_distance(const PointN& p, const PointN& q) {
  require_same_dim(p, q);
  double scale = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    scale = std::max(scale, std::abs(p[i] - q[i]));
  }
  if (scale == 0.0) return 0.0;
  // p_i - q_i can overflow to inf for coordinates near DBL_MAX.
  if (!std::isfinite(scale)) return scale;
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double r = std::abs(p[i] - q[i]) / scale;
    sum += r * r;
  }
  return scale * std::sqrt(sum);
}

double taxicab_distance(const PointN& p, const PointN& q) {
  require_same_dim(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) sum += std::abs(p[i] - q[i]);
  return sum;
}

double chebyshev_distance(const PointN& p, const PointN& q) {
  require_same_dim(p, q);
  double m = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

double discrete_distance(const PointN& p, const PointN& q) {
  require_same_dim(p, q);
  return p == q ? 0.0 : 1.0;
}

}  // namespace metrikos
