#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace metrikos {

/// A point of R^n with finite coordinates.
class PointN {
 public:
  PointN(std::initializer_list<double> coords);
  explicit PointN(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// Exact coordinate equality (no tolerance).
  friend bool operator==(const PointN&, const PointN&) = default;

  std::string to_string() const;

 private:
  std::vector<double> coords_;
};

void require_same_dim(const PointN& p, const PointN& q);

/// Tolerances used by the certifiers. The triangle test allows
/// abs_tol + rel_tol * (largest distance involved) of rounding slack.
struct ToleranceConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-12;

  /// Throws InvalidArgumentError if either tolerance is negative or NaN.
  void validate() const;
};

}  // namespace metrikos
