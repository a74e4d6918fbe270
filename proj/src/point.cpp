#include "metrikos/point.hpp"

#include <cmath>
#include <sstream>

#include "metrikos/error.hpp"
#include "metrikos/format.hpp"

namespace metrikos {

PointN::PointN(std::initializer_list<double> coords)
    : PointN(std::vector<double>(coords)) {}

PointN::PointN(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw InvalidArgumentError("point must have at least one coordinate");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw InvalidArgumentError("point coordinates must be finite");
    }
  }
}

std::string PointN::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += format_number(coords_[i]);
  }
  return out + ")";
}

void require_same_dim(const PointN& p, const PointN& q) {
  if (p.dim() != q.dim()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << p.dim() << " vs " << q.dim();
    throw DimensionMismatchError(msg.str());
  }
}

void ToleranceConfig::validate() const {
  if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0)) {
    throw InvalidArgumentError("tolerances must be nonnegative");
  }
}

}  // namespace metrikos
