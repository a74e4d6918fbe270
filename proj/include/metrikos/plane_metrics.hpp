#pragma once

#include "metrikos/point.hpp"

namespace metrikos {

/// |r - t| on the real line.
double real_line_distance(double r, double t);

/// sqrt(sum (p_i - q_i)^2), evaluated with max-component scaling so that
/// extreme coordinates neither overflow nor underflow.
double euclidean_distance(const PointN& p, const PointN& q);

/// sum |p_i - q_i|
double taxicab_distance(const PointN& p, const PointN& q);

/// max |p_i - q_i|
double chebyshev_distance(const PointN& p, const PointN& q);

/// 0 when p and q have bitwise-equal coordinates, 1 otherwise.
double discrete_distance(const PointN& p, const PointN& q);

}  // namespace metrikos
