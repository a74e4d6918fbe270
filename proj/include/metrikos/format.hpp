#pragma once

#include <string>

namespace metrikos {

/// Locale-independent shortest form with at most `digits` significant
/// digits, e.g. 1.41421356237 for sqrt(2) at the default precision.
std::string format_number(double value, int digits = 12);

}  // namespace metrikos
