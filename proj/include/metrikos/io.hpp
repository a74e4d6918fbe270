#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metrikos/isometry.hpp"
#include "metrikos/metric.hpp"
#include "metrikos/path_metrics.hpp"
#include "metrikos/point.hpp"

namespace metrikos::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Strict locale-independent decimal parse of the whole field (surrounding
/// blanks allowed). Rejects non-finite values.
double parse_number(std::string_view field);

/// "0,0,-1" -> PointN{0, 0, -1}
PointN parse_point(std::string_view text);

struct LabeledMatrix {
  DistanceMatrix matrix;
  std::vector<std::string> labels;
};

/// n rows of n comma-separated decimals, optionally preceded by a header
/// row of n labels (detected when its first field is not a number).
LabeledMatrix parse_matrix_csv(std::string_view text);

/// {"dim": n, "points": [[...], ...]}
std::vector<PointN> parse_point_set_json(std::string_view text);
std::string point_set_to_json(const std::vector<PointN>& points);

/// {"vertices": n, "edges": [[u, v, length], ...], "coords": [[x, y], ...]}
WeightedGraph parse_graph_json(std::string_view text);

using AnyMap = std::variant<PlaneMap, SphereMap>;

/// {"map": "rotation", "theta": t}, {"map": "translation", "a1": .., "a2": ..},
/// {"map": "reflect_about_point", "a1": .., "a2": ..}, {"map": "reflect_origin"},
/// "reflect_x1", "reflect_x2", "swap_axes", "identity", or
/// {"map": "sphere", "matrix": [[..], [..], [..]]}.
AnyMap parse_map_json(std::string_view text);

}  // namespace metrikos::io
