#include "metrikos/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metrikos/error.hpp"

namespace metrikos::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_number(std::string_view field) {
  try {
    parse_number(field);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double json_number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

std::size_t json_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<double> json_coords(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(json_number(v, what));
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  out.close();
  if (!out) throw Error("cannot write " + path.string());
}

double parse_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError("not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(v)) throw ParseError("value must be finite: '" + std::string(field) + "'");
  return v;
}

PointN parse_point(std::string_view text) {
  std::vector<double> coords;
  for (auto field : split(text, ',')) coords.push_back(parse_number(field));
  return PointN(std::move(coords));
}

LabeledMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<std::string_view>> rows;
  for (auto line : split(text, '\n')) {
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  if (rows.empty()) throw ParseError("matrix CSV is empty");
  std::vector<std::string> labels;
  if (!is_number(rows.front().front())) {
    for (auto l : rows.front()) labels.emplace_back(trim(l));
    rows.erase(rows.begin());
  }
  const std::size_t n = rows.size();
  if (n == 0) throw ParseError("matrix CSV has a header but no rows");
  if (!labels.empty() && labels.size() != n) {
    throw ParseError("header has " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(n) + " rows");
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " fields; matrix must be square");
    }
    for (auto f : rows[i]) entries.push_back(parse_number(f));
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return {DistanceMatrix(n, std::move(entries)), std::move(labels)};
}

std::vector<PointN> parse_point_set_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("points")) {
    throw ParseError("point set needs \"dim\" and \"points\"");
  }
  const std::size_t dim = json_index(j["dim"], "dim");
  if (dim == 0) throw ParseError("dim must be positive");
  if (!j["points"].is_array()) throw ParseError("points must be an array");
  std::vector<PointN> out;
  for (const auto& p : j["points"]) {
    auto coords = json_coords(p, "point");
    if (coords.size() != dim) {
      throw ParseError("point has " + std::to_string(coords.size()) + " coordinates, expected " +
                       std::to_string(dim));
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

std::string point_set_to_json(const std::vector<PointN>& points) {
  json j;
  j["dim"] = points.empty() ? 0 : points.front().dim();
  j["points"] = json::array();
  for (const auto& p : points) {
    j["points"].push_back(std::vector<double>(p.coords().begin(), p.coords().end()));
  }
  return j.dump();
}

WeightedGraph parse_graph_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw ParseError("graph needs \"vertices\" and \"edges\"");
  }
  const std::size_t n = json_index(j["vertices"], "vertices");
  if (!j["edges"].is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3) throw ParseError("each edge is [u, v, length]");
    edges.push_back({json_index(e[0], "edge endpoint"), json_index(e[1], "edge endpoint"),
                     json_number(e[2], "edge length")});
  }
  std::optional<std::vector<PointN>> coords;
  if (j.contains("coords") && !j["coords"].is_null()) {
    coords.emplace();
    if (!j["coords"].is_array()) throw ParseError("coords must be an array");
    for (const auto& c : j["coords"]) coords->emplace_back(json_coords(c, "coordinate"));
  }
  try {
    return WeightedGraph(n, std::move(edges), std::move(coords));
  } catch (const InvalidArgumentError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

AnyMap parse_map_json(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("map") || !j["map"].is_string()) {
    throw ParseError("map description needs a \"map\" tag");
  }
  const std::string tag = j["map"].get<std::string>();
  auto param = [&](const char* key) {
    if (!j.contains(key)) throw ParseError("map '" + tag + "' needs \"" + key + "\"");
    return json_number(j[key], key);
  };
  if (tag == "identity") return PlaneMap::identity();
  if (tag == "translation") return named_map(maps::Translation{param("a1"), param("a2")});
  if (tag == "reflect_origin") return named_map(maps::ReflectOrigin{});
  if (tag == "reflect_x1") return named_map(maps::ReflectX1{});
  if (tag == "reflect_x2") return named_map(maps::ReflectX2{});
  if (tag == "swap_axes") return named_map(maps::SwapAxes{});
  if (tag == "rotation") return named_map(maps::Rotation{param("theta")});
  if (tag == "reflect_about_point") {
    return named_map(maps::ReflectAboutPoint{param("a1"), param("a2")});
  }
  if (tag == "sphere") {
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].size() != 3) {
      throw ParseError("sphere map needs a 3x3 \"matrix\"");
    }
    Mat3 m{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto row = json_coords(j["matrix"][i], "matrix row");
      if (row.size() != 3) throw ParseError("sphere map needs a 3x3 \"matrix\"");
      for (std::size_t k = 0; k < 3; ++k) m[i][k] = row[k];
    }
    try {
      return SphereMap(m);
    } catch (const InvalidArgumentError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown map '" + tag + "'");
}

}  // namespace metrikos::io
