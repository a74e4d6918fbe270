#pragma once

#include <string>
#include <variant>
#include <vector>

#include "metrikos/balls.hpp"
#include "metrikos/point.hpp"

namespace metrikos::svg {

struct Path {
  std::vector<PointN> points;  ///< pixel coordinates
  bool closed = true;
  std::string stroke = "black";
  double stroke_width = 2.0;
};

struct Marker {
  PointN at;  ///< pixel coordinates
  double radius = 3.0;
  std::string fill = "black";
};

struct Label {
  PointN at;  ///< pixel coordinates
  std::string text;
  double font_size = 14.0;
};

using Element = std::variant<Path, Marker, Label>;

struct Scene {
  int width = 400;
  int height = 400;
  std::vector<Element> elements;

  /// Standalone SVG 1.1 document.
  std::string render() const;
};

/// Maps a square world window onto the pixel viewport with a 10% margin,
/// flipping y so that it points up.
class Viewport {
 public:
  Viewport(const PointN& center, double half_extent, int width, int height);
  PointN to_pixels(const PointN& world) const;

 private:
  double cx_, cy_, half_, width_, height_;
};

/// Boundary curve, center marker and a radius label for a unit-ball
/// figure.
Scene ball_figure(const BoundaryPolyline& boundary, int width = 400, int height = 400);

}  // namespace metrikos::svg
