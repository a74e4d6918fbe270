#include "metrikos/svg.hpp"

#include <sstream>

#include "metrikos/error.hpp"
#include "metrikos/format.hpp"

namespace metrikos::svg {

namespace {

constexpr double kMargin = 0.1;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) { return format_number(v); }

}  // namespace

std::string Scene::render() const {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  for (const Element& e : elements) {
    if (const auto* p = std::get_if<Path>(&e)) {
      out << "  <path d=\"";
      for (std::size_t i = 0; i < p->points.size(); ++i) {
        out << (i == 0 ? "M " : " L ") << num(p->points[i][0]) << ' ' << num(p->points[i][1]);
      }
      if (p->closed) out << " Z";
      out << "\" fill=\"none\" stroke=\"" << escape(p->stroke) << "\" stroke-width=\""
          << num(p->stroke_width) << "\"/>\n";
    } else if (const auto* m = std::get_if<Marker>(&e)) {
      out << "  <circle cx=\"" << num(m->at[0]) << "\" cy=\"" << num(m->at[1]) << "\" r=\""
          << num(m->radius) << "\" fill=\"" << escape(m->fill) << "\"/>\n";
    } else if (const auto* l = std::get_if<Label>(&e)) {
      out << "  <text x=\"" << num(l->at[0]) << "\" y=\"" << num(l->at[1])
          << "\" font-family=\"sans-serif\" font-size=\"" << num(l->font_size) << "\">"
          << escape(l->text) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

Viewport::Viewport(const PointN& center, double half_extent, int width, int height)
    : cx_(center[0]), cy_(center[1]), half_(half_extent), width_(width), height_(height) {
  if (center.dim() != 2) throw DimensionMismatchError("viewport center must be 2-d");
  if (!(half_extent > 0.0)) throw InvalidArgumentError("viewport extent must be positive");
  if (width <= 0 || height <= 0) throw InvalidArgumentError("viewport size must be positive");
}

PointN Viewport::to_pixels(const PointN& world) const {
  const double u = (world[0] - (cx_ - half_)) / (2.0 * half_);
  const double v = (world[1] - (cy_ - half_)) / (2.0 * half_);
  const double x = width_ * kMargin + u * width_ * (1.0 - 2.0 * kMargin);
  const double y = height_ * (1.0 - kMargin) - v * height_ * (1.0 - 2.0 * kMargin);
  return PointN{x, y};
}

Scene ball_figure(const BoundaryPolyline& boundary, int width, int height) {
  const Viewport view(boundary.center, boundary.radius, width, height);
  Scene scene{width, height, {}};
  Path path;
  for (const PointN& p : boundary.samples) path.points.push_back(view.to_pixels(p));
  scene.elements.emplace_back(std::move(path));
  const PointN c = view.to_pixels(boundary.center);
  scene.elements.emplace_back(Marker{c});
  // Radius segment from the center to the rightmost boundary point.
  const PointN edge = view.to_pixels(
      PointN{boundary.center[0] + boundary.radius, boundary.center[1]});
  scene.elements.emplace_back(Path{{c, edge}, false, "gray", 1.0});
  scene.elements.emplace_back(
      Label{PointN{(c[0] + edge[0]) / 2.0, c[1] - 6.0},
            std::string(boundary.metric.name()) + " r = " + format_number(boundary.radius)});
  return scene;
}

}  // namespace metrikos::svg
