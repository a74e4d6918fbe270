#include "metrikos/path_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "metrikos/error.hpp"
#include "metrikos/plane_metrics.hpp"

namespace metrikos {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

void require_vertex(const WeightedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) {
    throw CarrierError("vertex id " + std::to_string(v) + " out of range");
  }
}

template <typename W>
std::vector<W> dijkstra(const WeightedGraph& g, std::size_t source, W infinity) {
  require_vertex(g, source);
  std::vector<W> dist(g.vertex_count(), infinity);
  using Entry = std::pair<W, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = W{0};
  heap.emplace(W{0}, source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (const auto& nb : g.neighbors(v)) {
      const W cand = d + static_cast<W>(nb.length);
      if (cand < dist[nb.vertex]) {
        dist[nb.vertex] = cand;
        heap.emplace(cand, nb.vertex);
      }
    }
  }
  return dist;
}

double orient(const PointN& a, const PointN& b, const PointN& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool on_segment(const PointN& a, const PointN& b, const PointN& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_intersect(const PointN& a, const PointN& b, const PointN& c, const PointN& d) {
  const double o1 = orient(a, b, c);
  const double o2 = orient(a, b, d);
  const double o3 = orient(c, d, a);
  const double o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
      ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

/// s + seg rounded toward +inf, so that (result - s) >= seg after rounding
/// and no chord exceeds the arc between adjacent vertices.
double accumulate_up(double s, double seg) {
  const double sum = s + seg;
  // TwoSum: exact rounding error of the addition.
  const double bv = sum - s;
  const double err = (s - (sum - bv)) + (seg - bv);
  return err > 0.0 ? std::nextafter(sum, std::numeric_limits<double>::infinity()) : sum;
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::optional<std::vector<PointN>> coords)
    : edges_(std::move(edges)), adjacency_(vertex_count), coords_(std::move(coords)) {
  if (vertex_count == 0) throw InvalidArgumentError("graph needs at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InvalidArgumentError("edge endpoint out of range");
    }
    if (e.u == e.v) throw InvalidArgumentError("self-loops are not allowed");
    if (!(e.length > 0.0) || !std::isfinite(e.length)) {
      throw InvalidArgumentError("edge lengths must be positive and finite");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw InvalidArgumentError("duplicate edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v));
    }
    adjacency_[e.u].push_back({e.v, e.length});
    adjacency_[e.v].push_back({e.u, e.length});
  }
  if (coords_ && coords_->size() != vertex_count) {
    throw InvalidArgumentError("coordinate count must equal vertex count");
  }
}

bool WeightedGraph::has_integer_lengths() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) {
    return e.length == std::floor(e.length) && e.length < kMaxExactInteger;
  });
}

std::vector<double> single_source_distances(const WeightedGraph& g, std::size_t source) {
  return dijkstra<double>(g, source, std::numeric_limits<double>::infinity());
}

std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g) {
  std::vector<std::vector<double>> rows;
  rows.reserve(g.vertex_count());
  for (std::size_t s = 0; s < g.vertex_count(); ++s) rows.push_back(single_source_distances(g, s));
  // Sums along a path accumulate in a different order from each end; take
  // the smaller rounding so the table is exactly symmetric.
  for (std::size_t u = 0; u < rows.size(); ++u) {
    for (std::size_t v = u + 1; v < rows.size(); ++v) {
      rows[u][v] = rows[v][u] = std::min(rows[u][v], rows[v][u]);
    }
  }
  return rows;
}

double shortest_path_distance(const WeightedGraph& g, std::size_t u, std::size_t v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const auto row = single_source_distances(g, std::min(u, v));
  const double d = row[std::max(u, v)];
  if (std::isinf(d)) {
    throw InfiniteDistanceError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " are disconnected; not a metric space over all vertices");
  }
  return d;
}

WeightedGraph grid_graph(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw InvalidArgumentError("grid dimensions must be positive");
  std::vector<Edge> edges;
  std::vector<PointN> coords;
  coords.reserve(width * height);
  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) {
      coords.push_back(PointN{static_cast<double>(i), static_cast<double>(j)});
      const std::size_t id = grid_vertex(width, i, j);
      if (i + 1 < width) edges.push_back({id, grid_vertex(width, i + 1, j), 1.0});
      if (j + 1 < height) edges.push_back({id, grid_vertex(width, i, j + 1), 1.0});
    }
  }
  return WeightedGraph(width * height, std::move(edges), std::move(coords));
}

std::uint64_t count_geodesics(const WeightedGraph& g, std::size_t u, std::size_t v) {
  require_vertex(g, v);
  if (!g.has_integer_lengths()) {
    throw InvalidArgumentError("geodesic counting requires integer edge lengths");
  }
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  const auto dist = dijkstra<std::int64_t>(g, u, inf);
  if (dist[v] == inf) {
    throw InfiniteDistanceError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " are disconnected");
  }
  // Predecessors on shortest paths have strictly smaller distance, so
  // increasing distance is a topological order of the shortest-path DAG.
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  count[u] = 1;
  for (std::size_t a : order) {
    if (dist[a] == inf || dist[a] > dist[v]) break;
    if (count[a] == 0) continue;
    for (const auto& nb : g.neighbors(a)) {
      if (dist[a] + static_cast<std::int64_t>(nb.length) == dist[nb.vertex]) {
        if (count[nb.vertex] > std::numeric_limits<std::uint64_t>::max() - count[a]) {
          throw InvalidArgumentError("geodesic count overflows 64 bits");
        }
        count[nb.vertex] += count[a];
      }
    }
  }
  return count[v];
}

Polyline::Polyline(std::vector<PointN> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw InvalidArgumentError("polyline needs at least two vertices");
  arc_.reserve(vertices_.size());
  arc_.push_back(0.0);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].dim() != 2) throw DimensionMismatchError("polyline vertices must be 2-d");
    if (i == 0) continue;
    if (vertices_[i] == vertices_[i - 1]) {
      throw InvalidArgumentError("consecutive polyline vertices must be distinct");
    }
    arc_.push_back(accumulate_up(arc_.back(), euclidean_distance(vertices_[i - 1], vertices_[i])));
  }
}

bool Polyline::is_simple() const {
  const std::size_t segs = vertices_.size() - 1;
  for (std::size_t a = 0; a < segs; ++a) {
    for (std::size_t b = a + 1; b < segs; ++b) {
      const PointN& p0 = vertices_[a];
      const PointN& p1 = vertices_[a + 1];
      const PointN& q0 = vertices_[b];
      const PointN& q1 = vertices_[b + 1];
      if (b == a + 1) {
        // Adjacent segments share p1; they only cross if they fold back.
        if (orient(p0, p1, q1) == 0 && on_segment(p0, p1, q1)) return false;
        if (orient(q0, q1, p0) == 0 && on_segment(q0, q1, p0)) return false;
        continue;
      }
      const bool closing = (a == 0 && b == segs - 1 && vertices_.front() == vertices_.back());
      if (closing) continue;
      if (segments_intersect(p0, p1, q0, q1)) return false;
    }
  }
  return true;
}

double polyline_arc_distance(const Polyline& c, std::size_t i, std::size_t j) {
  if (i >= c.size() || j >= c.size()) {
    throw CarrierError("polyline vertex index out of range");
  }
  return real_line_distance(c.arc_parameter(i), c.arc_parameter(j));
}

}  // namespace metrikos
