#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "metrikos/point.hpp"

namespace metrikos {

struct Edge {
  std::size_t u;
  std::size_t v;
  double length;
};

/// Undirected graph with strictly positive edge lengths, optionally
/// embedded in the plane through per-vertex coordinates.
class WeightedGraph {
 public:
  struct Neighbor {
    std::size_t vertex;
    double length;
  };

  WeightedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                std::optional<std::vector<PointN>> coords = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::optional<std::vector<PointN>>& coords() const noexcept { return coords_; }
  std::span<const Neighbor> neighbors(std::size_t v) const { return adjacency_.at(v); }

  /// True when every edge length is a positive integer below 2^53.
  bool has_integer_lengths() const noexcept;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<std::vector<PointN>> coords_;
};

/// Dijkstra from `source`; unreachable vertices get +infinity.
std::vector<double> single_source_distances(const WeightedGraph& g, std::size_t source);

/// Row i holds single_source_distances(g, i).
std::vector<std::vector<double>> all_pairs_distances(const WeightedGraph& g);

/// Length of a shortest u-v path. Throws InfiniteDistanceError when u and
/// v lie in different components.
double shortest_path_distance(const WeightedGraph& g, std::size_t u, std::size_t v);

/// Unit lattice on {0..width-1} x {0..height-1}; vertex (i, j) has id
/// grid_vertex(width, i, j) and coordinates (i, j).
WeightedGraph grid_graph(std::size_t width, std::size_t height);

constexpr std::size_t grid_vertex(std::size_t width, std::size_t i, std::size_t j) {
  return j * width + i;
}

/// Number of distinct shortest u-v paths. Requires integer edge lengths so
/// that ties are exact.
std::uint64_t count_geodesics(const WeightedGraph& g, std::size_t u, std::size_t v);

/// A plane polyline standing in for a curve; its vertices carry the
/// arc-length metric.
class Polyline {
 public:
  explicit Polyline(std::vector<PointN> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<PointN>& vertices() const noexcept { return vertices_; }
  const PointN& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Cumulative arc length from vertex 0 to vertex i.
  double arc_parameter(std::size_t i) const { return arc_.at(i); }
  double length() const noexcept { return arc_.back(); }

  /// No two non-adjacent segments intersect.
  bool is_simple() const;

 private:
  std::vector<PointN> vertices_;
  std::vector<double> arc_;
};

/// Arc length along c between vertices i and j.
double polyline_arc_distance(const Polyline& c, std::size_t i, std::size_t j);

}  // namespace metrikos
