#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geohom/geometry.hpp"
#include "geohom/graph.hpp"

namespace geohom {

/// Two disjoint vertex sets covering {0, ..., n-1}. Each side is kept sorted, and the side
/// holding the smallest vertex comes first.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  Bipartition() = default;
  Bipartition(std::vector<int> a, std::vector<int> b);

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// The set of crossing edge pairs of a realization. Each pair is stored once as (e, f) with e < f.
class CrossingStructure {
 public:
  CrossingStructure() = default;
  explicit CrossingStructure(std::vector<std::pair<Edge, Edge>> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<std::pair<Edge, Edge>>& pairs() const { return pairs_; }
  bool crosses(Edge e, Edge f) const;

  friend bool operator==(const CrossingStructure&, const CrossingStructure&) = default;

 private:
  std::vector<std::pair<Edge, Edge>> pairs_;
};

/// An abstract graph drawn with straight edges on points in general position.
/// Vertex i sits at points()[i]. Immutable once built.
class GeometricRealization {
 public:
  /// Throws GeneralPositionViolation naming the duplicate pair or collinear triple, and
  /// GraphError if the point count or bipartition does not fit the graph.
  GeometricRealization(AbstractGraph graph, std::vector<Point> points,
                       std::optional<Bipartition> parts = std::nullopt);

  const AbstractGraph& graph() const { return graph_; }
  std::span<const Point> points() const { return points_; }
  const std::optional<Bipartition>& parts() const { return parts_; }
  const CrossingStructure& crossings() const { return crossings_; }

  Segment segment(Edge e) const {
    return {points_[static_cast<std::size_t>(e.u)], points_[static_cast<std::size_t>(e.v)]};
  }
  /// Crossing test by positions in graph().edges().
  bool crosses_at(std::size_t i, std::size_t j) const {
    return cross_matrix_[i * graph_.edge_count() + j] != 0;
  }

 private:
  AbstractGraph graph_;
  std::vector<Point> points_;
  std::optional<Bipartition> parts_;
  CrossingStructure crossings_;
  std::vector<unsigned char> cross_matrix_;
};

GeometricRealization make_realization(AbstractGraph graph, std::vector<Point> points);

/// Complete bipartite graph with the given sides drawn on the points.
GeometricRealization make_complete_bipartite(std::vector<Point> points, const Bipartition& parts);

/// All vertex-disjoint edge pairs whose segments properly cross, by testing every pair.
CrossingStructure crossing_structure(const GeometricRealization& r);

/// Same points with all 15 pairs as edges. Requires six vertices.
GeometricRealization complete_to_k6(const GeometricRealization& r);

/// The 10 splits of {0, ..., 5} into two triples, in lexicographic order of the side holding 0.
std::vector<Bipartition> bipartitions_of_6();

/// Throws GeneralPositionViolation with a description if the points are degenerate or out of range.
void require_general_position(std::span<const Point> pts);

}  // namespace geohom
