#include "geohom/realization.hpp"

#include <algorithm>

#include "geohom/errors.hpp"

namespace geohom {

namespace {

std::string describe(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

Bipartition::Bipartition(std::vector<int> a, std::vector<int> b) : left(std::move(a)), right(std::move(b)) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (!right.empty() && (left.empty() || right.front() < left.front())) std::swap(left, right);
}

CrossingStructure::CrossingStructure(std::vector<std::pair<Edge, Edge>> pairs) : pairs_(std::move(pairs)) {
  for (auto& [e, f] : pairs_) {
    if (f < e) std::swap(e, f);
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool CrossingStructure::crosses(Edge e, Edge f) const {
  if (f < e) std::swap(e, f);
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(e, f));
}

void require_general_position(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_coordinate_range(pts[i])) {
      throw GeneralPositionViolation("point " + std::to_string(i) + " " + describe(pts[i]) +
                                     " exceeds the coordinate bound 2^20");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) {
        throw GeneralPositionViolation("points " + std::to_string(i) + " and " + std::to_string(j) +
                                       " coincide at " + describe(pts[i]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(pts[i], pts[j], pts[k]) == 0) {
          throw GeneralPositionViolation("points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                         std::to_string(k) + " are collinear: " + describe(pts[i]) + " " +
                                         describe(pts[j]) + " " + describe(pts[k]));
        }
      }
    }
  }
}

GeometricRealization::GeometricRealization(AbstractGraph graph, std::vector<Point> points,
                                           std::optional<Bipartition> parts)
    : graph_(std::move(graph)), points_(std::move(points)), parts_(std::move(parts)) {
  if (static_cast<int>(points_.size()) != graph_.n()) {
    throw GraphError("realization needs " + std::to_string(graph_.n()) + " points, got " +
                     std::to_string(points_.size()));
  }
  require_general_position(points_);
  if (parts_) {
    std::vector<int> all = parts_->left;
    all.insert(all.end(), parts_->right.begin(), parts_->right.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expected(static_cast<std::size_t>(graph_.n()));
    for (int v = 0; v < graph_.n(); ++v) expected[static_cast<std::size_t>(v)] = v;
    if (all != expected) throw GraphError("bipartition does not partition the vertex set");
    std::vector<Edge> cross;
    for (int a : parts_->left) {
      for (int b : parts_->right) cross.emplace_back(a, b);
    }
    std::sort(cross.begin(), cross.end());
    if (cross != graph_.edges()) throw GraphError("edges are not exactly the cross-part pairs");
  }

  const auto& es = graph_.edges();
  const std::size_t m = es.size();
  cross_matrix_.assign(m * m, 0);
  std::vector<std::pair<Edge, Edge>> pairs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (es[i].shares_vertex(es[j])) continue;
      if (proper_cross(segment(es[i]), segment(es[j]))) {
        cross_matrix_[i * m + j] = cross_matrix_[j * m + i] = 1;
        pairs.emplace_back(es[i], es[j]);
      }
    }
  }
  crossings_ = CrossingStructure(std::move(pairs));
}

GeometricRealization make_realization(AbstractGraph graph, std::vector<Point> points) {
  return GeometricRealization(std::move(graph), std::move(points));
}

GeometricRealization make_complete_bipartite(std::vector<Point> points, const Bipartition& parts) {
  std::vector<Edge> edges;
  for (int a : parts.left) {
    for (int b : parts.right) edges.emplace_back(a, b);
  }
  const int n = static_cast<int>(points.size());
  return GeometricRealization(AbstractGraph(n, std::move(edges)), std::move(points), parts);
}

CrossingStructure crossing_structure(const GeometricRealization& r) { return r.crossings(); }

GeometricRealization complete_to_k6(const GeometricRealization& r) {
  if (r.graph().n() != 6) throw GraphError("completion to K6 needs exactly six vertices");
  return GeometricRealization(complete_graph(6), std::vector<Point>(r.points().begin(), r.points().end()));
}

std::vector<Bipartition> bipartitions_of_6() {
  std::vector<Bipartition> out;
  for (int a = 1; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      std::vector<int> left{0, a, b};
      std::vector<int> right;
      for (int v = 1; v < 6; ++v) {
        if (v != a && v != b) right.push_back(v);
      }
      out.emplace_back(std::move(left), std::move(right));
    }
  }
  return out;
}

}  // namespace geohom
