#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace geohom {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool touches(int w) const { return u == w || v == w; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A bijection, injection or plain map between vertex sets: images[i] is the image of vertex i.
using VertexImages = std::vector<int>;

/// Finite simple graph on {0, ..., n-1}. Edges are kept in lexicographic order,
/// which fixes the vertex indexing of derived graphs (line graph, crossing graph).
class AbstractGraph {
 public:
  static constexpr int kMaxVertices = 32;

  AbstractGraph() = default;
  /// Throws GraphError on loops, duplicate edges or endpoints outside [0, n).
  explicit AbstractGraph(int n, std::vector<Edge> edges = {});

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    return u != v && ((adjacency_[static_cast<std::size_t>(u)] >> v) & 1U) != 0;
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  std::uint32_t neighbor_mask(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int max_degree() const;
  /// Degrees sorted in non-increasing order.
  std::vector<int> degree_sequence() const;
  std::optional<std::size_t> edge_index(Edge e) const;

  friend bool operator==(const AbstractGraph& a, const AbstractGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_;
};

/// Graph whose edges carry one of two colors. For a line/crossing graph the solid edges are
/// crossings and the dashed edges are adjacencies of the underlying graph.
class TwoColoredGraph {
 public:
  TwoColoredGraph() = default;
  /// Throws GraphError if the color classes overlap or are on different vertex counts.
  TwoColoredGraph(AbstractGraph solid, AbstractGraph dashed);

  int n() const { return solid_.n(); }
  const AbstractGraph& solid() const { return solid_; }
  const AbstractGraph& dashed() const { return dashed_; }

  /// Same graph with the colors exchanged.
  TwoColoredGraph swapped() const { return TwoColoredGraph(dashed_, solid_); }

  friend bool operator==(const TwoColoredGraph&, const TwoColoredGraph&) = default;

 private:
  AbstractGraph solid_;
  AbstractGraph dashed_;
};

// Named graphs, so fixtures can say "P6" or "C4 + K2 + 3K1" directly.
AbstractGraph edgeless(int n);
AbstractGraph path_graph(int n);
AbstractGraph cycle_graph(int n);
AbstractGraph complete_graph(int n);
AbstractGraph complete_bipartite_graph(int a, int b);
/// k disjoint copies of K2.
AbstractGraph matching_graph(int k);
AbstractGraph disjoint_union(const AbstractGraph& g, const AbstractGraph& h);
AbstractGraph disjoint_union(std::initializer_list<AbstractGraph> parts);
/// Vertices are the edges of g (in g's edge order), adjacent when they share an endpoint.
AbstractGraph line_graph(const AbstractGraph& g);
/// Same graph with every isolated vertex removed (remaining vertices renumbered in order).
AbstractGraph drop_isolated(const AbstractGraph& g);
/// Applies a bijection: vertex i of g becomes images[i].
AbstractGraph relabel(const AbstractGraph& g, const VertexImages& images);

bool is_connected(const AbstractGraph& g);
bool is_tree(const AbstractGraph& g);

/// Parses the fixture literal "n=9; edges=0-1,1-2,..." (whitespace-insensitive).
AbstractGraph parse_graph_literal(std::string_view text);
std::string format_graph_literal(const AbstractGraph& g);

/// A bijection carrying edges exactly onto edges, or nullopt.
std::optional<VertexImages> graph_isomorphism(const AbstractGraph& g, const AbstractGraph& h);

/// True iff some injective vertex map carries every edge of g onto an edge of h.
bool subgraph_embeds(const AbstractGraph& g, const AbstractGraph& h);

/// True iff some vertex map (not necessarily injective) carries edges of g onto edges of h.
bool homomorphism_exists(const AbstractGraph& g, const AbstractGraph& h);

/// Exact chromatic number by backtracking. An empty graph (n = 0) has chromatic number 0.
int chromatic_number(const AbstractGraph& g);

/// Size of a largest clique (exhaustive, intended for small graphs).
int clique_number(const AbstractGraph& g);

/// A bijection preserving both color classes exactly, or nullopt.
std::optional<VertexImages> two_colored_isomorphism(const TwoColoredGraph& g,
                                                    const TwoColoredGraph& h);

/// String equal for two graphs iff they are isomorphic. Exponential in the worst case; meant
/// for graphs of a dozen or so vertices (crossing graphs of K6 have 15).
std::string canonical_label(const AbstractGraph& g);
/// Color-respecting canonical form of a two-colored graph.
std::string canonical_label(const TwoColoredGraph& g);

}  // namespace geohom
