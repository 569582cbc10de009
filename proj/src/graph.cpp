#include "geohom/graph.hpp"

#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "geohom/errors.hpp"
#include "map_search.hpp"

namespace geohom {

AbstractGraph::AbstractGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max(n, 0)), 0U) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    adjacency_[static_cast<std::size_t>(e.u)] |= 1U << e.v;
    adjacency_[static_cast<std::size_t>(e.v)] |= 1U << e.u;
  }
}

int AbstractGraph::degree(int v) const { return std::popcount(neighbor_mask(v)); }

int AbstractGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> AbstractGraph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) out.push_back(degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::optional<std::size_t> AbstractGraph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

TwoColoredGraph::TwoColoredGraph(AbstractGraph solid, AbstractGraph dashed)
    : solid_(std::move(solid)), dashed_(std::move(dashed)) {
  if (solid_.n() != dashed_.n()) throw GraphError("color classes on different vertex counts");
  for (const Edge& e : solid_.edges()) {
    if (dashed_.has_edge(e)) {
      throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " is both solid and dashed");
    }
  }
}

AbstractGraph edgeless(int n) { return AbstractGraph(n); }

AbstractGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return AbstractGraph(n, std::move(edges));
}

AbstractGraph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return AbstractGraph(n, std::move(edges));
}

AbstractGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return AbstractGraph(n, std::move(edges));
}

AbstractGraph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return AbstractGraph(a + b, std::move(edges));
}

AbstractGraph matching_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return AbstractGraph(2 * k, std::move(edges));
}

AbstractGraph disjoint_union(const AbstractGraph& g, const AbstractGraph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + g.n(), e.v + g.n());
  return AbstractGraph(g.n() + h.n(), std::move(edges));
}

AbstractGraph disjoint_union(std::initializer_list<AbstractGraph> parts) {
  AbstractGraph out;
  for (const AbstractGraph& p : parts) out = disjoint_union(out, p);
  return out;
}

AbstractGraph line_graph(const AbstractGraph& g) {
  const auto& es = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].shares_vertex(es[j])) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return AbstractGraph(static_cast<int>(es.size()), std::move(edges));
}

AbstractGraph drop_isolated(const AbstractGraph& g) {
  std::vector<int> new_index(static_cast<std::size_t>(g.n()), -1);
  int next = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 0) new_index[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(new_index[static_cast<std::size_t>(e.u)], new_index[static_cast<std::size_t>(e.v)]);
  }
  return AbstractGraph(next, std::move(edges));
}

AbstractGraph relabel(const AbstractGraph& g, const VertexImages& images) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(images[static_cast<std::size_t>(e.u)], images[static_cast<std::size_t>(e.v)]);
  }
  return AbstractGraph(g.n(), std::move(edges));
}

bool is_connected(const AbstractGraph& g) {
  if (g.n() == 0) return true;
  std::uint32_t seen = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n(); ++v) {
      if ((frontier >> v) & 1U) next |= g.neighbor_mask(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n();
}

bool is_tree(const AbstractGraph& g) {
  return g.n() > 0 && static_cast<int>(g.edge_count()) == g.n() - 1 && is_connected(g);
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_int(const std::string& s, std::string_view what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("graph literal: bad " + std::string(what) + " '" + s + "'");
  }
  return std::stoi(s);
}

}  // namespace

AbstractGraph parse_graph_literal(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto semi = s.find(';');
  if (s.rfind("n=", 0) != 0 || semi == std::string::npos) {
    throw ParseError("graph literal must look like 'n=<count>; edges=u-v,...'");
  }
  const int n = parse_int(s.substr(2, semi - 2), "vertex count");
  const std::string rest = s.substr(semi + 1);
  if (rest.rfind("edges=", 0) != 0) throw ParseError("graph literal: missing 'edges='");
  std::vector<Edge> edges;
  std::stringstream list(rest.substr(6));
  std::string item;
  while (std::getline(list, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("graph literal: bad edge '" + item + "'");
    edges.emplace_back(parse_int(item.substr(0, dash), "endpoint"), parse_int(item.substr(dash + 1), "endpoint"));
  }
  try {
    return AbstractGraph(n, std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(std::string("graph literal: ") + e.what());
  }
}

std::string format_graph_literal(const AbstractGraph& g) {
  std::string out = "n=" + std::to_string(g.n()) + "; edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(g.edges()[i].u) + "-" + std::to_string(g.edges()[i].v);
  }
  return out;
}

std::optional<VertexImages> graph_isomorphism(const AbstractGraph& g, const AbstractGraph& h) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence()) {
    return std::nullopt;
  }
  std::optional<VertexImages> found;
  detail::search_maps(detail::to_colored(g), detail::to_colored(h), {.injective = true, .exact_colors = 0b10},
                      [&](std::span<const int> f) {
                        found.emplace(f.begin(), f.end());
                        return false;
                      });
  return found;
}

bool subgraph_embeds(const AbstractGraph& g, const AbstractGraph& h) {
  if (g.n() > h.n() || g.edge_count() > h.edge_count()) return false;
  return detail::map_exists(detail::to_colored(g), detail::to_colored(h), {.injective = true, .exact_colors = 0});
}

bool homomorphism_exists(const AbstractGraph& g, const AbstractGraph& h) {
  return detail::map_exists(detail::to_colored(g), detail::to_colored(h), {.injective = false, .exact_colors = 0});
}

namespace {

bool colorable(const AbstractGraph& g, const std::vector<int>& order, std::vector<int>& color,
               std::size_t depth, int k, int used) {
  if (depth == order.size()) return true;
  const int v = order[depth];
  // Colors beyond used + 1 are interchangeable with used + 1.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int w = order[i];
      if (color[static_cast<std::size_t>(w)] == c && g.has_edge(v, w)) ok = false;
    }
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (colorable(g, order, color, depth + 1, k, std::max(used, c + 1))) return true;
  }
  color[static_cast<std::size_t>(v)] = -1;
  return false;
}

}  // namespace

int chromatic_number(const AbstractGraph& g) {
  if (g.n() == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (int k = std::max(1, clique_number(g)); k <= g.n(); ++k) {
    if (colorable(g, order, color, 0, k, 0)) return k;
  }
  return g.n();
}

int clique_number(const AbstractGraph& g) {
  int best = 0;
  const std::uint32_t all = g.n() == 32 ? ~0U : ((1U << g.n()) - 1U);
  // Bron-Kerbosch without pivoting; fine at these sizes.
  auto expand = [&](auto&& self, std::uint32_t candidates, int size) -> void {
    best = std::max(best, size);
    while (candidates != 0) {
      if (size + std::popcount(candidates) <= best) return;
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      self(self, candidates & g.neighbor_mask(v), size + 1);
    }
  };
  expand(expand, all, 0);
  return best;
}

std::optional<VertexImages> two_colored_isomorphism(const TwoColoredGraph& g, const TwoColoredGraph& h) {
  if (g.n() != h.n() || g.solid().edge_count() != h.solid().edge_count() ||
      g.dashed().edge_count() != h.dashed().edge_count()) {
    return std::nullopt;
  }
  std::optional<VertexImages> found;
  detail::search_maps(detail::to_colored(g), detail::to_colored(h), {.injective = true, .exact_colors = 0b110},
                      [&](std::span<const int> f) {
                        found.emplace(f.begin(), f.end());
                        return false;
                      });
  return found;
}

std::string canonical_label(const AbstractGraph& g) {
  return detail::canonical_form(detail::to_colored(g));
}

std::string canonical_label(const TwoColoredGraph& g) {
  return detail::canonical_form(detail::to_colored(g));
}

}  // namespace geohom
