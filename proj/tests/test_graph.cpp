#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "geohom/errors.hpp"
#include "geohom/graph.hpp"

using namespace geohom;

namespace {

AbstractGraph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
  return AbstractGraph(n, edges);
}

AbstractGraph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return AbstractGraph(n, edges);
}

bool is_isomorphism(const AbstractGraph& g, const AbstractGraph& h, const VertexImages& f) {
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.n(); ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) return false;
  for (const Edge& e : g.edges())
    if (!h.has_edge(f[static_cast<std::size_t>(e.u)], f[static_cast<std::size_t>(e.v)])) return false;
  return true;
}

// Tries every injective map; independent of the library's search.
bool embeds_brute(const AbstractGraph& g, const AbstractGraph& h) {
  if (g.n() > h.n()) return false;
  std::vector<int> perm(static_cast<std::size_t>(h.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && h.has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int chromatic_brute(const AbstractGraph& g) {
  const int n = g.n();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (const Edge& e : g.edges()) proper = proper && color[static_cast<std::size_t>(e.u)] != color[static_cast<std::size_t>(e.v)];
      if (proper) return k;
      std::size_t i = 0;
      while (i < color.size() && ++color[i] == k) color[i++] = 0;
      if (i == color.size()) break;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(AbstractGraph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(AbstractGraph(3, {{0, 1}, {1, 0}}), GraphError);
  CHECK_THROWS_AS(AbstractGraph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(AbstractGraph(33), GraphError);
  const AbstractGraph g(4, {{2, 3}, {1, 0}});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(2, 3));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edge_index(Edge(3, 2)) == 1U);
  CHECK_FALSE(g.edge_index(Edge(0, 2)).has_value());
}

TEST_CASE("two-colored graph rejects overlapping classes") {
  CHECK_THROWS_AS(TwoColoredGraph(path_graph(3), path_graph(3)), GraphError);
  CHECK_THROWS_AS(TwoColoredGraph(path_graph(3), edgeless(4)), GraphError);
}

TEST_CASE("named graphs") {
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_bipartite_graph(3, 3).edge_count() == 9);
  CHECK(matching_graph(3).n() == 6);
  const AbstractGraph u = disjoint_union({cycle_graph(4), complete_graph(2), edgeless(3)});
  CHECK(u.n() == 9);
  CHECK(u.edge_count() == 5);
  CHECK(line_graph(complete_bipartite_graph(3, 3)).degree_sequence() == std::vector<int>(9, 4));
  CHECK(drop_isolated(u).n() == 6);
  CHECK(is_tree(path_graph(5)));
  CHECK_FALSE(is_tree(cycle_graph(5)));
  CHECK_FALSE(is_connected(matching_graph(2)));
  CHECK_THROWS_AS(cycle_graph(2), GraphError);
}

TEST_CASE("graph literal round trip") {
  const AbstractGraph g = parse_graph_literal(" n = 9 ; edges = 0-1, 1-2 ,3-4 ");
  CHECK(g.n() == 9);
  CHECK(g.edge_count() == 3);
  CHECK(parse_graph_literal(format_graph_literal(g)) == g);
  CHECK(parse_graph_literal("n=3; edges=").edge_count() == 0);
  CHECK_THROWS_AS(parse_graph_literal("edges=0-1"), ParseError);
  CHECK_THROWS_AS(parse_graph_literal("n=3; edges=0-5"), ParseError);
  CHECK_THROWS_AS(parse_graph_literal("n=3; edges=01"), ParseError);
  CHECK_THROWS_AS(parse_graph_literal("n=x; edges=0-1"), ParseError);
}

TEST_CASE("graph isomorphism") {
  const AbstractGraph p6 = path_graph(6);
  const AbstractGraph q6 = relabel(p6, {3, 0, 5, 1, 4, 2});
  const auto f = graph_isomorphism(p6, q6);
  REQUIRE(f.has_value());
  CHECK(is_isomorphism(p6, q6, *f));
  CHECK_FALSE(graph_isomorphism(disjoint_union({cycle_graph(4), complete_graph(2), edgeless(3)}),
                                disjoint_union(path_graph(6), edgeless(3))));
  CHECK_FALSE(graph_isomorphism(complete_graph(2), edgeless(2)));
}

TEST_CASE("subgraph embedding") {
  CHECK(subgraph_embeds(path_graph(6), cycle_graph(6)));
  CHECK(subgraph_embeds(matching_graph(3), path_graph(6)));
  CHECK(embeds_brute(matching_graph(3), path_graph(6)));
  CHECK_FALSE(subgraph_embeds(complete_graph(2), edgeless(2)));
  CHECK_FALSE(subgraph_embeds(cycle_graph(6), path_graph(6)));
}

TEST_CASE("homomorphism existence") {
  CHECK(homomorphism_exists(cycle_graph(6), complete_graph(2)));
  CHECK_FALSE(homomorphism_exists(cycle_graph(5), complete_graph(2)));
  CHECK(homomorphism_exists(edgeless(3), edgeless(1)));
}

TEST_CASE("chromatic number and clique number") {
  CHECK(chromatic_number(complete_graph(3)) == 3);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(edgeless(9)) == 1);
  CHECK(chromatic_number(edgeless(0)) == 0);
  CHECK(chromatic_number(complete_graph(7)) == 7);
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(complete_graph(5)) == 5);
}

TEST_CASE("two-colored isomorphism") {
  const TwoColoredGraph g(path_graph(4), AbstractGraph(4, {{0, 2}}));
  const auto id = two_colored_isomorphism(g, g);
  REQUIRE(id.has_value());
  CHECK(*id == VertexImages{0, 1, 2, 3});
  CHECK_FALSE(two_colored_isomorphism(g, g.swapped()));
  const TwoColoredGraph a(AbstractGraph(3, {{0, 1}}), AbstractGraph(3, {{1, 2}}));
  CHECK(two_colored_isomorphism(a, a.swapped()).has_value());
}

TEST_CASE("canonical labels") {
  const AbstractGraph p6 = path_graph(6);
  CHECK(canonical_label(p6) == canonical_label(relabel(p6, {5, 3, 1, 0, 2, 4})));
  CHECK(canonical_label(p6) != canonical_label(cycle_graph(6)));
  const AbstractGraph m3 = matching_graph(3);
  const AbstractGraph p4k2 = disjoint_union(path_graph(4), complete_graph(2));
  CHECK(m3.degree_sequence() != p4k2.degree_sequence());
  CHECK(canonical_label(m3) != canonical_label(p4k2));
  const TwoColoredGraph t(path_graph(4), AbstractGraph(4, {{0, 2}}));
  CHECK(canonical_label(t) != canonical_label(t.swapped()));
}

TEST_CASE("property: canonical label classes match isomorphism on all graphs up to 6 vertices") {
  // Numbers of unlabelled graphs on n vertices.
  const std::map<int, std::size_t> unlabelled = {{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
  for (const auto& [n, expected] : unlabelled) {
    std::map<std::string, AbstractGraph> classes;
    bool witnesses_ok = true;
    const std::uint32_t masks = 1U << (n * (n - 1) / 2);
    for (std::uint32_t m = 0; m < masks; ++m) {
      const AbstractGraph g = from_mask(n, m);
      const auto [it, fresh] = classes.emplace(canonical_label(g), g);
      if (fresh) continue;
      const auto f = graph_isomorphism(it->second, g);
      witnesses_ok = witnesses_ok && f && is_isomorphism(it->second, g, *f);
    }
    CAPTURE(n);
    CHECK(witnesses_ok);
    CHECK(classes.size() == expected);
  }
}

TEST_CASE("property: chromatic number matches brute-force colouring") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t masks = 1U << (n * (n - 1) / 2);
    for (std::uint32_t m = 0; m < masks; ++m) {
      const AbstractGraph g = from_mask(n, m);
      REQUIRE(chromatic_number(g) == chromatic_brute(g));
    }
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 600; ++i) {
    const AbstractGraph g = random_graph(rng, 6 + i % 2, 0.2 + 0.1 * (i % 6));
    REQUIRE(chromatic_number(g) == chromatic_brute(g));
    CHECK(chromatic_number(g) >= clique_number(g));
  }
}

TEST_CASE("property: subgraph embedding matches exhaustive injective search") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 600; ++i) {
    const AbstractGraph g = random_graph(rng, 2 + i % 5, 0.4);
    const AbstractGraph h = random_graph(rng, 4 + i % 4, 0.5);
    CAPTURE(format_graph_literal(g));
    CAPTURE(format_graph_literal(h));
    REQUIRE(subgraph_embeds(g, h) == embeds_brute(g, h));
  }
}

TEST_CASE("property: isomorphism witnesses re-check") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const int n = 5 + i % 5;
    const AbstractGraph g = random_graph(rng, n, 0.45);
    VertexImages perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const AbstractGraph h = relabel(g, perm);
    const auto f = graph_isomorphism(g, h);
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(g, h, *f));
    CHECK(canonical_label(g) == canonical_label(h));
  }
}
