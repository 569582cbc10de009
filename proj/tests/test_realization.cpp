#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "geohom/errors.hpp"
#include "geohom/invariants.hpp"
#include "geohom/json_io.hpp"
#include "geohom/oracle.hpp"
#include "geohom/realization.hpp"
#include "geohom/sampling.hpp"

using namespace geohom;

namespace {

// Crossing pairs by the rational oracle over every pair of vertex-disjoint edges.
std::size_t oracle_crossings(const GeometricRealization& r) {
  std::size_t count = 0;
  const auto& edges = r.graph().edges();
  const auto& pts = r.points();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex(edges[j])) continue;
      const Segment s{pts[static_cast<std::size_t>(edges[i].u)], pts[static_cast<std::size_t>(edges[i].v)]};
      const Segment t{pts[static_cast<std::size_t>(edges[j].u)], pts[static_cast<std::size_t>(edges[j].v)]};
      count += oracle::segments_cross_rational(s, t);
    }
  return count;
}

}  // namespace

TEST_CASE("make_realization validates points") {
  const GeometricRealization tri = make_realization(complete_graph(3), {{0, 0}, {4, 0}, {0, 4}});
  CHECK(crossing_structure(tri).empty());
  CHECK_THROWS_AS(make_realization(path_graph(4), {{0, 0}, {1, 1}, {2, 2}, {5, 0}}), GeneralPositionViolation);
  CHECK_THROWS_AS(make_realization(path_graph(3), {{0, 0}, {0, 0}, {5, 1}}), GeneralPositionViolation);
  CHECK_THROWS_AS(make_realization(path_graph(3), {{0, 0}, {kCoordinateLimit + 1, 0}, {5, 1}}),
                  GeneralPositionViolation);
  CHECK_THROWS_AS(make_realization(path_graph(3), {{0, 0}, {1, 0}}), GraphError);
}

TEST_CASE("general position errors name the offending points") {
  try {
    make_realization(path_graph(4), {{5, 0}, {0, 0}, {1, 1}, {2, 2}});
    FAIL("expected GeneralPositionViolation");
  } catch (const GeneralPositionViolation& e) {
    const std::string msg = e.what();
    CHECK(msg.find('1') != std::string::npos);
    CHECK(msg.find('3') != std::string::npos);
  }
}

TEST_CASE("complete bipartite construction") {
  const GeometricRealization r = make_complete_bipartite(fixtures::hexagon(), Bipartition({0, 1, 2}, {3, 4, 5}));
  CHECK(r.graph().edge_count() == 9);
  CHECK(r.parts().has_value());
  CHECK_THROWS_AS(make_complete_bipartite(fixtures::hexagon(), Bipartition({0, 1}, {3, 4, 5})), GraphError);
  CHECK_THROWS_AS(GeometricRealization(complete_bipartite_graph(3, 3), fixtures::hexagon(), Bipartition({0, 2, 4}, {1, 3, 5})),
                  GraphError);
}

TEST_CASE("alternating hexagon drawing of K33") {
  const GeometricRealization r = make_complete_bipartite(fixtures::hexagon(), Bipartition({0, 2, 4}, {1, 3, 5}));
  const CrossingStructure cs = crossing_structure(r);
  CHECK(cs.size() == oracle_crossings(r));
  CHECK(cs.size() == 3);
  CHECK(graph_isomorphism(drop_isolated(ex_graph(r)), complete_graph(3)).has_value());
  CHECK(cs.crosses(Edge(0, 3), Edge(1, 4)));
  CHECK(cs.crosses(Edge(1, 4), Edge(0, 3)));
}

TEST_CASE("convex hexagon drawing of K6") {
  const GeometricRealization k6 = make_realization(complete_graph(6), fixtures::hexagon());
  // Every 4 of the 6 hull points contribute one crossing of their two diagonals.
  CHECK(crossing_structure(k6).size() == oracle_crossings(k6));
  CHECK(crossing_structure(k6).size() == 15);
}

TEST_CASE("completion to K6 keeps points and crossings") {
  const GeometricRealization r = make_complete_bipartite(fixtures::hexagon(), Bipartition({0, 2, 4}, {1, 3, 5}));
  const GeometricRealization k6 = complete_to_k6(r);
  CHECK(std::ranges::equal(k6.points(), r.points()));
  CHECK(k6.graph().edge_count() == 15);
  const CrossingStructure small = crossing_structure(r);
  const CrossingStructure large = crossing_structure(k6);
  for (const auto& [e, f] : small.pairs()) CHECK(large.crosses(e, f));
  CHECK_THROWS_AS(complete_to_k6(make_realization(complete_graph(3), {{0, 0}, {4, 0}, {0, 4}})), GraphError);
}

TEST_CASE("bipartitions of six vertices") {
  const auto parts = bipartitions_of_6();
  CHECK(parts.size() == 10);
  std::set<std::vector<int>> lefts;
  for (const Bipartition& b : parts) {
    CHECK(b.left.size() == 3);
    CHECK(b.right.size() == 3);
    CHECK(b.left.front() == 0);
    lefts.insert(b.left);
  }
  CHECK(lefts.size() == 10);
  CHECK(lefts.contains(std::vector<int>{0, 1, 2}));
}

TEST_CASE("realization JSON round trip is byte stable") {
  const GeometricRealization r = make_complete_bipartite(fixtures::hexagon(), Bipartition({0, 2, 4}, {1, 3, 5}));
  const std::string text = to_json(r).dump();
  CHECK(to_json(realization_from_json(parse_json_text(text, "mem"))).dump() == text);
  const GeometricRealization p = make_realization(path_graph(3), {{0, 0}, {4, 0}, {0, 4}});
  const Json j = to_json(p);
  CHECK(j.contains("edges"));
  CHECK(j["parts"].is_null());
  CHECK(to_json(realization_from_json(j)).dump() == j.dump());
}

TEST_CASE("realization JSON errors name the field") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      realization_from_json(parse_json_text(text, "mem"));
    } catch (const ParseError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_with(R"({"n": 3, "parts": null, "points": [[0,0],[1,0]], "edges": []})", "points"));
  CHECK(fails_with(R"({"n": 3, "parts": null, "points": [[0,0],[1,0],[0,1]]})", "edges"));
  CHECK(fails_with(R"({"n": 3, "parts": null, "points": [[0,0],[1,1],[2,2]], "edges": []})", "realization"));
  CHECK(fails_with(R"({"n": 3, "parts": null, "points": [[0,0],[1,0],[0]], "edges": []})", "points[2]"));
  CHECK(fails_with("{\"n\": 3,\n \"parts\": }", "mem:2:"));
}

TEST_CASE("property: crossing scan is complete and K6 completion restricts correctly") {
  std::mt19937_64 rng(21);
  const auto parts = bipartitions_of_6();
  for (int trial = 0; trial < 200;) {
    std::vector<Point> pts(6);
    for (Point& p : pts) p = random_point(rng, 30);
    if (!in_general_position(pts)) continue;
    ++trial;
    const GeometricRealization k6 = make_realization(complete_graph(6), pts);
    const CrossingStructure all = crossing_structure(k6);
    CHECK(all.size() == oracle_crossings(k6));
    for (const Bipartition& b : parts) {
      const GeometricRealization r = make_complete_bipartite(pts, b);
      const CrossingStructure cs = crossing_structure(r);
      CHECK(cs.size() % 2 == 1);
      std::size_t restricted = 0;
      for (const auto& [e, f] : all.pairs()) restricted += r.graph().has_edge(e) && r.graph().has_edge(f);
      CHECK(restricted == cs.size());
      for (const auto& [e, f] : cs.pairs()) CHECK_FALSE(e.shares_vertex(f));
    }
  }
}
