#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "fixtures.hpp"
#include "geohom/morphisms.hpp"
#include "geohom/poset.hpp"

using namespace geohom;

namespace {

std::vector<std::vector<bool>> order(std::size_t n, std::initializer_list<IndexPair> below) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : below) leq[a][b] = true;
  return leq;
}

std::vector<std::string> names_of(const HomPoset& p, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(p.names[i]);
  std::sort(out.begin(), out.end());
  return out;
}

const HomPoset& P() { return fixtures::poset(); }

}  // namespace

TEST_CASE("synthetic chains") {
  const HomPoset chain = make_poset({"a", "b", "c"}, {0, 1, 2}, order(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(chain.hasse_edges == std::vector<IndexPair>{{0, 1}, {1, 2}});
  CHECK(check_graded(chain).ok());
  CHECK(check_partial_order(chain).ok());
  CHECK(check_reduction(chain).ok());
  CHECK(check_lattice(chain).is_lattice);

  const HomPoset flat = make_poset({"a", "b"}, {0, 0}, order(2, {{0, 1}}));
  const CheckOutcome g = check_graded(flat);
  CHECK_FALSE(g.ok());
  REQUIRE(g.violations.size() == 1);
  CHECK(g.violations[0].find("(a, b)") != std::string::npos);
}

TEST_CASE("diamond and bowtie") {
  // Bottom, two middles, top: every pair has a unique join and meet.
  const HomPoset diamond =
      make_poset({"0", "a", "b", "1"}, {0, 1, 1, 2}, order(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  CHECK(check_lattice(diamond).is_lattice);
  // Two bottoms under two tops: the bottoms have two minimal upper bounds.
  const HomPoset bowtie = make_poset({"a", "b", "c", "d"}, {0, 0, 1, 1}, order(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const LatticeReport r = check_lattice(bowtie);
  CHECK_FALSE(r.is_lattice);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == IndexPair{0, 1});
  CHECK(minimal_upper_bounds(bowtie, 0, 1) == std::vector<std::size_t>{2, 3});
  CHECK(maximal_lower_bounds(bowtie, 2, 3) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("order axiom violations are reported") {
  HomPoset p = make_poset({"a", "b", "c"}, {0, 1, 2}, order(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(check_partial_order(p).ok());
  CHECK_FALSE(check_reduction(p).ok());
  p.leq[0][2] = true;
  p.leq[1][0] = true;
  CHECK_FALSE(check_partial_order(p).ok());
  p.leq[1][0] = false;
  p.leq[2][2] = false;
  CHECK_FALSE(check_partial_order(p).ok());
}

TEST_CASE("K33 poset: order axioms and grading") {
  CHECK(P().size() == 19);
  for (std::size_t i = 0; i < P().size(); ++i) CHECK(P().leq[i][i]);
  CHECK(check_partial_order(P()).ok());
  CHECK(check_reduction(P()).ok());
  CHECK(check_monotone(P()).ok());
  CHECK(check_graded(P()).ok());
  std::vector<std::size_t> per_rank(5, 0);
  for (int r : P().rank) ++per_rank[static_cast<std::size_t>(r)];
  CHECK(per_rank == std::vector<std::size_t>{1, 7, 8, 2, 1});
  for (std::size_t i = 0; i < P().size(); ++i) CHECK(P().rank[i] == P().cr[i] / 2);
}

TEST_CASE("K33 poset: row 3.1 and the top") {
  const std::size_t a = P().index_of("3.1");
  std::vector<std::size_t> above;
  for (std::size_t j = 0; j < P().size(); ++j)
    if (P().cr[j] == 5 && P().leq[a][j]) above.push_back(j);
  CHECK(names_of(P(), above) == std::vector<std::string>{"5.1", "5.2"});
  const std::size_t top = P().index_of("9.1");
  for (std::size_t i = 0; i < P().size(); ++i) CHECK(P().leq[i][top]);
  CHECK_THROWS_AS(P().index_of("4.1"), UnknownLabel);
}

TEST_CASE("K33 poset: upper bounds and lattice failure") {
  const std::size_t a = P().index_of("3.1");
  const std::size_t b = P().index_of("3.2");
  CHECK(names_of(P(), minimal_upper_bounds(P(), a, b)) == std::vector<std::string>{"5.1", "5.2"});
  for (std::size_t x = 0; x < P().size(); ++x) CHECK(minimal_upper_bounds(P(), x, x) == std::vector<std::size_t>{x});

  // Elements above both 7-level classes, straight from the matrix.
  const std::size_t s71 = P().index_of("7.1");
  const std::size_t s72 = P().index_of("7.2");
  std::vector<std::size_t> common;
  for (std::size_t k = 0; k < P().size(); ++k)
    if (P().leq[s71][k] && P().leq[s72][k]) common.push_back(k);
  CHECK(names_of(P(), common) == std::vector<std::string>{"9.1"});
  CHECK(minimal_upper_bounds(P(), s71, s72) == common);

  const LatticeReport r = check_lattice(P());
  CHECK_FALSE(r.is_lattice);
  CHECK(std::find(r.counterexamples.begin(), r.counterexamples.end(), IndexPair{std::min(a, b), std::max(a, b)}) !=
        r.counterexamples.end());
}

TEST_CASE("K33 poset: extrema and thickness") {
  const ExtremaReport r = extrema_and_thickness_check(P());
  CHECK(r.ok());
  REQUIRE(r.maximum.has_value());
  CHECK(P().names[*r.maximum] == "9.1");
  REQUIRE(r.minimum.has_value());
  CHECK(P().names[*r.minimum] == "1.1");
  CHECK(r.thin_not_below_71.empty());
  CHECK_FALSE(P().leq[P().index_of("5.6")][P().index_of("7.1")]);
}

TEST_CASE("K33 poset: Hasse witnesses are homomorphisms") {
  REQUIRE(P().hasse_witnesses.size() == P().hasse_edges.size());
  const auto& cs = fixtures::k33().classes;
  for (std::size_t e = 0; e < P().hasse_edges.size(); ++e) {
    const auto [i, j] = P().hasse_edges[e];
    CHECK(P().hasse_witnesses[e].injective());
    CHECK(is_geo_homomorphism(cs[i].representative, cs[j].representative, P().hasse_witnesses[e]));
  }
}

TEST_CASE("corrupted order is caught by the reduction check") {
  HomPoset p = P();
  const std::size_t lo = P().index_of("1.1");
  const std::size_t hi = P().index_of("9.1");
  p.leq[lo][hi] = false;
  CHECK_FALSE(check_reduction(p).ok());
  CHECK_FALSE(check_partial_order(p).ok());
}

TEST_CASE("poset exports") {
  const Json j = to_json(P());
  CHECK(j["classes"].size() == 19);
  CHECK(j["leq"].size() == 19);
  CHECK(j["hasse_edges"].size() == P().hasse_edges.size());
  CHECK(j["hasse_edges"][0].contains("witness"));
  const std::string dot = poset_dot(P());
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("color=blue") != std::string::npos);
  CHECK(dot.find("\"3.1\" -> \"5.1\"") != std::string::npos);
  CHECK(to_json(P()).dump() == to_json(build_poset(fixtures::k33())).dump());
}

TEST_CASE("poset does not depend on the worker count") {
  ::setenv("GEOHOM_THREADS", "4", 1);
  const std::string four = to_json(build_poset(fixtures::k33())).dump();
  ::setenv("GEOHOM_THREADS", "1", 1);
  const std::string one = to_json(build_poset(fixtures::k33())).dump();
  ::unsetenv("GEOHOM_THREADS");
  CHECK(four == one);
}
