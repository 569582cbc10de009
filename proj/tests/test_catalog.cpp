#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "geohom/catalog.hpp"
#include "geohom/errors.hpp"
#include "geohom/invariants.hpp"

using namespace geohom;
using fixtures::rep;

TEST_CASE("catalog data") {
  CHECK(catalog::labels().size() == 19);
  CHECK(catalog::labels().front() == "1.1");
  CHECK(catalog::labels().back() == "9.1");
  std::size_t cells = 0;
  for (int r = 1; r <= 7; ++r)
    for (int c = 1; c <= 8; ++c) cells += catalog::table_precedes(r, c);
  CHECK(cells == 33);
  CHECK_THROWS_AS(catalog::table_precedes(0, 1), std::out_of_range);
  CHECK(catalog::stated_non_precedences().size() == 29);
  // Every 3-to-5 non-precedence listed in the bullets is an empty table cell.
  for (const auto& s : catalog::stated_non_precedences()) {
    if (s.src[0] != '3') continue;
    CHECK_FALSE(catalog::table_precedes(s.src[2] - '0', s.dst[2] - '0'));
  }
}

TEST_CASE("every class gets a distinct label") {
  std::set<std::string> seen;
  for (const RealizationClass& c : fixtures::k33().classes) {
    REQUIRE(c.label.has_value());
    CHECK(c.label->front() - '0' == c.signature.cr);
    seen.insert(*c.label);
  }
  CHECK(seen.size() == 19);
}

TEST_CASE("anchored labels follow the invariants") {
  CHECK(graph_isomorphism(ex_graph(rep("5.1")), disjoint_union({cycle_graph(4), complete_graph(2), edgeless(3)})));
  CHECK(ex_graph(rep("3.5")).max_degree() == 3);
  CHECK(ex_graph(rep("3.6")).max_degree() == 2);
  CHECK(subgraph_embeds(cycle_graph(5), ex_graph(rep("5.6"))));
  CHECK_FALSE(subgraph_embeds(cycle_graph(5), ex_graph(rep("5.4"))));
  CHECK(fixtures::k33().at("9.1").signature.cr == 9);
  for (const std::string& l : catalog::anchored_labels()) CHECK_FALSE(fixtures::k33().at(l).provisional);
}

TEST_CASE("only the interchangeable labels are provisional") {
  std::set<std::string> provisional;
  for (const RealizationClass& c : fixtures::k33().classes)
    if (c.provisional) provisional.insert(*c.label);
  CHECK(provisional == std::set<std::string>{"3.2", "3.3"});
}

TEST_CASE("labeling report") {
  Atlas a = fixtures::k33();
  const catalog::LabelingReport r = catalog::assign_catalog_labels(a);
  CHECK(r.optimal_labelings == 2);
  CHECK(r.disagreements == std::vector<std::string>{"3.2 -> 5.3: listed, none exists"});
  CHECK(to_json(a).dump() == to_json(fixtures::k33()).dump());
}

TEST_CASE("labeling uses the supplied relation") {
  Atlas a = fixtures::k33();
  // Under the published table itself every cell agrees.
  const auto published = [](std::size_t i, std::size_t j) {
    const std::string s = *fixtures::k33().classes[i].label;
    const std::string d = *fixtures::k33().classes[j].label;
    if (s[0] == '3' && d[0] == '5') return catalog::table_precedes(s[2] - '0', d[2] - '0');
    return d[0] == '7' && !((s == "5.6" || s == "5.7" || s == "5.8") && d == "7.1") &&
           !((s == "5.1" || s == "5.2" || s == "5.3") && d == "7.2");
  };
  const catalog::LabelingReport r = catalog::assign_catalog_labels(a, published);
  CHECK(r.disagreements.empty());
  CHECK(catalog::match_table(a, published).min_mismatches == 0);
}

TEST_CASE("anchor conflicts") {
  Atlas truncated = fixtures::k33();
  truncated.classes.pop_back();
  CHECK_THROWS_AS(catalog::assign_catalog_labels(truncated), AnchorConflict);

  Atlas duplicated = fixtures::k33();
  const std::size_t i51 = *duplicated.find("5.1");
  const std::size_t i52 = *duplicated.find("5.2");
  duplicated.classes[i52] = duplicated.classes[i51];
  CHECK_THROWS_WITH_AS(catalog::assign_catalog_labels(duplicated), doctest::Contains("5.1"), AnchorConflict);

  Atlas six = fixtures::k6();
  CHECK_THROWS_AS(catalog::anchor_classes(six), AnchorConflict);
}
