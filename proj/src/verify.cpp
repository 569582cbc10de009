#include "geohom/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "geohom/invariants.hpp"
#include "geohom/morphisms.hpp"
#include "geohom/oracle.hpp"
#include "geohom/parallel.hpp"
#include "geohom/sampling.hpp"

namespace geohom {

namespace {

std::string histogram_text(const Atlas& a) {
  std::string out;
  for (const auto& [cr, count] : a.histogram()) {
    out += (out.empty() ? "" : " ") + std::to_string(cr) + ":" + std::to_string(count);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
  std::string out;
  for (const std::string& s : parts) out += (out.empty() ? "" : sep) + s;
  return out;
}

bool same_shape(const AbstractGraph& g, const AbstractGraph& h) {
  return graph_isomorphism(drop_isolated(g), drop_isolated(h)).has_value();
}

// Runs an enumeration, turning budget exhaustion into an error message plus the partial atlas.
Atlas enumerate_or_partial(Target target, std::uint64_t seed, std::optional<std::string>& error) {
  EnumerationConfig cfg;
  cfg.seed = seed;
  try {
    return enumerate_classes(target, cfg);
  } catch (const BudgetExhausted& e) {
    error = to_string(target) + " enumeration did not stabilize within the sample budget";
    return e.partial();
  }
}

CheckResult result(int id, bool passed, std::string detail) {
  return {id, Verifier::criterion_name(id), passed, std::move(detail)};
}

}  // namespace

Verifier::Verifier(VerifyInputs inputs) : inputs_(std::move(inputs)) {}

std::string Verifier::criterion_name(int id) {
  static const char* const names[] = {
      "atlas completeness", "crossing histogram",  "parity",          "invariant anchors", "precedence table",
      "stated non-precedences", "condition soundness", "poset structure", "thickness claims", "oracle equivalence",
  };
  if (id < 1 || id > kCriteria) throw std::out_of_range("criterion id must lie in [1, 10]");
  return names[id - 1];
}

const Atlas& Verifier::k33() {
  if (!k33_) k33_ = inputs_.k33_atlas ? *inputs_.k33_atlas : enumerate_or_partial(Target::k33, inputs_.seed, k33_error_);
  return *k33_;
}

const Atlas& Verifier::k6() {
  if (!k6_) k6_ = inputs_.k6_atlas ? *inputs_.k6_atlas : enumerate_or_partial(Target::k6, inputs_.seed, k6_error_);
  return *k6_;
}

const Atlas* Verifier::labelled() {
  if (!labeling_done_) {
    labeling_done_ = true;
    Atlas copy = k33();
    try {
      catalog::assign_catalog_labels(copy);
      labelled_ = std::move(copy);
    } catch (const AnchorConflict& e) {
      labeling_error_ = std::string("catalog labels unavailable: ") + e.what();
    }
  }
  return labelled_ ? &*labelled_ : nullptr;
}

const HomPoset& Verifier::poset() {
  if (!poset_) {
    if (inputs_.poset) {
      poset_ = *inputs_.poset;
    } else {
      const Atlas* a = labelled();
      poset_ = build_poset(a ? *a : k33());
    }
  }
  return *poset_;
}

CheckResult Verifier::run(int id) {
  switch (id) {
    case 1: return atlas_completeness();
    case 2: return crossing_histogram();
    case 3: return parity();
    case 4: return anchors();
    case 5: return table_pattern();
    case 6: return stated_non_precedences();
    case 7: return soundness();
    case 8: return poset_structure();
    case 9: return thickness_claims();
    case 10: return oracle_equivalence();
    default: throw std::out_of_range("criterion id must lie in [1, 10]");
  }
}

std::vector<CheckResult> Verifier::run_all() {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run(id));
  return out;
}

CheckResult Verifier::atlas_completeness() {
  std::vector<std::string> problems;
  const Atlas& a = k33();
  const Atlas& b = k6();
  if (k33_error_) problems.push_back(*k33_error_);
  if (k6_error_) problems.push_back(*k6_error_);
  if (a.classes.size() != 19) problems.push_back("k33 has " + std::to_string(a.classes.size()) + " classes, expected 19");
  if (b.classes.size() != 15) problems.push_back("k6 has " + std::to_string(b.classes.size()) + " classes, expected 15");
  if (!stale_signatures(a).empty() || !stale_signatures(b).empty()) {
    problems.push_back("stored signatures differ from their representatives");
  }

  std::optional<std::string> e33, e6;
  const Atlas a2 = enumerate_or_partial(Target::k33, inputs_.seed + 1, e33);
  const Atlas b2 = enumerate_or_partial(Target::k6, inputs_.seed + 1, e6);
  if (e33) problems.push_back(*e33 + " (seed " + std::to_string(inputs_.seed + 1) + ")");
  if (e6) problems.push_back(*e6 + " (seed " + std::to_string(inputs_.seed + 1) + ")");
  if (a2.classes.size() != a.classes.size() || b2.classes.size() != b.classes.size()) {
    problems.push_back("seed " + std::to_string(inputs_.seed + 1) + " gives " + std::to_string(a2.classes.size()) +
                       " k33 / " + std::to_string(b2.classes.size()) + " k6 classes");
  }
  std::ostringstream detail;
  detail << "k33 " << a.classes.size() << " classes, k6 " << b.classes.size() << " classes, seed "
         << inputs_.seed + 1 << " gives " << a2.classes.size() << "/" << b2.classes.size();
  if (!problems.empty()) detail << "; " << join(problems);
  return result(1, problems.empty(), detail.str());
}

CheckResult Verifier::crossing_histogram() {
  const Atlas& a = k33();
  const bool sizes = a.histogram() == catalog::level_sizes();
  const bool odd = std::all_of(a.classes.begin(), a.classes.end(),
                               [](const RealizationClass& c) { return c.signature.cr % 2 == 1; });
  std::string detail = "histogram " + histogram_text(a);
  if (!sizes) detail += "; expected 1:1 3:7 5:8 7:2 9:1";
  if (!odd) detail += "; some class has an even crossing number";
  return result(2, sizes && odd, detail);
}

CheckResult Verifier::parity() {
  constexpr std::size_t kSets = 10'000;
  std::mt19937_64 rng(inputs_.seed);
  const auto parts = bipartitions_of_6();
  std::size_t drawings = 0;
  std::size_t even = 0;
  std::vector<Point> pts(6);
  for (std::size_t s = 0; s < kSets;) {
    for (Point& p : pts) p = random_point(rng, 1000);
    if (!in_general_position(pts)) continue;
    ++s;
    for (const Bipartition& b : parts) {
      ++drawings;
      if (cr_total(make_complete_bipartite(pts, b)) % 2 == 0) ++even;
    }
  }
  return result(3, even == 0,
                std::to_string(drawings) + " drawings, " + std::to_string(even) + " with an even crossing count");
}

CheckResult Verifier::anchors() {
  const Atlas& a = k33();
  std::vector<std::string> notes;
  bool ok = true;

  std::vector<int> p6_degrees;
  std::vector<AbstractGraph> m3_ex, p4k2_ex;
  for (const RealizationClass& c : a.classes) {
    const AbstractGraph g0 = uncrossed_subgraph(c.representative);
    const AbstractGraph ex = ex_graph(c.representative);
    if (c.signature.cr == 3 && same_shape(g0, path_graph(6))) p6_degrees.push_back(ex.max_degree());
    if (c.signature.cr == 5 && same_shape(g0, matching_graph(3))) m3_ex.push_back(ex);
    if (c.signature.cr == 5 && same_shape(g0, disjoint_union(path_graph(4), complete_graph(2)))) {
      p4k2_ex.push_back(ex);
    }
  }

  std::sort(p6_degrees.begin(), p6_degrees.end());
  const bool p6_ok = p6_degrees == std::vector<int>{2, 3};
  notes.push_back("uncrossed P6 at cr 3: " + std::to_string(p6_degrees.size()) + " classes" +
                  (p6_ok ? ", EX max degrees 3 and 2" : ", EX max degrees do not split 3/2"));
  ok = ok && p6_ok;

  const AbstractGraph c4k2 = disjoint_union(cycle_graph(4), complete_graph(2));
  bool m3_ok = m3_ex.size() == 2;
  if (m3_ok) {
    m3_ok = (same_shape(m3_ex[0], c4k2) && same_shape(m3_ex[1], path_graph(6))) ||
            (same_shape(m3_ex[1], c4k2) && same_shape(m3_ex[0], path_graph(6)));
  }
  notes.push_back("uncrossed 3K2 at cr 5: " + std::to_string(m3_ex.size()) + " classes" +
                  (m3_ok ? ", EX C4+K2+3K1 and P6+3K1" : ", EX graphs do not match C4+K2+3K1 / P6+3K1"));
  ok = ok && m3_ok;

  std::size_t trees = 0;
  std::size_t with_c5 = 0;
  for (const AbstractGraph& ex : p4k2_ex) {
    if (is_tree(drop_isolated(ex))) ++trees;
    if (subgraph_embeds(cycle_graph(5), ex)) ++with_c5;
  }
  const bool p4k2_ok = p4k2_ex.size() == 2 && trees == 1 && with_c5 == 1;
  notes.push_back("uncrossed P4+K2 at cr 5: " + std::to_string(p4k2_ex.size()) + " classes, " +
                  std::to_string(trees) + " with EX a tree, " + std::to_string(with_c5) + " with EX containing C5");
  ok = ok && p4k2_ok;
  return result(4, ok, join(notes));
}

CheckResult Verifier::table_pattern() {
  const Atlas* a = labelled();
  if (!a) return result(5, false, *labeling_error_);
  const HomPoset& p = poset();
  if (p.size() != a->classes.size()) return result(5, false, "poset and atlas differ in size");
  const auto match = catalog::match_table(*a, [&p](std::size_t i, std::size_t j) { return bool(p.leq[i][j]); });
  std::string detail = std::to_string(match.min_mismatches) + " mismatched cells under the best placement";
  if (!match.mismatched_cells.empty()) detail += ": " + join(match.mismatched_cells);
  return result(5, match.min_mismatches == 0, detail);
}

CheckResult Verifier::stated_non_precedences() {
  const Atlas* a = labelled();
  if (!a) return result(6, false, *labeling_error_);
  const auto& bullets = catalog::stated_non_precedences();
  std::vector<std::string> failures(bullets.size());
  parallel_for(bullets.size(), [&](std::size_t k) {
    const auto& b = bullets[k];
    const GeometricRealization& src = a->at(b.src).representative;
    const GeometricRealization& dst = a->at(b.dst).representative;
    const std::string name = b.src + " -> " + b.dst;
    if (!find_geo_homomorphisms(src, dst, true).empty()) {
      failures[k] = name + ": homomorphism exists";
      return;
    }
    const PropReport r = prop_conditions(src, dst);
    const bool cited_fails = (b.part == 1 && !r.cond1_uncrossed_embeds) || (b.part == 2 && !r.cond2_ex_hom_exists) ||
                             (b.part == 3 && !r.cond3_lex_hom_exists);
    if (!cited_fails) failures[k] = name + ": condition " + std::to_string(b.part) + " holds";
  });
  std::erase(failures, std::string());
  std::string detail = std::to_string(bullets.size() - failures.size()) + "/" + std::to_string(bullets.size()) +
                       " stated non-precedences verified with the cited condition failing";
  if (!failures.empty()) detail += ": " + join(failures);
  return result(6, failures.empty(), detail);
}

CheckResult Verifier::soundness() {
  const Atlas& a = k33();
  const std::size_t n = a.classes.size();
  std::vector<std::string> failures(n * n);
  std::vector<std::size_t> maps(n * n, 0);
  parallel_for(n * n, [&](std::size_t k) {
    const GeometricRealization& src = a.classes[k / n].representative;
    const GeometricRealization& dst = a.classes[k % n].representative;
    const auto homs = find_geo_homomorphisms(src, dst, true);
    maps[k] = homs.size();
    if (homs.empty()) return;
    if (!prop_conditions(src, dst).all()) {
      failures[k] = "c" + std::to_string(k / n) + " -> c" + std::to_string(k % n) + ": a condition fails";
      return;
    }
    for (const VertexMap& f : homs) {
      if (!prop_conditions_for_map(src, dst, f).all()) {
        failures[k] = "c" + std::to_string(k / n) + " -> c" + std::to_string(k % n) + ": a witness violates a condition";
        return;
      }
    }
  });
  std::size_t related = 0;
  std::size_t witnesses = 0;
  for (std::size_t m : maps) {
    related += m > 0;
    witnesses += m;
  }
  std::erase(failures, std::string());
  std::string detail = std::to_string(related) + " related pairs, " + std::to_string(witnesses) + " witnesses, " +
                       std::to_string(failures.size()) + " counterexamples";
  if (!failures.empty()) detail += ": " + join(failures);
  return result(7, failures.empty(), detail);
}

CheckResult Verifier::poset_structure() {
  const HomPoset& p = poset();
  std::vector<std::string> problems;
  for (const CheckOutcome& c : {check_partial_order(p), check_reduction(p), check_monotone(p), check_graded(p)}) {
    for (const std::string& v : c.violations) problems.push_back(v);
  }

  std::vector<std::size_t> per_rank(5, 0);
  for (int r : p.rank) {
    if (r >= 0 && r < 5) ++per_rank[static_cast<std::size_t>(r)];
  }
  if (per_rank != std::vector<std::size_t>{1, 7, 8, 2, 1}) problems.push_back("rank level sizes differ from 1,7,8,2,1");

  const ExtremaReport ext = extrema_and_thickness_check(p);
  if (!ext.maximum) {
    problems.push_back("no unique maximum");
  } else if (p.cr[*ext.maximum] != 9) {
    problems.push_back("maximum " + p.names[*ext.maximum] + " is not the cr 9 class");
  }

  const LatticeReport lat = check_lattice(p);
  if (lat.is_lattice) problems.push_back("poset is a lattice");
  std::string witness_note;
  try {
    const std::size_t a = p.index_of("3.1");
    const std::size_t b = p.index_of("3.2");
    const IndexPair key{std::min(a, b), std::max(a, b)};
    if (std::find(lat.counterexamples.begin(), lat.counterexamples.end(), key) == lat.counterexamples.end()) {
      problems.push_back("(3.1, 3.2) is not a lattice counterexample");
    }
    std::vector<std::string> mub;
    for (std::size_t k : minimal_upper_bounds(p, a, b)) mub.push_back(p.names[k]);
    std::sort(mub.begin(), mub.end());
    witness_note = "mub(3.1, 3.2) = {" + join(mub, ", ") + "}";
    if (mub != std::vector<std::string>{"5.1", "5.2"}) problems.push_back(witness_note + ", expected {5.1, 5.2}");
  } catch (const UnknownLabel& e) {
    problems.push_back(labeling_error_.value_or(e.what()));
  }

  std::string detail = std::to_string(p.size()) + " classes, " + std::to_string(p.hasse_edges.size()) +
                       " Hasse edges, " + std::to_string(lat.counterexamples.size()) + " non-lattice pairs";
  if (ext.maximum) detail += ", maximum " + p.names[*ext.maximum];
  if (!witness_note.empty()) detail += ", " + witness_note;
  if (!problems.empty()) detail += "; " + join(problems);
  return result(8, problems.empty(), detail);
}

CheckResult Verifier::thickness_claims() {
  if (!inputs_.poset && !labelled()) return result(9, false, *labeling_error_);
  const HomPoset& p = poset();
  const ExtremaReport ext = extrema_and_thickness_check(p);
  std::size_t thin = 0;
  for (int t : p.thickness) thin += t <= 2;
  std::string detail = std::to_string(thin) + " classes of thickness <= 2, " +
                       std::to_string(thin - ext.thin_not_below_71.size()) + " of them below 7.1";
  if (!ext.failures.empty()) detail += "; " + join(ext.failures);
  return result(9, ext.ok(), detail);
}

CheckResult Verifier::oracle_equivalence() {
  const Atlas& a = k33();
  const std::size_t n = a.classes.size();
  std::vector<std::string> failures(n * n);
  parallel_for(n * n, [&](std::size_t k) {
    const GeometricRealization& src = a.classes[k / n].representative;
    const GeometricRealization& dst = a.classes[k % n].representative;
    const auto pruned = find_geo_homomorphisms(src, dst, true);
    const oracle::BruteForceResult brute = oracle::injective_homomorphisms(src, dst);
    const std::set<VertexMap> lhs(pruned.begin(), pruned.end());
    const std::set<VertexMap> rhs(brute.homomorphisms.begin(), brute.homomorphisms.end());
    const std::string name = "c" + std::to_string(k / n) + " -> c" + std::to_string(k % n);
    if (brute.candidates != 72) {
      failures[k] = name + ": " + std::to_string(brute.candidates) + " abstract isomorphisms, expected 72";
    } else if (lhs != rhs) {
      failures[k] = name + ": pruned " + std::to_string(lhs.size()) + " maps, brute force " + std::to_string(rhs.size());
    }
  });
  std::erase(failures, std::string());

  constexpr std::size_t kQuadruples = 1000;
  std::mt19937_64 rng(inputs_.seed);
  std::size_t disagreements = 0;
  std::size_t crossing = 0;
  std::vector<Point> q(4);
  for (std::size_t i = 0; i < kQuadruples;) {
    // Alternate a small grid (near-degenerate layouts) with the full coordinate range.
    const std::int64_t bound = i % 2 == 0 ? 16 : kCoordinateLimit;
    for (Point& p : q) p = random_point(rng, bound);
    if (!in_general_position(q)) continue;
    ++i;
    const Segment s{q[0], q[1]};
    const Segment t{q[2], q[3]};
    const bool fast = proper_cross(s, t);
    crossing += fast;
    disagreements += fast != oracle::segments_cross_rational(s, t);
  }

  std::string detail = std::to_string(n * n) + " class pairs, " + std::to_string(failures.size()) +
                       " disagreements with brute force; " + std::to_string(kQuadruples) + " segment quadruples (" +
                       std::to_string(crossing) + " crossing), " + std::to_string(disagreements) + " disagreements";
  if (!failures.empty()) detail += ": " + join(failures);
  return result(10, failures.empty() && disagreements == 0, detail);
}

std::string format_result(const CheckResult& r) {
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + r.detail;
}

}  // namespace geohom
