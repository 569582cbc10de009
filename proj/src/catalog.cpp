#include "geohom/catalog.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <memory>
#include <set>

#include "geohom/invariants.hpp"
#include "geohom/morphisms.hpp"

namespace geohom::catalog {

namespace {

// Row 3.i lists the 5-level classes it precedes.
const std::array<std::set<int>, 7> kTable = {{
    {1, 2},
    {1, 2, 3, 4, 5, 6},
    {1, 2, 3, 4, 5, 6},
    {2, 3, 4, 5, 6, 7},
    {3, 4, 5, 7, 8},
    {3, 4, 5, 6, 7, 8},
    {7, 8},
}};

std::string label_of(int cr, int k) { return std::to_string(cr) + "." + std::to_string(k); }

bool same_shape(const AbstractGraph& g, const AbstractGraph& h) {
  return graph_isomorphism(drop_isolated(g), drop_isolated(h)).has_value();
}

// Class indices at crossing number cr, in atlas (signature) order.
std::vector<std::size_t> level(const Atlas& atlas, int cr) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
    if (atlas.classes[i].signature.cr == cr) out.push_back(i);
  }
  return out;
}

std::size_t exactly_one(const std::vector<std::size_t>& hits, const std::string& label,
                        const std::string& rule) {
  if (hits.size() != 1) {
    throw AnchorConflict("anchor for " + label + " (" + rule + ") matched " + std::to_string(hits.size()) +
                         " classes");
  }
  return hits.front();
}

void require_level_sizes(const Atlas& atlas) {
  if (atlas.target != Target::k33) throw AnchorConflict("catalog labels apply to k33 atlases only");
  if (atlas.histogram() != level_sizes()) {
    std::string got;
    for (const auto& [cr, count] : atlas.histogram()) {
      got += (got.empty() ? "" : " ") + std::to_string(cr) + ":" + std::to_string(count);
    }
    throw AnchorConflict("level sizes " + got + " do not match 1:1 3:7 5:8 7:2 9:1");
  }
}

// Free labels of one level and the classes they are spread over.
struct FreeLevel {
  std::vector<std::string> labels;
  std::vector<std::size_t> classes;
};

FreeLevel free_level(const Atlas& atlas, int cr, int size, const std::map<std::string, std::size_t>& pinned) {
  FreeLevel f;
  std::set<std::size_t> used;
  for (const auto& [label, idx] : pinned) used.insert(idx);
  for (int k = 1; k <= size; ++k) {
    if (!pinned.contains(label_of(cr, k))) f.labels.push_back(label_of(cr, k));
  }
  for (std::size_t idx : level(atlas, cr)) {
    if (!used.contains(idx)) f.classes.push_back(idx);
  }
  return f;
}

using Assignment = std::map<std::string, std::size_t>;

// Enumerates every placement of the free labels, each level permuted independently, in
// lexicographic order of the class index lists.
template <typename Visit>
void for_each_placement(const std::vector<FreeLevel>& levels, Assignment& current, std::size_t depth,
                        const Visit& visit) {
  if (depth == levels.size()) {
    visit(current);
    return;
  }
  std::vector<std::size_t> perm = levels[depth].classes;
  std::sort(perm.begin(), perm.end());
  do {
    for (std::size_t i = 0; i < perm.size(); ++i) current[levels[depth].labels[i]] = perm[i];
    for_each_placement(levels, current, depth + 1, visit);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<std::string> table_disagreements(const Assignment& a, const Relation& precedes) {
  std::vector<std::string> out;
  for (int row = 1; row <= 7; ++row) {
    for (int col = 1; col <= 8; ++col) {
      const std::string src = label_of(3, row);
      const std::string dst = label_of(5, col);
      const bool listed = table_precedes(row, col);
      if (listed != precedes(a.at(src), a.at(dst))) {
        out.push_back(src + " -> " + dst + (listed ? ": listed, none exists" : ": not listed, homomorphism exists"));
      }
    }
  }
  return out;
}

std::vector<std::string> level7_disagreements(const Assignment& a, const Relation& precedes) {
  std::vector<std::string> out;
  for (const StatedNonPrecedence& s : stated_non_precedences()) {
    if (s.dst.front() != '7') continue;
    if (precedes(a.at(s.src), a.at(s.dst))) {
      out.push_back(s.src + " -> " + s.dst + ": stated non-precedence, homomorphism exists");
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& labels() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> out;
    for (const auto& [cr, count] : level_sizes()) {
      for (std::size_t k = 1; k <= count; ++k) out.push_back(label_of(cr, static_cast<int>(k)));
    }
    return out;
  }();
  return all;
}

const std::vector<std::pair<int, std::size_t>>& level_sizes() {
  static const std::vector<std::pair<int, std::size_t>> sizes = {{1, 1}, {3, 7}, {5, 8}, {7, 2}, {9, 1}};
  return sizes;
}

bool table_precedes(int row, int col) {
  if (row < 1 || row > 7 || col < 1 || col > 8) throw std::out_of_range("table cell out of range");
  return kTable[static_cast<std::size_t>(row - 1)].contains(col);
}

const std::vector<StatedNonPrecedence>& stated_non_precedences() {
  static const std::vector<StatedNonPrecedence> all = [] {
    std::vector<StatedNonPrecedence> out;
    auto add = [&out](const std::string& src, std::initializer_list<const char*> dsts, int part) {
      for (const char* d : dsts) out.push_back({src, d, part});
    };
    add("3.1", {"5.3", "5.4", "5.5", "5.6", "5.7", "5.8"}, 1);
    add("3.2", {"5.7", "5.8"}, 1);
    add("3.3", {"5.7", "5.8"}, 1);
    for (const char* s : {"5.1", "5.2", "5.3"}) add(s, {"7.2"}, 1);
    add("3.5", {"5.1", "5.2", "5.6"}, 2);
    add("3.7", {"5.1", "5.2", "5.3", "5.4", "5.5", "5.6"}, 2);
    for (const char* s : {"5.6", "5.7", "5.8"}) add(s, {"7.1"}, 2);
    add("3.4", {"5.1", "5.8"}, 3);
    add("3.6", {"5.1", "5.2"}, 3);
    return out;
  }();
  return all;
}

const std::vector<std::string>& anchored_labels() {
  static const std::vector<std::string> all = {"1.1", "3.5", "3.6", "5.1", "5.2", "5.4", "5.6", "9.1"};
  return all;
}

std::vector<std::pair<std::string, std::size_t>> anchor_classes(const Atlas& atlas) {
  require_level_sizes(atlas);
  std::vector<std::pair<std::string, std::size_t>> out;
  out.emplace_back("1.1", level(atlas, 1).front());

  std::vector<std::size_t> p6, deg3, deg2;
  for (std::size_t i : level(atlas, 3)) {
    const GeometricRealization& r = atlas.classes[i].representative;
    if (!same_shape(uncrossed_subgraph(r), path_graph(6))) continue;
    p6.push_back(i);
    const int d = ex_graph(r).max_degree();
    if (d == 3) deg3.push_back(i);
    if (d == 2) deg2.push_back(i);
  }
  if (p6.size() != 2) {
    throw AnchorConflict("uncrossed subgraph P6 matched " + std::to_string(p6.size()) + " 3-crossing classes");
  }
  out.emplace_back("3.5", exactly_one(deg3, "3.5", "uncrossed P6, EX max degree 3"));
  out.emplace_back("3.6", exactly_one(deg2, "3.6", "uncrossed P6, EX max degree 2"));

  const AbstractGraph c4k2 = disjoint_union(cycle_graph(4), complete_graph(2));
  std::vector<std::size_t> ex_c4k2, ex_p6, p4k2_c5, p4k2_other;
  for (std::size_t i : level(atlas, 5)) {
    const GeometricRealization& r = atlas.classes[i].representative;
    const AbstractGraph g0 = uncrossed_subgraph(r);
    const AbstractGraph ex = ex_graph(r);
    if (same_shape(g0, matching_graph(3))) {
      if (same_shape(ex, c4k2)) ex_c4k2.push_back(i);
      if (same_shape(ex, path_graph(6))) ex_p6.push_back(i);
    }
    if (same_shape(g0, disjoint_union(path_graph(4), complete_graph(2)))) {
      (subgraph_embeds(cycle_graph(5), ex) ? p4k2_c5 : p4k2_other).push_back(i);
    }
  }
  out.emplace_back("5.1", exactly_one(ex_c4k2, "5.1", "uncrossed 3K2, EX C4+K2+3K1"));
  out.emplace_back("5.2", exactly_one(ex_p6, "5.2", "uncrossed 3K2, EX P6+3K1"));
  out.emplace_back("5.4", exactly_one(p4k2_other, "5.4", "uncrossed P4+K2, EX without a 5-cycle"));
  out.emplace_back("5.6", exactly_one(p4k2_c5, "5.6", "uncrossed P4+K2, EX with a 5-cycle"));
  out.emplace_back("9.1", level(atlas, 9).front());
  return out;
}

Relation representative_relation(const Atlas& atlas) {
  auto cache = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, bool>>();
  return [&atlas, cache](std::size_t i, std::size_t j) {
    const auto key = std::make_pair(i, j);
    if (auto it = cache->find(key); it != cache->end()) return it->second;
    const bool v = precedes(atlas.classes[i].representative, atlas.classes[j].representative);
    cache->emplace(key, v);
    return v;
  };
}

LabelingReport assign_catalog_labels(Atlas& atlas) {
  return assign_catalog_labels(atlas, representative_relation(atlas));
}

LabelingReport assign_catalog_labels(Atlas& atlas, const Relation& precedes) {
  const auto anchors = anchor_classes(atlas);
  Assignment pinned(anchors.begin(), anchors.end());
  const std::vector<FreeLevel> levels = {free_level(atlas, 3, 7, pinned), free_level(atlas, 5, 8, pinned),
                                         free_level(atlas, 7, 2, pinned)};

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Assignment> optimal;
  Assignment current = pinned;
  for_each_placement(levels, current, 0, [&](const Assignment& a) {
    const std::size_t score = table_disagreements(a, precedes).size() + level7_disagreements(a, precedes).size();
    if (score < best) {
      best = score;
      optimal.clear();
    }
    if (score == best) optimal.push_back(a);
  });

  const Assignment& chosen = optimal.front();
  for (RealizationClass& c : atlas.classes) {
    c.label.reset();
    c.provisional = false;
  }
  for (const auto& [label, idx] : chosen) {
    RealizationClass& c = atlas.classes[idx];
    c.label = label;
    c.provisional = std::any_of(optimal.begin(), optimal.end(),
                                [&](const Assignment& a) { return a.at(label) != idx; });
  }

  LabelingReport report;
  report.optimal_labelings = optimal.size();
  report.disagreements = table_disagreements(chosen, precedes);
  for (std::string& d : level7_disagreements(chosen, precedes)) report.disagreements.push_back(std::move(d));
  return report;
}

TableMatch match_table(const Atlas& atlas, const Relation& precedes) {
  const auto anchors = anchor_classes(atlas);
  Assignment pinned(anchors.begin(), anchors.end());
  const std::vector<FreeLevel> levels = {free_level(atlas, 3, 7, pinned), free_level(atlas, 5, 8, pinned)};

  // Among optimal placements, prefer the one closest to the labels already in the atlas.
  const auto relabelled = [&atlas](const Assignment& a) {
    std::size_t moved = 0;
    for (const auto& [label, idx] : a) moved += atlas.classes[idx].label != label;
    return moved;
  };
  TableMatch best;
  best.min_mismatches = std::numeric_limits<std::size_t>::max();
  std::size_t best_moved = 0;
  Assignment current = pinned;
  for_each_placement(levels, current, 0, [&](const Assignment& a) {
    auto cells = table_disagreements(a, precedes);
    const std::size_t moved = relabelled(a);
    if (cells.size() < best.min_mismatches || (cells.size() == best.min_mismatches && moved < best_moved)) {
      best.min_mismatches = cells.size();
      best.mismatched_cells = std::move(cells);
      best_moved = moved;
    }
  });
  return best;
}

}  // namespace geohom::catalog
