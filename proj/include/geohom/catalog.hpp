#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "geohom/atlas.hpp"

// The published catalog of the 19 K33 drawing classes: labels "cr.k", the table of which
// 3-crossing classes precede which 5-crossing classes, and the listed non-precedences together
// with the necessary condition (1, 2 or 3) cited for each.
namespace geohom::catalog {

/// All 19 labels: 1.1, 3.1-3.7, 5.1-5.8, 7.1, 7.2, 9.1.
const std::vector<std::string>& labels();

/// Number of classes per crossing number: {1:1, 3:7, 5:8, 7:2, 9:1}.
const std::vector<std::pair<int, std::size_t>>& level_sizes();

/// Published precedence table between levels 3 and 5; row and column are 1-based (3.row, 5.col).
bool table_precedes(int row, int col);

struct StatedNonPrecedence {
  std::string src;
  std::string dst;
  int part = 0;  // necessary condition cited as failing
};

const std::vector<StatedNonPrecedence>& stated_non_precedences();

/// Labels fixed by invariants alone (uncrossed subgraph and crossing graph shape).
const std::vector<std::string>& anchored_labels();

/// Class index for each anchored label, found from invariants (existing labels are ignored).
/// Throws AnchorConflict when an anchor matches zero or several classes.
std::vector<std::pair<std::string, std::size_t>> anchor_classes(const Atlas& atlas);

struct LabelingReport {
  /// Published relations the chosen labeling contradicts, e.g. "3.2 -> 5.3: listed, none exists".
  std::vector<std::string> disagreements;
  std::size_t optimal_labelings = 0;
};

/// Precedence oracle between atlas classes (by index).
using Relation = std::function<bool(std::size_t, std::size_t)>;

/// Relation computed on demand from the class representatives, memoized.
Relation representative_relation(const Atlas& atlas);

/// Labels a complete K33 atlas. Anchored labels are pinned by invariants; the remaining labels
/// of levels 3, 5 and 7 are chosen to contradict as few published relations as possible (ties go
/// to signature order). Labels on which optimal labelings disagree are marked provisional.
/// Throws AnchorConflict when level sizes or anchors do not match exactly one class each.
LabelingReport assign_catalog_labels(Atlas& atlas);
LabelingReport assign_catalog_labels(Atlas& atlas, const Relation& precedes);

/// Minimum number of table cells (levels 3 and 5) that disagree with the relation over every
/// placement of the non-anchored level-3 and level-5 labels, with anchors held fixed.
struct TableMatch {
  std::size_t min_mismatches = 0;
  /// For the optimal placement closest to the atlas's existing labels.
  std::vector<std::string> mismatched_cells;
};
/// Throws AnchorConflict like anchor_classes.
TableMatch match_table(const Atlas& atlas, const Relation& precedes);

}  // namespace geohom::catalog
