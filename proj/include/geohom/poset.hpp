#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geohom/atlas.hpp"
#include "geohom/json_io.hpp"
#include "geohom/morphisms.hpp"

namespace geohom {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Homomorphism poset on the classes of an atlas: leq[i][j] iff class i maps vertex-injectively
/// into class j.
struct HomPoset {
  std::vector<std::string> names;  // catalog label, or "c<index>" for unlabelled classes
  std::vector<int> cr;
  std::vector<int> rank;  // floor(cr / 2)
  std::vector<int> thickness;
  std::vector<std::vector<bool>> leq;
  /// Covering pairs (i, j), i below j, in lexicographic order.
  std::vector<IndexPair> hasse_edges;
  /// One injective witness per Hasse edge, parallel to hasse_edges. Empty for synthetic posets.
  std::vector<VertexMap> hasse_witnesses;

  std::size_t size() const { return names.size(); }
  /// Throws UnknownLabel.
  std::size_t index_of(const std::string& name) const;
  bool strictly_below(std::size_t i, std::size_t j) const { return i != j && leq[i][j]; }
};

/// Runs the pairwise precedence search (in parallel, see worker_count) and assembles the poset.
HomPoset build_poset(const Atlas& atlas);

/// Poset from an explicit relation; cr is set to 2 * rank and thickness to 1.
HomPoset make_poset(std::vector<std::string> names, std::vector<int> rank, std::vector<std::vector<bool>> leq);

/// Covering pairs of the strict part of leq: i < j with nothing strictly between.
std::vector<IndexPair> transitive_reduction(const std::vector<std::vector<bool>>& leq);

struct CheckOutcome {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Reflexivity, antisymmetry and transitivity of leq.
CheckOutcome check_partial_order(const HomPoset& p);
/// The reachability closure of hasse_edges equals the strict part of leq.
CheckOutcome check_reduction(const HomPoset& p);
/// i below j implies cr(i) <= cr(j).
CheckOutcome check_monotone(const HomPoset& p);
/// Every Hasse edge raises rank by exactly one.
CheckOutcome check_graded(const HomPoset& p);

std::vector<std::size_t> minimal_upper_bounds(const HomPoset& p, std::size_t i, std::size_t j);
std::vector<std::size_t> maximal_lower_bounds(const HomPoset& p, std::size_t i, std::size_t j);

struct LatticeReport {
  bool is_lattice = true;
  /// First pair (in index order) lacking a unique minimal upper or maximal lower bound.
  std::optional<IndexPair> witness;
  std::vector<IndexPair> counterexamples;
};

LatticeReport check_lattice(const HomPoset& p);

struct ExtremaReport {
  std::optional<std::size_t> maximum;
  std::optional<std::size_t> minimum;
  /// Classes of thickness at most 2 that are not below 7.1.
  std::vector<std::size_t> thin_not_below_71;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Unique maximum is the cr = 9 class; thickness <= 2 classes lie below 7.1; 5.6, 5.7, 5.8 are not
/// below 7.1; 5.1, 5.2, 5.3 are not below 7.2.
ExtremaReport extrema_and_thickness_check(const HomPoset& p);

Json to_json(const HomPoset& p);
/// Hasse diagram with one layer per rank; thickness-3 classes drawn blue.
std::string poset_dot(const HomPoset& p);

}  // namespace geohom
