#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geohom/graph.hpp"
#include "geohom/realization.hpp"

namespace geohom {

/// Vertex map between realizations: images[i] is the image of source vertex i.
struct VertexMap {
  int source_n = 0;
  int target_n = 0;
  VertexImages images;

  bool injective() const;
  static VertexMap identity(int n);

  friend auto operator<=>(const VertexMap&, const VertexMap&) = default;
};

/// f maps every edge onto an edge and every crossing pair onto a crossing pair.
/// Non-adjacent or non-crossing pairs may map anywhere.
bool is_geo_homomorphism(const GeometricRealization& src, const GeometricRealization& dst, const VertexMap& f);

/// All geometric homomorphisms src -> dst (vertex-injective ones when injective is set), in
/// lexicographic order of their image lists. Backtracking with adjacency and crossing pruning.
std::vector<VertexMap> find_geo_homomorphisms(const GeometricRealization& src, const GeometricRealization& dst,
                                              bool injective);

/// True iff at least one vertex-injective geometric homomorphism exists; stops at the first.
bool precedes(const GeometricRealization& src, const GeometricRealization& dst);

/// A graph isomorphism under which crossing pairs correspond bijectively, or nullopt.
std::optional<VertexMap> geo_isomorphic(const GeometricRealization& r, const GeometricRealization& s);

/// The three necessary conditions for a vertex-injective geometric homomorphism src -> dst.
struct PropReport {
  bool cond1_uncrossed_embeds = false;  // uncrossed(dst) is a subgraph of uncrossed(src)
  bool cond2_ex_hom_exists = false;     // EX(src) maps injectively into EX(dst)
  bool cond3_lex_hom_exists = false;    // solid-preserving LEX map that is a line-graph automorphism

  bool all() const { return cond1_uncrossed_embeds && cond2_ex_hom_exists && cond3_lex_hom_exists; }
  friend bool operator==(const PropReport&, const PropReport&) = default;
};

/// Map-free evaluation of the three conditions. Throws AbstractMismatch when the underlying
/// graphs are not isomorphic.
PropReport prop_conditions(const GeometricRealization& src, const GeometricRealization& dst);

/// The edge map induced by a vertex map: position i in src edges -> position in dst edges,
/// or -1 where an edge does not land on an edge.
std::vector<int> induced_edge_map(const GeometricRealization& src, const GeometricRealization& dst,
                                  const VertexMap& f);

/// The same three conditions checked for one specific vertex map f.
PropReport prop_conditions_for_map(const GeometricRealization& src, const GeometricRealization& dst,
                                   const VertexMap& f);

/// Outcome of a precedence query between two realizations.
struct Certificate {
  std::string src;
  std::string dst;
  bool hom = false;
  std::vector<VertexMap> witnesses;
  std::vector<int> failed_conditions;  // subset of {1, 2, 3}
  /// True when no condition fails and non-existence rests on the exhaustive search alone.
  bool exhaustive = false;
  /// Number of abstract isomorphisms refuted by the exhaustive search.
  std::size_t candidates_refuted = 0;
};

/// Witnesses when a homomorphism exists, otherwise the failing conditions.
Certificate hom_report(const GeometricRealization& src, const GeometricRealization& dst,
                       const std::string& src_name = "", const std::string& dst_name = "");

/// Non-precedence certificate. Throws NotApplicable if an injective homomorphism exists.
Certificate explain_non_precedence(const GeometricRealization& src, const GeometricRealization& dst,
                                   const std::string& src_name = "", const std::string& dst_name = "");

std::string certificate_json(const Certificate& c);

}  // namespace geohom
