#pragma once

#include <compare>
#include <string>
#include <vector>

#include "geohom/graph.hpp"
#include "geohom/realization.hpp"

namespace geohom {

/// Isomorphism-invariant summary of a realization. Ordering is lexicographic in field order,
/// so sorting by signature sorts by crossing number first.
struct InvariantSignature {
  int cr = 0;
  std::vector<int> per_edge_cr;  // ascending
  std::string uncrossed_class;
  std::string ex_class;
  std::string lex_class;
  int thickness = 1;

  friend auto operator<=>(const InvariantSignature&, const InvariantSignature&) = default;
};

int cr_total(const GeometricRealization& r);

/// Number of edges crossing e. Throws UnknownEdge if e is not an edge of the graph.
int cr_edge(const GeometricRealization& r, Edge e);

/// Same vertices, keeping only the edges that nothing crosses.
AbstractGraph uncrossed_subgraph(const GeometricRealization& r);

/// Edge crossing graph: vertex i is graph().edges()[i]; adjacent iff the two edges cross.
AbstractGraph ex_graph(const GeometricRealization& r);

/// Line/crossing graph: solid = crossings (the edge crossing graph), dashed = shared endpoints.
TwoColoredGraph lex_graph(const GeometricRealization& r);

/// Minimum number of classes in a partition of the edges into mutually non-crossing sets,
/// i.e. the chromatic number of the edge crossing graph. At least 1.
int edge_thickness(const GeometricRealization& r);

InvariantSignature signature(const GeometricRealization& r);

std::string signature_json(const InvariantSignature& s);

/// Graphviz export of the edge crossing graph. Nodes are named by their edge "u-v".
std::string ex_dot(const GeometricRealization& r, const std::string& name = "EX");
/// Graphviz export of the line/crossing graph; crossings solid, adjacencies dashed.
std::string lex_dot(const GeometricRealization& r, const std::string& name = "LEX");

}  // namespace geohom
