#pragma once

#include <cstddef>
#include <vector>

#include "geohom/geometry.hpp"
#include "geohom/morphisms.hpp"
#include "geohom/realization.hpp"

// Reference implementations that share no search code with the main path. They are slow and
// used only to cross-check it.
namespace geohom::oracle {

/// Tests proper crossing by solving for the intersection point of the supporting lines in exact
/// rational arithmetic and checking that it lies strictly inside both segments.
bool segments_cross_rational(const Segment& s, const Segment& t);

struct BruteForceResult {
  std::size_t candidates = 0;  // abstract graph isomorphisms src -> dst examined
  std::vector<VertexMap> homomorphisms;
};

/// Walks every permutation of the target vertices, keeps those that are abstract graph
/// isomorphisms, and tests crossing preservation geometrically on the target points.
/// Requires both realizations to have the same number of vertices.
BruteForceResult injective_homomorphisms(const GeometricRealization& src, const GeometricRealization& dst);

}  // namespace geohom::oracle
