#pragma once

#include <algorithm>
#include <vector>

#include "geohom/atlas.hpp"
#include "geohom/catalog.hpp"
#include "geohom/poset.hpp"

namespace fixtures {

// Enumerated once per test binary with the default configuration.
inline const geohom::Atlas& k33() {
  static const geohom::Atlas atlas = [] {
    geohom::Atlas a = geohom::enumerate_classes(geohom::Target::k33, {});
    geohom::catalog::assign_catalog_labels(a);
    return a;
  }();
  return atlas;
}

inline const geohom::Atlas& k6() {
  static const geohom::Atlas atlas = geohom::enumerate_classes(geohom::Target::k6, {});
  return atlas;
}

inline const geohom::HomPoset& poset() {
  static const geohom::HomPoset p = geohom::build_poset(k33());
  return p;
}

inline const geohom::GeometricRealization& rep(const char* label) { return k33().at(label).representative; }

// Convex hexagon; vertex i sits at hull position i.
inline std::vector<geohom::Point> hexagon() { return {{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}}; }

}  // namespace fixtures
