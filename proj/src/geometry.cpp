#include "geohom/geometry.hpp"

namespace geohom {

int orient(Point p, Point q, Point r) {
  const std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (det > 0) - (det < 0);
}

bool in_general_position(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  return true;
}

bool proper_cross(const Segment& s, const Segment& t) {
  if (s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b) return false;
  return orient(s.a, s.b, t.a) * orient(s.a, s.b, t.b) < 0 &&
         orient(t.a, t.b, s.a) * orient(t.a, t.b, s.b) < 0;
}

}  // namespace geohom
