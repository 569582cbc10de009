#pragma once

#include <compare>
#include <cstdint>
#include <span>

namespace geohom {

/// Coordinates are bounded so that every orientation determinant fits in 64 bits.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

struct Segment {
  Point a;
  Point b;
};

inline bool in_coordinate_range(Point p) {
  return p.x >= -kCoordinateLimit && p.x <= kCoordinateLimit && p.y >= -kCoordinateLimit &&
         p.y <= kCoordinateLimit;
}

/// Sign of the cross product (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(Point p, Point q, Point r);

/// True iff all points are pairwise distinct and no three are collinear.
bool in_general_position(std::span<const Point> pts);

/// True iff the segments have four distinct endpoints and their relative interiors meet.
/// Assumes the endpoints are in general position, so touching cannot occur.
bool proper_cross(const Segment& s, const Segment& t);

}  // namespace geohom
