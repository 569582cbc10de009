#include <doctest.h>

#include <random>
#include <vector>

#include "geohom/geometry.hpp"
#include "geohom/oracle.hpp"
#include "geohom/sampling.hpp"

using namespace geohom;

TEST_CASE("orient signs") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient is exact at the coordinate limit") {
  const std::int64_t L = kCoordinateLimit;
  CHECK(orient({-L, -L}, {L, L}, {L - 1, L}) == 1);
  CHECK(orient({-L, -L}, {L, L}, {L, L - 1}) == -1);
  CHECK(orient({-L, -L}, {0, 0}, {L, L}) == 0);
}

TEST_CASE("general position") {
  const std::vector<Point> ok = {{0, 0}, {1, 0}, {0, 1}, {2, 3}};
  const std::vector<Point> collinear = {{0, 0}, {1, 1}, {2, 2}};
  const std::vector<Point> duplicate = {{0, 0}, {0, 0}, {1, 2}};
  CHECK(in_general_position(ok));
  CHECK_FALSE(in_general_position(collinear));
  CHECK_FALSE(in_general_position(duplicate));
  CHECK(in_general_position(std::vector<Point>{}));
}

TEST_CASE("general position agrees with a triple-by-triple check") {
  const std::vector<Point> pts = {{0, 0}, {1, 0}, {0, 1}, {2, 3}};
  bool all_nonzero = true;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        const std::int64_t det = (pts[b].x - pts[a].x) * (pts[c].y - pts[a].y) -
                                 (pts[b].y - pts[a].y) * (pts[c].x - pts[a].x);
        all_nonzero = all_nonzero && det != 0;
      }
  CHECK(all_nonzero == in_general_position(pts));
}

TEST_CASE("proper crossing") {
  CHECK(proper_cross({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  CHECK_FALSE(proper_cross({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
  CHECK_FALSE(proper_cross({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}));
}

TEST_CASE("rational oracle on the same examples") {
  CHECK(oracle::segments_cross_rational({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
  CHECK_FALSE(oracle::segments_cross_rational({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
  CHECK_FALSE(oracle::segments_cross_rational({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}));
}

TEST_CASE("property: orient antisymmetry and crossing symmetry") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const std::int64_t bound = i % 2 ? 6 : kCoordinateLimit;
    const Point p = random_point(rng, bound), q = random_point(rng, bound), r = random_point(rng, bound),
                s = random_point(rng, bound);
    CHECK(orient(p, q, r) == -orient(p, r, q));
    CHECK(orient(p, q, r) == -orient(q, p, r));
    CHECK(orient(p, q, r) == orient(q, r, p));
    const std::vector<Point> quad = {p, q, r, s};
    if (!in_general_position(quad)) continue;
    CHECK(proper_cross({p, q}, {r, s}) == proper_cross({r, s}, {p, q}));
    CHECK(proper_cross({p, q}, {r, s}) == proper_cross({q, p}, {s, r}));
    CHECK(proper_cross({p, q}, {r, s}) == oracle::segments_cross_rational({p, q}, {r, s}));
  }
}

TEST_CASE("sampling stream is reproducible and in range") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const Point p = random_point(a, 3);
    CHECK(p == random_point(b, 3));
    CHECK(p.x >= 0);
    CHECK(p.x <= 3);
    CHECK(p.y >= 0);
    CHECK(p.y <= 3);
  }
  std::mt19937_64 c(1);
  CHECK(uniform_below(c, 1) == 0);
}
