#include "geohom/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "geohom/errors.hpp"

namespace geohom::oracle {

namespace {

__extension__ using Wide = __int128;

// Compares a/b with c/d for b, d > 0.
int compare_fractions(Wide a, Wide b, Wide c, Wide d) {
  const Wide lhs = a * d;
  const Wide rhs = c * b;
  return (lhs > rhs) - (lhs < rhs);
}

// Point given as (x_num / den, y_num / den), den > 0, strictly inside segment pq.
bool strictly_inside(Wide x_num, Wide y_num, Wide den, const Segment& s) {
  const Point p = s.a;
  const Point q = s.b;
  const bool at_endpoint = (x_num == Wide{p.x} * den && y_num == Wide{p.y} * den) ||
                           (x_num == Wide{q.x} * den && y_num == Wide{q.y} * den);
  if (at_endpoint) return false;
  auto between = [&](Wide num, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) std::swap(lo, hi);
    return compare_fractions(num, den, lo, 1) >= 0 && compare_fractions(num, den, hi, 1) <= 0;
  };
  return between(x_num, p.x, q.x) && between(y_num, p.y, q.y);
}

}  // namespace

bool segments_cross_rational(const Segment& s, const Segment& t) {
  // Lines a1 x + b1 y = c1 and a2 x + b2 y = c2, solved by Cramer's rule.
  const Wide a1 = Wide{s.b.y} - s.a.y;
  const Wide b1 = Wide{s.a.x} - s.b.x;
  const Wide c1 = a1 * s.a.x + b1 * s.a.y;
  const Wide a2 = Wide{t.b.y} - t.a.y;
  const Wide b2 = Wide{t.a.x} - t.b.x;
  const Wide c2 = a2 * t.a.x + b2 * t.a.y;
  Wide den = a1 * b2 - a2 * b1;
  if (den == 0) return false;  // parallel or collinear supporting lines
  Wide x_num = c1 * b2 - c2 * b1;
  Wide y_num = a1 * c2 - a2 * c1;
  if (den < 0) {
    den = -den;
    x_num = -x_num;
    y_num = -y_num;
  }
  return strictly_inside(x_num, y_num, den, s) && strictly_inside(x_num, y_num, den, t);
}

BruteForceResult injective_homomorphisms(const GeometricRealization& src, const GeometricRealization& dst) {
  const int n = src.graph().n();
  if (dst.graph().n() != n) throw AbstractMismatch("brute force needs equal vertex counts");
  BruteForceResult out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& src_edges = src.graph().edges();
  do {
    bool graph_iso = src.graph().edge_count() == dst.graph().edge_count();
    for (const Edge& e : src_edges) {
      if (!graph_iso) break;
      graph_iso = dst.graph().has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    if (!graph_iso) continue;
    ++out.candidates;
    auto image_segment = [&](const Edge& e) {
      return Segment{dst.points()[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.u)])],
                     dst.points()[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.v)])]};
    };
    auto source_segment = [&](const Edge& e) {
      return Segment{src.points()[static_cast<std::size_t>(e.u)], src.points()[static_cast<std::size_t>(e.v)]};
    };
    bool ok = true;
    for (std::size_t i = 0; i < src_edges.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < src_edges.size() && ok; ++j) {
        if (src_edges[i].shares_vertex(src_edges[j])) continue;
        if (segments_cross_rational(source_segment(src_edges[i]), source_segment(src_edges[j])) &&
            !segments_cross_rational(image_segment(src_edges[i]), image_segment(src_edges[j]))) {
          ok = false;
        }
      }
    }
    if (ok) out.homomorphisms.push_back({n, n, perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace geohom::oracle
