#include "map_search.hpp"

#include <algorithm>
#include <array>

namespace geohom::detail {

int ColoredGraph::degree(int v, std::uint8_t c) const {
  int d = 0;
  for (int w = 0; w < n; ++w) d += (w != v && at(v, w) == c) ? 1 : 0;
  return d;
}

ColoredGraph to_colored(const AbstractGraph& g) {
  ColoredGraph out(g.n());
  for (const Edge& e : g.edges()) out.set(e.u, e.v, 1);
  return out;
}

ColoredGraph to_colored(const TwoColoredGraph& g) {
  ColoredGraph out(g.n());
  for (const Edge& e : g.solid().edges()) out.set(e.u, e.v, 1);
  for (const Edge& e : g.dashed().edges()) out.set(e.u, e.v, 2);
  return out;
}

namespace {

constexpr int kMaxColors = 4;

struct Searcher {
  const ColoredGraph& src;
  const ColoredGraph& dst;
  const MapSearchOptions& opts;
  const std::function<bool(std::span<const int>)>& visit;

  std::vector<int> order;  // src vertices in assignment order
  std::vector<int> image;  // image[v] for src vertex v, -1 if unassigned
  std::vector<bool> used;  // dst vertex already taken (injective searches)
  std::vector<std::array<int, kMaxColors>> src_deg;
  std::vector<std::array<int, kMaxColors>> dst_deg;
  bool bijective = false;

  bool degree_compatible(int u, int x) const {
    for (int c = 1; c < kMaxColors; ++c) {
      const auto cu = static_cast<std::size_t>(c);
      if (!opts.injective) continue;
      if (dst_deg[static_cast<std::size_t>(x)][cu] < src_deg[static_cast<std::size_t>(u)][cu]) {
        return false;
      }
      if (bijective && ((opts.exact_colors >> c) & 1U) != 0 &&
          dst_deg[static_cast<std::size_t>(x)][cu] != src_deg[static_cast<std::size_t>(u)][cu]) {
        return false;
      }
    }
    return true;
  }

  bool consistent(int u, int x) const {
    for (int w = 0; w < src.n; ++w) {
      const int y = image[static_cast<std::size_t>(w)];
      if (y < 0 || w == u) continue;
      const std::uint8_t cs = src.at(u, w);
      const std::uint8_t cd = (x == y) ? std::uint8_t{0} : dst.at(x, y);
      if (cs != 0 && cd != cs) return false;
      if (cd != 0 && cs != cd && ((opts.exact_colors >> cd) & 1U) != 0) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (depth == order.size()) return visit(image);
    const int u = order[depth];
    for (int x = 0; x < dst.n; ++x) {
      if (opts.injective && used[static_cast<std::size_t>(x)]) continue;
      if (!degree_compatible(u, x) || !consistent(u, x)) continue;
      image[static_cast<std::size_t>(u)] = x;
      if (opts.injective) used[static_cast<std::size_t>(x)] = true;
      const bool keep_going = run(depth + 1);
      if (opts.injective) used[static_cast<std::size_t>(x)] = false;
      image[static_cast<std::size_t>(u)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }
};

std::vector<std::array<int, kMaxColors>> colored_degrees(const ColoredGraph& g) {
  std::vector<std::array<int, kMaxColors>> out(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    auto& row = out[static_cast<std::size_t>(v)];
    row.fill(0);
    for (int w = 0; w < g.n; ++w) {
      if (w != v) ++row[g.at(v, w) % kMaxColors];
    }
  }
  return out;
}

// Greedy order: start from the highest-degree vertex, then repeatedly take the vertex with
// the most already-ordered neighbors, so constraints bite early.
std::vector<int> assignment_order(const ColoredGraph& g) {
  std::vector<int> order;
  std::vector<bool> taken(static_cast<std::size_t>(g.n), false);
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    for (int w = 0; w < g.n; ++w) deg[static_cast<std::size_t>(v)] += (w != v && g.at(v, w) != 0);
  }
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < g.n; ++v) {
      if (taken[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int w : order) links += g.at(v, w) != 0;
      if (links > best_links ||
          (links == best_links && deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(best)])) {
        best = v;
        best_links = links;
      }
    }
    taken[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace

bool search_maps(const ColoredGraph& src, const ColoredGraph& dst, const MapSearchOptions& opts,
                 const std::function<bool(std::span<const int>)>& visit) {
  if (opts.injective && src.n > dst.n) return true;
  if (src.n > 0 && dst.n == 0) return true;
  Searcher s{src, dst, opts, visit, {}, {}, {}, {}, {}, false};
  s.order = assignment_order(src);
  s.image.assign(static_cast<std::size_t>(src.n), -1);
  s.used.assign(static_cast<std::size_t>(dst.n), false);
  s.src_deg = colored_degrees(src);
  s.dst_deg = colored_degrees(dst);
  s.bijective = opts.injective && src.n == dst.n;
  return s.run(0);
}

bool map_exists(const ColoredGraph& src, const ColoredGraph& dst, const MapSearchOptions& opts) {
  bool found = false;
  search_maps(src, dst, opts, [&](std::span<const int>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace geohom::detail
