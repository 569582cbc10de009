#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "geohom/graph.hpp"

namespace geohom::detail {

// Dense edge-colored graph. Color 0 means "no edge".
struct ColoredGraph {
  int n = 0;
  std::vector<std::uint8_t> color;

  explicit ColoredGraph(int n_) : n(n_), color(static_cast<std::size_t>(n_ * n_), 0) {}

  std::uint8_t at(int i, int j) const { return color[static_cast<std::size_t>(i * n + j)]; }
  void set(int i, int j, std::uint8_t c) {
    color[static_cast<std::size_t>(i * n + j)] = c;
    color[static_cast<std::size_t>(j * n + i)] = c;
  }
  int degree(int v, std::uint8_t c) const;
};

ColoredGraph to_colored(const AbstractGraph& g);
// solid = 1, dashed = 2
ColoredGraph to_colored(const TwoColoredGraph& g);

struct MapSearchOptions {
  bool injective = true;
  // Bit c set: an edge of color c in the target must come from an edge of color c in the
  // source (color classes are reflected, not merely preserved). Only meaningful for injective
  // searches between graphs of equal order.
  std::uint32_t exact_colors = 0;
};

// Enumerates maps f: src -> dst such that every colored edge {u,v} of src lands on an edge
// {f(u), f(v)} of the same color, subject to the options. The visitor returns false to stop.
// Returns true if the search ran to completion.
bool search_maps(const ColoredGraph& src, const ColoredGraph& dst, const MapSearchOptions& opts,
                 const std::function<bool(std::span<const int>)>& visit);

bool map_exists(const ColoredGraph& src, const ColoredGraph& dst, const MapSearchOptions& opts);

// Minimal adjacency string over all leaves of an individualization-refinement tree.
std::string canonical_form(const ColoredGraph& g);

}  // namespace geohom::detail
