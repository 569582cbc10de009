#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "map_search.hpp"

namespace geohom::detail {

namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Splits cells by (own cell, multiset of (neighbor cell, edge color)) until stable. Sub-cells are
// ordered by their key, which depends only on the structure, never on vertex numbers.
Partition refine(const ColoredGraph& g, Partition p) {
  std::vector<int> cell_of(static_cast<std::size_t>(g.n), 0);
  for (;;) {
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (int v : p[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    Partition next;
    next.reserve(static_cast<std::size_t>(g.n));
    for (const Cell& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::pair<int, int>>, Cell> groups;
      for (int v : cell) {
        std::vector<std::pair<int, int>> key;
        for (int w = 0; w < g.n; ++w) {
          if (w != v && g.at(v, w) != 0) key.emplace_back(cell_of[static_cast<std::size_t>(w)], g.at(v, w));
        }
        std::sort(key.begin(), key.end());
        groups[key].push_back(v);
      }
      for (auto& [key, members] : groups) next.push_back(std::move(members));
    }
    if (next.size() == p.size()) return next;
    p = std::move(next);
  }
}

bool are_twins(const ColoredGraph& g, int u, int v) {
  for (int w = 0; w < g.n; ++w) {
    if (w != u && w != v && g.at(u, w) != g.at(v, w)) return false;
  }
  return true;
}

std::string leaf_string(const ColoredGraph& g, const Partition& p) {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(g.n));
  for (const Cell& c : p) order.push_back(c.front());
  std::string out;
  out.reserve(static_cast<std::size_t>(g.n * (g.n - 1) / 2));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      out.push_back(static_cast<char>('0' + g.at(order[i], order[j])));
    }
  }
  return out;
}

void search(const ColoredGraph& g, Partition p, std::string& best, bool& have_best) {
  p = refine(g, std::move(p));
  auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
  if (target == p.end()) {
    std::string leaf = leaf_string(g, p);
    if (!have_best || leaf < best) {
      best = std::move(leaf);
      have_best = true;
    }
    return;
  }
  const std::size_t t = static_cast<std::size_t>(target - p.begin());
  const Cell cell = p[t];
  std::vector<int> tried;
  for (int v : cell) {
    // Swapping two twins in the same cell is an automorphism fixing the partition, so their
    // subtrees produce identical leaves.
    if (std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(g, u, v); })) continue;
    tried.push_back(v);
    Partition child;
    child.reserve(p.size() + 1);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c != t) {
        child.push_back(p[c]);
        continue;
      }
      child.push_back({v});
      Cell rest;
      for (int w : cell) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
    }
    search(g, std::move(child), best, have_best);
  }
}

}  // namespace

std::string canonical_form(const ColoredGraph& g) {
  std::string prefix = "n" + std::to_string(g.n) + ":";
  if (g.n == 0) return prefix;
  Partition start(1);
  for (int v = 0; v < g.n; ++v) start[0].push_back(v);
  std::string best;
  bool have_best = false;
  search(g, std::move(start), best, have_best);
  return prefix + best;
}

}  // namespace geohom::detail
