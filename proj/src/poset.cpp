#include "geohom/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "geohom/parallel.hpp"

namespace geohom {

namespace {

std::string pair_name(const HomPoset& p, std::size_t i, std::size_t j) {
  return "(" + p.names[i] + ", " + p.names[j] + ")";
}

}  // namespace

std::size_t HomPoset::index_of(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UnknownLabel("no class named '" + name + "' in the poset");
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<IndexPair> transitive_reduction(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

HomPoset make_poset(std::vector<std::string> names, std::vector<int> rank, std::vector<std::vector<bool>> leq) {
  HomPoset p;
  p.names = std::move(names);
  p.rank = std::move(rank);
  p.leq = std::move(leq);
  for (int r : p.rank) p.cr.push_back(2 * r);
  p.thickness.assign(p.names.size(), 1);
  p.hasse_edges = transitive_reduction(p.leq);
  return p;
}

HomPoset build_poset(const Atlas& atlas) {
  const std::size_t n = atlas.classes.size();
  HomPoset p;
  for (std::size_t i = 0; i < n; ++i) {
    const RealizationClass& c = atlas.classes[i];
    p.names.push_back(c.label.value_or("c" + std::to_string(i)));
    p.cr.push_back(c.signature.cr);
    p.rank.push_back(c.signature.cr / 2);
    p.thickness.push_back(c.signature.thickness);
  }

  std::vector<char> flat(n * n, 0);
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t i = k / n;
    const std::size_t j = k % n;
    flat[k] = i == j || precedes(atlas.classes[i].representative, atlas.classes[j].representative);
  });
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < n * n; ++k) p.leq[k / n][k % n] = flat[k] != 0;

  p.hasse_edges = transitive_reduction(p.leq);
  p.hasse_witnesses.resize(p.hasse_edges.size());
  parallel_for(p.hasse_edges.size(), [&](std::size_t e) {
    const auto [i, j] = p.hasse_edges[e];
    p.hasse_witnesses[e] =
        find_geo_homomorphisms(atlas.classes[i].representative, atlas.classes[j].representative, true).front();
  });
  return p;
}

CheckOutcome check_partial_order(const HomPoset& p) {
  CheckOutcome out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.leq[i][i]) out.violations.push_back("not reflexive at " + p.names[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.leq[i][j] && p.leq[j][i]) out.violations.push_back("not antisymmetric at " + pair_name(p, i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.leq[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq[j][k] && !p.leq[i][k]) {
          out.violations.push_back("not transitive: " + p.names[i] + " <= " + p.names[j] + " <= " + p.names[k]);
        }
      }
    }
  }
  return out;
}

CheckOutcome check_reduction(const HomPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& [i, j] : p.hasse_edges) reach[i][j] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  CheckOutcome out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (reach[i][j] && !p.leq[i][j]) {
        out.violations.push_back("Hasse closure has " + pair_name(p, i, j) + " but leq does not");
      } else if (!reach[i][j] && p.leq[i][j]) {
        out.violations.push_back("leq has " + pair_name(p, i, j) + " but the Hasse closure does not");
      }
    }
  }
  return out;
}

CheckOutcome check_monotone(const HomPoset& p) {
  CheckOutcome out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.leq[i][j] && p.cr[i] > p.cr[j]) {
        out.violations.push_back(pair_name(p, i, j) + " is related but cr drops from " + std::to_string(p.cr[i]) +
                                 " to " + std::to_string(p.cr[j]));
      }
    }
  }
  return out;
}

CheckOutcome check_graded(const HomPoset& p) {
  CheckOutcome out;
  for (const auto& [i, j] : p.hasse_edges) {
    if (p.rank[j] != p.rank[i] + 1) {
      out.violations.push_back("Hasse edge " + pair_name(p, i, j) + " goes from rank " + std::to_string(p.rank[i]) +
                               " to rank " + std::to_string(p.rank[j]));
    }
  }
  return out;
}

std::vector<std::size_t> minimal_upper_bounds(const HomPoset& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> upper;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.leq[i][k] && p.leq[j][k]) upper.push_back(k);
  }
  std::vector<std::size_t> out;
  for (std::size_t k : upper) {
    const bool minimal =
        std::none_of(upper.begin(), upper.end(), [&](std::size_t m) { return p.strictly_below(m, k); });
    if (minimal) out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> maximal_lower_bounds(const HomPoset& p, std::size_t i, std::size_t j) {
  std::vector<std::size_t> lower;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.leq[k][i] && p.leq[k][j]) lower.push_back(k);
  }
  std::vector<std::size_t> out;
  for (std::size_t k : lower) {
    const bool maximal =
        std::none_of(lower.begin(), lower.end(), [&](std::size_t m) { return p.strictly_below(k, m); });
    if (maximal) out.push_back(k);
  }
  return out;
}

LatticeReport check_lattice(const HomPoset& p) {
  LatticeReport out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (minimal_upper_bounds(p, i, j).size() != 1 || maximal_lower_bounds(p, i, j).size() != 1) {
        out.counterexamples.emplace_back(i, j);
      }
    }
  }
  out.is_lattice = out.counterexamples.empty();
  if (!out.is_lattice) out.witness = out.counterexamples.front();
  return out;
}

ExtremaReport extrema_and_thickness_check(const HomPoset& p) {
  ExtremaReport out;
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool top = true;
    bool bottom = true;
    for (std::size_t m = 0; m < n; ++m) {
      top = top && p.leq[m][k];
      bottom = bottom && p.leq[k][m];
    }
    if (top) out.maximum = k;
    if (bottom) out.minimum = k;
  }
  if (!out.maximum) {
    out.failures.push_back("no unique maximum");
  } else if (p.cr[*out.maximum] != 9) {
    out.failures.push_back("maximum " + p.names[*out.maximum] + " has cr " + std::to_string(p.cr[*out.maximum]));
  }

  const auto find = [&p](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(p.names.begin(), p.names.end(), name);
    if (it == p.names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - p.names.begin());
  };
  const auto s71 = find("7.1");
  const auto s72 = find("7.2");
  if (!s71 || !s72) {
    out.failures.push_back("classes 7.1 and 7.2 must be labelled");
    return out;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (p.thickness[k] <= 2 && !p.leq[k][*s71]) out.thin_not_below_71.push_back(k);
  }
  for (std::size_t k : out.thin_not_below_71) {
    out.failures.push_back(p.names[k] + " has thickness " + std::to_string(p.thickness[k]) + " but is not below 7.1");
  }
  const auto require_not_below = [&](const char* src, std::size_t dst) {
    const auto s = find(src);
    if (!s) {
      out.failures.push_back(std::string("class ") + src + " must be labelled");
    } else if (p.leq[*s][dst]) {
      out.failures.push_back(std::string(src) + " is below " + p.names[dst]);
    }
  };
  for (const char* s : {"5.6", "5.7", "5.8"}) require_not_below(s, *s71);
  for (const char* s : {"5.1", "5.2", "5.3"}) require_not_below(s, *s72);
  return out;
}

Json to_json(const HomPoset& p) {
  Json j;
  j["classes"] = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json c;
    c["name"] = p.names[i];
    c["cr"] = p.cr[i];
    c["rank"] = p.rank[i];
    c["thickness"] = p.thickness[i];
    j["classes"].push_back(c);
  }
  Json leq = Json::array();
  for (const auto& row : p.leq) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    leq.push_back(r);
  }
  j["leq"] = leq;
  j["hasse_edges"] = Json::array();
  for (std::size_t e = 0; e < p.hasse_edges.size(); ++e) {
    const auto [lo, hi] = p.hasse_edges[e];
    Json edge;
    edge["from"] = p.names[lo];
    edge["to"] = p.names[hi];
    if (e < p.hasse_witnesses.size()) edge["witness"] = p.hasse_witnesses[e].images;
    j["hasse_edges"].push_back(edge);
  }
  return j;
}

std::string poset_dot(const HomPoset& p) {
  std::ostringstream out;
  out << "digraph hom_poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < p.size(); ++i) layers[p.rank[i]].push_back(i);
  for (const auto& [rank, members] : layers) {
    out << "  { rank=same;";
    for (std::size_t i : members) {
      out << " \"" << p.names[i] << "\"";
      if (p.thickness[i] >= 3) out << " [color=blue, penwidth=2]";
      out << ";";
    }
    out << " }\n";
  }
  for (const auto& [lo, hi] : p.hasse_edges) {
    out << "  \"" << p.names[lo] << "\" -> \"" << p.names[hi] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace geohom
