#include "geohom/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "geohom/errors.hpp"
#include "geohom/invariants.hpp"
#include "geohom/json_io.hpp"
#include "map_search.hpp"

namespace geohom {

bool VertexMap::injective() const {
  VertexImages sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

VertexMap VertexMap::identity(int n) {
  VertexMap f{n, n, VertexImages(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) f.images[static_cast<std::size_t>(i)] = i;
  return f;
}

namespace {

// n x n table of edge positions, -1 for non-edges.
std::vector<int> edge_table(const AbstractGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> table(n * n, -1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    table[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<int>(i);
    table[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<int>(i);
  }
  return table;
}

class GeoSearch {
 public:
  // exact: non-edges and non-crossings must be preserved too (isomorphism).
  GeoSearch(const GeometricRealization& src, const GeometricRealization& dst, bool injective, bool exact)
      : src_(src), dst_(dst), injective_(injective || exact), exact_(exact),
        n_(src.graph().n()), dst_table_(edge_table(dst.graph())),
        image_(static_cast<std::size_t>(n_), -1), used_(static_cast<std::size_t>(dst.graph().n()), false),
        checks_at_(static_cast<std::size_t>(n_)) {
    // A crossing pair is checked as soon as its last endpoint (in vertex order) is assigned.
    for (const auto& [e, f] : src.crossings().pairs()) {
      const int last = std::max({e.u, e.v, f.u, f.v});
      checks_at_[static_cast<std::size_t>(last)].push_back({e, f});
    }
  }

  void run(const std::function<bool(const VertexImages&)>& visit) {
    if (injective_ && n_ > dst_.graph().n()) return;
    if (exact_ && (n_ != dst_.graph().n() || src_.graph().edge_count() != dst_.graph().edge_count() ||
                   src_.crossings().size() != dst_.crossings().size())) {
      return;
    }
    if (n_ > 0 && dst_.graph().n() == 0) return;
    visit_ = &visit;
    descend(0);
  }

 private:
  int dst_edge(int x, int y) const {
    return dst_table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(dst_.graph().n()) +
                      static_cast<std::size_t>(y)];
  }

  bool adjacency_ok(int u, int x) const {
    for (int w = 0; w < u; ++w) {
      const int y = image_[static_cast<std::size_t>(w)];
      const bool src_adj = src_.graph().has_edge(u, w);
      const bool dst_adj = x != y && dst_.graph().has_edge(x, y);
      if (src_adj && !dst_adj) return false;
      if (exact_ && dst_adj && !src_adj) return false;
    }
    return true;
  }

  bool crossings_ok(int u) const {
    for (const auto& [e, f] : checks_at_[static_cast<std::size_t>(u)]) {
      const int ie = dst_edge(image_[static_cast<std::size_t>(e.u)], image_[static_cast<std::size_t>(e.v)]);
      const int jf = dst_edge(image_[static_cast<std::size_t>(f.u)], image_[static_cast<std::size_t>(f.v)]);
      if (ie < 0 || jf < 0 || !dst_.crosses_at(static_cast<std::size_t>(ie), static_cast<std::size_t>(jf))) {
        return false;
      }
    }
    return true;
  }

  bool descend(int u) {
    if (u == n_) return (*visit_)(image_);
    for (int x = 0; x < dst_.graph().n(); ++x) {
      if (injective_ && used_[static_cast<std::size_t>(x)]) continue;
      if (!adjacency_ok(u, x)) continue;
      image_[static_cast<std::size_t>(u)] = x;
      bool keep_going = true;
      if (crossings_ok(u)) {
        if (injective_) used_[static_cast<std::size_t>(x)] = true;
        keep_going = descend(u + 1);
        if (injective_) used_[static_cast<std::size_t>(x)] = false;
      }
      image_[static_cast<std::size_t>(u)] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  const GeometricRealization& src_;
  const GeometricRealization& dst_;
  bool injective_;
  bool exact_;
  int n_;
  std::vector<int> dst_table_;
  VertexImages image_;
  std::vector<bool> used_;
  std::vector<std::vector<std::pair<Edge, Edge>>> checks_at_;
  const std::function<bool(const VertexImages&)>* visit_ = nullptr;
};

}  // namespace

bool is_geo_homomorphism(const GeometricRealization& src, const GeometricRealization& dst, const VertexMap& f) {
  if (f.source_n != src.graph().n() || f.target_n != dst.graph().n() ||
      static_cast<int>(f.images.size()) != src.graph().n()) {
    return false;
  }
  for (int img : f.images) {
    if (img < 0 || img >= dst.graph().n()) return false;
  }
  auto image_of = [&](const Edge& e) {
    return Edge(f.images[static_cast<std::size_t>(e.u)], f.images[static_cast<std::size_t>(e.v)]);
  };
  for (const Edge& e : src.graph().edges()) {
    const Edge img = image_of(e);
    if (img.u == img.v || !dst.graph().has_edge(img)) return false;
  }
  for (const auto& [e, g] : src.crossings().pairs()) {
    if (!dst.crossings().crosses(image_of(e), image_of(g))) return false;
  }
  return true;
}

std::vector<VertexMap> find_geo_homomorphisms(const GeometricRealization& src, const GeometricRealization& dst,
                                              bool injective) {
  std::vector<VertexMap> out;
  GeoSearch search(src, dst, injective, false);
  search.run([&](const VertexImages& images) {
    out.push_back({src.graph().n(), dst.graph().n(), images});
    return true;
  });
  return out;
}

bool precedes(const GeometricRealization& src, const GeometricRealization& dst) {
  bool found = false;
  GeoSearch search(src, dst, true, false);
  search.run([&](const VertexImages&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<VertexMap> geo_isomorphic(const GeometricRealization& r, const GeometricRealization& s) {
  // Cheap invariants first: order, size, crossing count, per-edge crossing multiset.
  if (r.graph().n() != s.graph().n() || r.graph().edge_count() != s.graph().edge_count() ||
      cr_total(r) != cr_total(s) || r.graph().degree_sequence() != s.graph().degree_sequence()) {
    return std::nullopt;
  }
  auto per_edge = [](const GeometricRealization& x) {
    std::vector<int> v;
    for (const Edge& e : x.graph().edges()) v.push_back(cr_edge(x, e));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (per_edge(r) != per_edge(s)) return std::nullopt;

  std::optional<VertexMap> found;
  GeoSearch search(r, s, true, true);
  search.run([&](const VertexImages& images) {
    found = VertexMap{r.graph().n(), s.graph().n(), images};
    return false;
  });
  return found;
}

PropReport prop_conditions(const GeometricRealization& src, const GeometricRealization& dst) {
  if (!graph_isomorphism(src.graph(), dst.graph())) {
    throw AbstractMismatch("underlying graphs of the two realizations are not isomorphic");
  }
  PropReport report;
  report.cond1_uncrossed_embeds = subgraph_embeds(uncrossed_subgraph(dst), uncrossed_subgraph(src));
  report.cond2_ex_hom_exists = subgraph_embeds(ex_graph(src), ex_graph(dst));
  // Dashed (color 2) reflected exactly, solid (color 1) preserved.
  report.cond3_lex_hom_exists = detail::map_exists(detail::to_colored(lex_graph(src)),
                                                   detail::to_colored(lex_graph(dst)),
                                                   {.injective = true, .exact_colors = 0b100});
  return report;
}

std::vector<int> induced_edge_map(const GeometricRealization& src, const GeometricRealization& dst,
                                  const VertexMap& f) {
  std::vector<int> out;
  for (const Edge& e : src.graph().edges()) {
    const Edge img(f.images[static_cast<std::size_t>(e.u)], f.images[static_cast<std::size_t>(e.v)]);
    const auto idx = img.u == img.v ? std::nullopt : dst.graph().edge_index(img);
    out.push_back(idx ? static_cast<int>(*idx) : -1);
  }
  return out;
}

PropReport prop_conditions_for_map(const GeometricRealization& src, const GeometricRealization& dst,
                                   const VertexMap& f) {
  PropReport report;
  const auto& src_edges = src.graph().edges();
  const auto& dst_edges = dst.graph().edges();
  const std::vector<int> phi = induced_edge_map(src, dst, f);
  const bool total = std::none_of(phi.begin(), phi.end(), [](int i) { return i < 0; });

  // Part 1: the preimage of every uncrossed target edge is an uncrossed source edge.
  if (f.injective() && f.source_n == f.target_n) {
    VertexImages inverse(static_cast<std::size_t>(f.target_n), -1);
    for (int i = 0; i < f.source_n; ++i) inverse[static_cast<std::size_t>(f.images[static_cast<std::size_t>(i)])] = i;
    report.cond1_uncrossed_embeds = true;
    for (const Edge& e : dst_edges) {
      if (cr_edge(dst, e) != 0) continue;
      const Edge pre(inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]);
      if (!src.graph().has_edge(pre) || cr_edge(src, pre) != 0) {
        report.cond1_uncrossed_embeds = false;
        break;
      }
    }
  }

  // Part 2: the induced edge map carries crossing pairs to crossing pairs.
  report.cond2_ex_hom_exists = total;
  for (std::size_t i = 0; i < src_edges.size() && report.cond2_ex_hom_exists; ++i) {
    for (std::size_t j = i + 1; j < src_edges.size(); ++j) {
      if (src.crosses_at(i, j) &&
          !dst.crosses_at(static_cast<std::size_t>(phi[i]), static_cast<std::size_t>(phi[j]))) {
        report.cond2_ex_hom_exists = false;
        break;
      }
    }
  }

  // Part 3: additionally a bijection on edges that reflects shared endpoints exactly.
  bool lex_ok = report.cond2_ex_hom_exists && src_edges.size() == dst_edges.size();
  if (lex_ok) {
    std::vector<int> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    lex_ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  for (std::size_t i = 0; i < src_edges.size() && lex_ok; ++i) {
    for (std::size_t j = i + 1; j < src_edges.size(); ++j) {
      const bool before = src_edges[i].shares_vertex(src_edges[j]);
      const bool after = dst_edges[static_cast<std::size_t>(phi[i])].shares_vertex(dst_edges[static_cast<std::size_t>(phi[j])]);
      if (before != after) {
        lex_ok = false;
        break;
      }
    }
  }
  report.cond3_lex_hom_exists = lex_ok;
  return report;
}

Certificate hom_report(const GeometricRealization& src, const GeometricRealization& dst,
                       const std::string& src_name, const std::string& dst_name) {
  Certificate c;
  c.src = src_name;
  c.dst = dst_name;
  c.witnesses = find_geo_homomorphisms(src, dst, true);
  c.hom = !c.witnesses.empty();
  if (c.hom) return c;
  const PropReport report = prop_conditions(src, dst);
  if (!report.cond1_uncrossed_embeds) c.failed_conditions.push_back(1);
  if (!report.cond2_ex_hom_exists) c.failed_conditions.push_back(2);
  if (!report.cond3_lex_hom_exists) c.failed_conditions.push_back(3);
  c.exhaustive = c.failed_conditions.empty();
  detail::search_maps(detail::to_colored(src.graph()), detail::to_colored(dst.graph()),
                      {.injective = true, .exact_colors = 0b10}, [&](std::span<const int>) {
                        ++c.candidates_refuted;
                        return true;
                      });
  return c;
}

Certificate explain_non_precedence(const GeometricRealization& src, const GeometricRealization& dst,
                                   const std::string& src_name, const std::string& dst_name) {
  Certificate c = hom_report(src, dst, src_name, dst_name);
  if (c.hom) {
    throw NotApplicable("a vertex-injective geometric homomorphism " + src_name + " -> " + dst_name + " exists");
  }
  return c;
}

std::string certificate_json(const Certificate& c) { return to_json(c).dump(); }

}  // namespace geohom
