#include "geohom/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "geohom/errors.hpp"
#include "geohom/json_io.hpp"

namespace geohom {

int cr_total(const GeometricRealization& r) { return static_cast<int>(r.crossings().size()); }

int cr_edge(const GeometricRealization& r, Edge e) {
  const auto idx = r.graph().edge_index(e);
  if (!idx) {
    throw UnknownEdge("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
  }
  int count = 0;
  for (std::size_t j = 0; j < r.graph().edge_count(); ++j) count += r.crosses_at(*idx, j) ? 1 : 0;
  return count;
}

AbstractGraph uncrossed_subgraph(const GeometricRealization& r) {
  std::vector<Edge> kept;
  for (const Edge& e : r.graph().edges()) {
    if (cr_edge(r, e) == 0) kept.push_back(e);
  }
  return AbstractGraph(r.graph().n(), std::move(kept));
}

AbstractGraph ex_graph(const GeometricRealization& r) {
  const std::size_t m = r.graph().edge_count();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (r.crosses_at(i, j)) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return AbstractGraph(static_cast<int>(m), std::move(edges));
}

TwoColoredGraph lex_graph(const GeometricRealization& r) {
  return TwoColoredGraph(ex_graph(r), line_graph(r.graph()));
}

int edge_thickness(const GeometricRealization& r) {
  if (r.graph().edge_count() == 0) return 1;
  return chromatic_number(ex_graph(r));
}

InvariantSignature signature(const GeometricRealization& r) {
  InvariantSignature s;
  s.cr = cr_total(r);
  for (const Edge& e : r.graph().edges()) s.per_edge_cr.push_back(cr_edge(r, e));
  std::sort(s.per_edge_cr.begin(), s.per_edge_cr.end());
  s.uncrossed_class = canonical_label(uncrossed_subgraph(r));
  const AbstractGraph ex = ex_graph(r);
  s.ex_class = canonical_label(ex);
  s.lex_class = canonical_label(TwoColoredGraph(ex, line_graph(r.graph())));
  s.thickness = r.graph().edge_count() == 0 ? 1 : chromatic_number(ex);
  return s;
}

std::string signature_json(const InvariantSignature& s) { return to_json(s).dump(); }

namespace {

std::string edge_name(const Edge& e) { return "\"" + std::to_string(e.u) + "-" + std::to_string(e.v) + "\""; }

}  // namespace

std::string ex_dot(const GeometricRealization& r, const std::string& name) {
  const auto& es = r.graph().edges();
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (const Edge& e : es) out << "  " << edge_name(e) << ";\n";
  for (const auto& [e, f] : r.crossings().pairs()) out << "  " << edge_name(e) << " -- " << edge_name(f) << ";\n";
  out << "}\n";
  return out.str();
}

std::string lex_dot(const GeometricRealization& r, const std::string& name) {
  const auto& es = r.graph().edges();
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (const Edge& e : es) out << "  " << edge_name(e) << ";\n";
  for (const auto& [e, f] : r.crossings().pairs()) {
    out << "  " << edge_name(e) << " -- " << edge_name(f) << " [style=solid];\n";
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (es[i].shares_vertex(es[j])) {
        out << "  " << edge_name(es[i]) << " -- " << edge_name(es[j]) << " [style=dashed];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace geohom
