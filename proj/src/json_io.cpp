#include "geohom/json_io.hpp"

#include "geohom/errors.hpp"

namespace geohom {

namespace {

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field '" + name + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(as_int(j[i], where + "[" + std::to_string(i) + "]")));
  }
  return out;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json to_json(const GeometricRealization& r) {
  Json j;
  j["n"] = r.graph().n();
  if (r.parts()) {
    j["parts"] = Json::array({r.parts()->left, r.parts()->right});
  } else {
    j["parts"] = nullptr;
  }
  Json pts = Json::array();
  for (const Point& p : r.points()) pts.push_back(Json::array({p.x, p.y}));
  j["points"] = std::move(pts);
  if (!r.parts()) {
    Json edges = Json::array();
    for (const Edge& e : r.graph().edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
  }
  return j;
}

GeometricRealization realization_from_json(const Json& j, const std::string& where) {
  const auto n = as_int(field(j, "n", where), where + ".n");
  if (n < 0 || n > AbstractGraph::kMaxVertices) throw ParseError(where + ".n: out of range");
  const Json& pts_json = field(j, "points", where);
  if (!pts_json.is_array()) throw ParseError(where + ".points: expected an array");
  std::vector<Point> points;
  for (std::size_t i = 0; i < pts_json.size(); ++i) {
    const std::string at = where + ".points[" + std::to_string(i) + "]";
    const Json& p = pts_json[i];
    if (!p.is_array() || p.size() != 2) throw ParseError(at + ": expected [x, y]");
    points.push_back({as_int(p[0], at + "[0]"), as_int(p[1], at + "[1]")});
  }
  const Json& parts_json = field(j, "parts", where);
  try {
    if (!parts_json.is_null()) {
      if (!parts_json.is_array() || parts_json.size() != 2) {
        throw ParseError(where + ".parts: expected two vertex lists or null");
      }
      Bipartition parts(int_list(parts_json[0], where + ".parts[0]"), int_list(parts_json[1], where + ".parts[1]"));
      if (static_cast<std::int64_t>(points.size()) != n) {
        throw ParseError(where + ": n = " + std::to_string(n) + " but " + std::to_string(points.size()) + " points");
      }
      if (j.contains("edges")) throw ParseError(where + ".edges: must be omitted when parts are given");
      return make_complete_bipartite(std::move(points), parts);
    }
    const Json& edges_json = field(j, "edges", where);
    if (!edges_json.is_array()) throw ParseError(where + ".edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edges_json.size(); ++i) {
      const std::vector<int> uv = int_list(edges_json[i], where + ".edges[" + std::to_string(i) + "]");
      if (uv.size() != 2) throw ParseError(where + ".edges[" + std::to_string(i) + "]: expected [u, v]");
      edges.emplace_back(uv[0], uv[1]);
    }
    return make_realization(AbstractGraph(static_cast<int>(n), std::move(edges)), std::move(points));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json to_json(const InvariantSignature& s) {
  Json j;
  j["cr"] = s.cr;
  j["per_edge_cr"] = s.per_edge_cr;
  j["uncrossed_class"] = s.uncrossed_class;
  j["ex_class"] = s.ex_class;
  j["lex_class"] = s.lex_class;
  j["thickness"] = s.thickness;
  return j;
}

InvariantSignature signature_from_json(const Json& j, const std::string& where) {
  InvariantSignature s;
  s.cr = static_cast<int>(as_int(field(j, "cr", where), where + ".cr"));
  s.per_edge_cr = int_list(field(j, "per_edge_cr", where), where + ".per_edge_cr");
  s.uncrossed_class = as_string(field(j, "uncrossed_class", where), where + ".uncrossed_class");
  s.ex_class = as_string(field(j, "ex_class", where), where + ".ex_class");
  s.lex_class = as_string(field(j, "lex_class", where), where + ".lex_class");
  s.thickness = static_cast<int>(as_int(field(j, "thickness", where), where + ".thickness"));
  return s;
}

Json to_json(const VertexMap& f) { return Json(f.images); }

Json to_json(const Certificate& c) {
  Json j;
  j["src"] = c.src;
  j["dst"] = c.dst;
  j["result"] = c.hom ? "hom" : "no-hom";
  Json w = Json::array();
  for (const VertexMap& f : c.witnesses) w.push_back(to_json(f));
  j["witnesses"] = std::move(w);
  j["failed_conditions"] = c.failed_conditions;
  j["exhaustive"] = c.exhaustive;
  if (!c.hom) j["candidates_refuted"] = c.candidates_refuted;
  return j;
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    const std::size_t offset = std::min(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
  }
}

}  // namespace geohom
