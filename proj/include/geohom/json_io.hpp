#pragma once

#include <string>

#include "json.hpp"

#include "geohom/invariants.hpp"
#include "geohom/morphisms.hpp"
#include "geohom/realization.hpp"

namespace geohom {

// Field order in every document is fixed, so serializing the same value twice is byte-identical.
using Json = nlohmann::ordered_json;

/// {"n", "parts": [[...],[...]] | null, "points": [[x,y],...], "edges" (only when parts is null)}
Json to_json(const GeometricRealization& r);
/// Throws ParseError naming the offending field, prefixed by where.
GeometricRealization realization_from_json(const Json& j, const std::string& where = "realization");

/// {"cr", "per_edge_cr", "uncrossed_class", "ex_class", "lex_class", "thickness"}
Json to_json(const InvariantSignature& s);
InvariantSignature signature_from_json(const Json& j, const std::string& where = "signature");

Json to_json(const VertexMap& f);

/// {"src", "dst", "result": "hom"|"no-hom", "witnesses", "failed_conditions", "exhaustive"}
Json to_json(const Certificate& c);

/// Parses text, reporting line and column on syntax errors.
Json parse_json_text(const std::string& text, const std::string& source);

}  // namespace geohom
