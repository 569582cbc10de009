#include "geohom/atlas.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "geohom/morphisms.hpp"
#include "geohom/sampling.hpp"

namespace geohom {

std::string to_string(Target t) { return t == Target::k33 ? "k33" : "k6"; }

Target parse_target(const std::string& s) {
  if (s == "k33") return Target::k33;
  if (s == "k6") return Target::k6;
  throw std::invalid_argument("unknown graph '" + s + "' (expected k33 or k6)");
}

std::string to_string(EnumerationMode m) { return m == EnumerationMode::random ? "random" : "grid"; }

EnumerationMode parse_mode(const std::string& s) {
  if (s == "random") return EnumerationMode::random;
  if (s == "grid") return EnumerationMode::grid;
  throw std::invalid_argument("unknown mode '" + s + "' (expected random or grid)");
}

void EnumerationConfig::validate() const {
  if (coordinate_bound < 1 || coordinate_bound > kCoordinateLimit) {
    throw std::invalid_argument("coordinate bound must lie in [1, 2^20]");
  }
  if (mode == EnumerationMode::grid && coordinate_bound > kMaxGridBound) {
    throw std::invalid_argument("grid mode supports bounds up to " + std::to_string(kMaxGridBound));
  }
  if (stabilization_window < 1) throw std::invalid_argument("stabilization window must be at least 1");
  if (max_samples < 1) throw std::invalid_argument("max samples must be at least 1");
}

std::optional<std::size_t> Atlas::find(const std::string& label) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].label == label) return i;
  }
  return std::nullopt;
}

const RealizationClass& Atlas::at(const std::string& label) const {
  const auto idx = find(label);
  if (!idx) throw UnknownLabel("no class labelled '" + label + "' in the atlas");
  return classes[*idx];
}

std::vector<std::pair<int, std::size_t>> Atlas::histogram() const {
  std::map<int, std::size_t> counts;
  for (const RealizationClass& c : classes) ++counts[c.signature.cr];
  return {counts.begin(), counts.end()};
}

BudgetExhausted::BudgetExhausted(Atlas partial)
    : Error("budget exhausted after " + std::to_string(partial.samples) + " point sets with " +
            std::to_string(partial.classes.size()) + " classes; the atlas may be incomplete"),
      partial_(std::move(partial)) {}

namespace {

constexpr int kPoints = 6;

// Positions of the 15 edges of K6 in lexicographic order, and a bit for every vertex-disjoint pair.
struct K6Layout {
  std::vector<Edge> edges;
  std::array<std::array<int, 15>, 15> pair_bit{};
  std::vector<std::pair<int, int>> disjoint_pairs;
  // For each bipartition: the K6 edge positions of its 9 edges (in lexicographic order).
  std::vector<std::vector<int>> k33_edges;

  K6Layout() : edges(complete_graph(kPoints).edges()) {
    for (auto& row : pair_bit) row.fill(-1);
    for (int i = 0; i < 15; ++i) {
      for (int j = i + 1; j < 15; ++j) {
        if (edges[static_cast<std::size_t>(i)].shares_vertex(edges[static_cast<std::size_t>(j)])) continue;
        const int bit = static_cast<int>(disjoint_pairs.size());
        pair_bit[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit;
        pair_bit[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bit;
        disjoint_pairs.emplace_back(i, j);
      }
    }
    for (const Bipartition& b : bipartitions_of_6()) {
      std::vector<int> idx;
      for (int i = 0; i < 15; ++i) {
        const Edge& e = edges[static_cast<std::size_t>(i)];
        const bool a_left = std::binary_search(b.left.begin(), b.left.end(), e.u);
        const bool b_left = std::binary_search(b.left.begin(), b.left.end(), e.v);
        if (a_left != b_left) idx.push_back(i);
      }
      k33_edges.push_back(std::move(idx));
    }
  }

  std::uint64_t crossing_mask(const std::array<Point, kPoints>& pts) const {
    std::uint64_t mask = 0;
    for (std::size_t bit = 0; bit < disjoint_pairs.size(); ++bit) {
      const Edge& e = edges[static_cast<std::size_t>(disjoint_pairs[bit].first)];
      const Edge& f = edges[static_cast<std::size_t>(disjoint_pairs[bit].second)];
      const Segment s{pts[static_cast<std::size_t>(e.u)], pts[static_cast<std::size_t>(e.v)]};
      const Segment t{pts[static_cast<std::size_t>(f.u)], pts[static_cast<std::size_t>(f.v)]};
      if (proper_cross(s, t)) mask |= std::uint64_t{1} << bit;
    }
    return mask;
  }

  // Crossing pattern of the K33 on bipartition b, relative to its own edge order.
  std::uint64_t k33_mask(std::size_t b, std::uint64_t k6_mask) const {
    const auto& idx = k33_edges[b];
    std::uint64_t mask = 0;
    int bit = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = i + 1; j < idx.size(); ++j) {
        const int k6_bit = pair_bit[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])];
        if (k6_bit < 0) continue;
        if ((k6_mask >> k6_bit) & 1U) mask |= std::uint64_t{1} << bit;
        ++bit;
      }
    }
    return mask;
  }
};

const K6Layout& layout() {
  static const K6Layout instance;
  return instance;
}

class Classifier {
 public:
  explicit Classifier(Target target) : target_(target) {}

  // Returns true if the point set produced a class not seen before.
  bool add(const std::array<Point, kPoints>& pts) {
    const K6Layout& lay = layout();
    const std::uint64_t k6_mask = lay.crossing_mask(pts);
    bool fresh = false;
    if (target_ == Target::k6) {
      fresh |= place(k6_mask, [&] { return make_realization(complete_graph(kPoints), {pts.begin(), pts.end()}); });
    } else {
      const auto parts = bipartitions_of_6();
      for (std::size_t b = 0; b < parts.size(); ++b) {
        const std::uint64_t key = ((b + 1) << 48) | lay.k33_mask(b, k6_mask);
        fresh |= place(key, [&] { return make_complete_bipartite({pts.begin(), pts.end()}, parts[b]); });
      }
    }
    return fresh;
  }

  std::vector<RealizationClass> take_sorted() {
    std::sort(classes_.begin(), classes_.end(),
              [](const RealizationClass& a, const RealizationClass& b) { return a.signature < b.signature; });
    return std::move(classes_);
  }

  std::size_t size() const { return classes_.size(); }

 private:
  // The key is the labelled crossing pattern: equal keys are identical drawings up to the
  // position of the points, so only unseen keys need real classification.
  bool place(std::uint64_t key, const std::function<GeometricRealization()>& build) {
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++classes_[it->second].discovery_count;
      return false;
    }
    GeometricRealization r = build();
    InvariantSignature sig = signature(r);
    auto& bucket = buckets_[sig];
    for (std::size_t idx : bucket) {
      if (geo_isomorphic(r, classes_[idx].representative)) {
        memo_.emplace(key, idx);
        ++classes_[idx].discovery_count;
        return false;
      }
    }
    bucket.push_back(classes_.size());
    memo_.emplace(key, classes_.size());
    classes_.push_back(RealizationClass{std::move(r), std::move(sig), std::nullopt, false, 1});
    return true;
  }

  Target target_;
  std::vector<RealizationClass> classes_;
  std::map<InvariantSignature, std::vector<std::size_t>> buckets_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

// Visits every 6-subset of the (bound+1)^2 grid in general position, in lexicographic order of
// row-major point indices. The visitor returns false to stop.
void sweep_grid(std::int64_t bound, const std::function<bool(const std::array<Point, kPoints>&)>& visit) {
  std::vector<Point> grid;
  for (std::int64_t x = 0; x <= bound; ++x) {
    for (std::int64_t y = 0; y <= bound; ++y) grid.push_back({x, y});
  }
  std::array<Point, kPoints> chosen{};
  auto extend = [&](auto&& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == kPoints) return visit(chosen);
    for (std::size_t i = start; i < grid.size(); ++i) {
      const Point p = grid[i];
      bool ok = true;
      for (std::size_t a = 0; a < depth && ok; ++a) {
        for (std::size_t b = a + 1; b < depth && ok; ++b) ok = orient(chosen[a], chosen[b], p) != 0;
      }
      if (!ok) continue;
      chosen[depth] = p;
      if (!self(self, depth + 1, i + 1)) return false;
    }
    return true;
  };
  extend(extend, 0, 0);
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

Point random_point(std::mt19937_64& rng, std::int64_t bound) {
  const auto range = static_cast<std::uint64_t>(bound) + 1;
  Point p;
  p.x = static_cast<std::int64_t>(uniform_below(rng, range));
  p.y = static_cast<std::int64_t>(uniform_below(rng, range));
  return p;
}

Atlas enumerate_classes(Target target, const EnumerationConfig& cfg) {
  cfg.validate();
  Classifier classifier(target);
  Atlas atlas;
  atlas.target = target;
  std::size_t since_new = 0;
  bool stable = false;

  auto consume = [&](const std::array<Point, kPoints>& pts) {
    ++atlas.samples;
    since_new = classifier.add(pts) ? 0 : since_new + 1;
    if (since_new >= cfg.stabilization_window) stable = true;
    return !stable && atlas.samples < cfg.max_samples;
  };

  if (cfg.mode == EnumerationMode::grid) {
    sweep_grid(cfg.coordinate_bound, consume);
  } else {
    std::mt19937_64 rng(cfg.seed);
    // Degenerate bounds may never yield a general-position set; cap the raw draws too.
    const std::size_t max_draws = cfg.max_samples * 100;
    std::array<Point, kPoints> pts{};
    for (std::size_t draws = 0; draws < max_draws; ++draws) {
      for (Point& p : pts) p = random_point(rng, cfg.coordinate_bound);
      if (!in_general_position(pts)) continue;
      if (!consume(pts)) break;
    }
  }

  atlas.classes = classifier.take_sorted();
  atlas.complete = stable;
  if (!stable) throw BudgetExhausted(std::move(atlas));
  return atlas;
}

Json to_json(const Atlas& atlas) {
  Json j;
  j["target"] = to_string(atlas.target);
  j["complete"] = atlas.complete;
  j["samples"] = atlas.samples;
  Json classes = Json::array();
  for (const RealizationClass& c : atlas.classes) {
    Json rec;
    rec["representative"] = to_json(c.representative);
    rec["signature"] = to_json(c.signature);
    rec["label"] = c.label ? Json(*c.label) : Json(nullptr);
    rec["provisional"] = c.provisional;
    rec["discovery_count"] = c.discovery_count;
    classes.push_back(std::move(rec));
  }
  j["classes"] = std::move(classes);
  return j;
}

Atlas atlas_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("atlas: expected an object");
  auto need = [&](const char* name) -> const Json& {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("atlas: missing field '") + name + "'");
    return *it;
  };
  Atlas atlas;
  const Json& target = need("target");
  if (!target.is_string()) throw ParseError("atlas.target: expected a string");
  try {
    atlas.target = parse_target(target.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("atlas.target: ") + e.what());
  }
  const Json& complete = need("complete");
  if (!complete.is_boolean()) throw ParseError("atlas.complete: expected a boolean");
  atlas.complete = complete.get<bool>();
  const Json& samples = need("samples");
  if (!samples.is_number_unsigned()) throw ParseError("atlas.samples: expected a non-negative integer");
  atlas.samples = samples.get<std::size_t>();
  const Json& classes = need("classes");
  if (!classes.is_array()) throw ParseError("atlas.classes: expected an array");

  std::set<std::string> seen_labels;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string where = "atlas.classes[" + std::to_string(i) + "]";
    const Json& rec = classes[i];
    if (!rec.is_object()) throw ParseError(where + ": expected an object");
    for (const char* name : {"representative", "signature", "label", "provisional", "discovery_count"}) {
      if (!rec.contains(name)) throw ParseError(where + ": missing field '" + name + "'");
    }
    RealizationClass c{realization_from_json(rec["representative"], where + ".representative"),
                       signature_from_json(rec["signature"], where + ".signature"), std::nullopt, false, 0};
    const Json& label = rec["label"];
    if (label.is_string()) {
      c.label = label.get<std::string>();
      if (!seen_labels.insert(*c.label).second) {
        throw ParseError(where + ".label: duplicate label '" + *c.label + "'");
      }
    } else if (!label.is_null()) {
      throw ParseError(where + ".label: expected a string or null");
    }
    if (!rec["provisional"].is_boolean()) throw ParseError(where + ".provisional: expected a boolean");
    c.provisional = rec["provisional"].get<bool>();
    if (!rec["discovery_count"].is_number_unsigned()) {
      throw ParseError(where + ".discovery_count: expected a non-negative integer");
    }
    c.discovery_count = rec["discovery_count"].get<std::size_t>();
    atlas.classes.push_back(std::move(c));
  }
  return atlas;
}

void save_atlas(const Atlas& atlas, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_json(atlas).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Atlas load_atlas(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return atlas_from_json(parse_json_text(buf.str(), path));
}

std::vector<std::size_t> stale_signatures(const Atlas& atlas) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < atlas.classes.size(); ++i) {
    if (signature(atlas.classes[i].representative) != atlas.classes[i].signature) out.push_back(i);
  }
  return out;
}

}  // namespace geohom
