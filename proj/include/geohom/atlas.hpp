#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geohom/errors.hpp"
#include "geohom/invariants.hpp"
#include "geohom/json_io.hpp"
#include "geohom/realization.hpp"

namespace geohom {

enum class Target { k33, k6 };
enum class EnumerationMode { random, grid };

std::string to_string(Target t);
Target parse_target(const std::string& s);
std::string to_string(EnumerationMode m);
EnumerationMode parse_mode(const std::string& s);

struct EnumerationConfig {
  /// Coordinates are drawn from [0, coordinate_bound].
  std::int64_t coordinate_bound = 1000;
  EnumerationMode mode = EnumerationMode::random;
  std::uint64_t seed = 1;
  /// Consecutive point sets without a new class before the search is declared complete.
  std::size_t stabilization_window = 50'000;
  /// Upper limit on general-position point sets examined.
  std::size_t max_samples = 500'000;

  /// Largest grid accepted in grid mode; the sweep is exhaustive over 6-subsets.
  static constexpr std::int64_t kMaxGridBound = 8;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// One isomorphism class of realizations.
struct RealizationClass {
  GeometricRealization representative;
  InvariantSignature signature;
  std::optional<std::string> label;
  /// Label chosen among equally consistent candidates rather than pinned by an invariant.
  bool provisional = false;
  std::size_t discovery_count = 0;
};

struct Atlas {
  Target target = Target::k33;
  /// False when the search hit its budget before stabilizing.
  bool complete = false;
  std::size_t samples = 0;
  std::vector<RealizationClass> classes;

  /// Index of the class with this label, or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws UnknownLabel.
  const RealizationClass& at(const std::string& label) const;
  /// Number of classes per crossing number, ascending by crossing number.
  std::vector<std::pair<int, std::size_t>> histogram() const;
};

/// Raised when the budget runs out before the class set stabilizes; carries what was found.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(Atlas partial);
  const Atlas& partial() const { return partial_; }

 private:
  Atlas partial_;
};

/// Samples (random mode) or sweeps (grid mode) 6-point sets in general position, draws the target
/// graph on each (all ten bipartitions for k33), and groups the drawings into isomorphism classes:
/// bucketed by signature, then split by exact crossing-preserving isomorphism. Classes come back
/// sorted by signature. Deterministic for a fixed config. Throws BudgetExhausted.
Atlas enumerate_classes(Target target, const EnumerationConfig& cfg);

Json to_json(const Atlas& atlas);
/// Throws ParseError with field diagnostics, including for duplicate labels.
Atlas atlas_from_json(const Json& j);

void save_atlas(const Atlas& atlas, const std::string& path);
/// Throws ParseError (with line/column for syntax errors) or std::runtime_error on I/O failure.
Atlas load_atlas(const std::string& path);

/// Indices of classes whose stored signature differs from one recomputed from the representative.
std::vector<std::size_t> stale_signatures(const Atlas& atlas);

}  // namespace geohom
