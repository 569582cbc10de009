#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geohom/atlas.hpp"
#include "geohom/catalog.hpp"
#include "geohom/poset.hpp"

namespace geohom {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyInputs {
  std::uint64_t seed = 1;
  /// Used instead of enumerating when set (e.g. an atlas file). Labels are always recomputed.
  std::optional<Atlas> k33_atlas;
  std::optional<Atlas> k6_atlas;
  /// Used instead of building from the atlas when set.
  std::optional<HomPoset> poset;
};

/// Runs the acceptance checks. Atlases and the poset are built once, on first use.
class Verifier {
 public:
  static constexpr int kCriteria = 10;

  explicit Verifier(VerifyInputs inputs);

  static std::string criterion_name(int id);
  /// Throws std::out_of_range for ids outside [1, kCriteria].
  CheckResult run(int id);
  std::vector<CheckResult> run_all();

 private:
  const Atlas& k33();
  const Atlas& k6();
  /// The labelled k33 atlas, or nullopt with the reason in labeling_error_.
  const Atlas* labelled();
  const HomPoset& poset();

  CheckResult atlas_completeness();
  CheckResult crossing_histogram();
  CheckResult parity();
  CheckResult anchors();
  CheckResult table_pattern();
  CheckResult stated_non_precedences();
  CheckResult soundness();
  CheckResult poset_structure();
  CheckResult thickness_claims();
  CheckResult oracle_equivalence();

  VerifyInputs inputs_;
  std::optional<Atlas> k33_;
  std::optional<Atlas> k6_;
  std::optional<std::string> k33_error_;
  std::optional<std::string> k6_error_;
  std::optional<Atlas> labelled_;
  std::optional<std::string> labeling_error_;
  bool labeling_done_ = false;
  std::optional<HomPoset> poset_;
};

/// One line per check: "[PASS] 3 parity: ..." or "[FAIL] ...".
std::string format_result(const CheckResult& r);

}  // namespace geohom
