#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "geohom/atlas.hpp"
#include "geohom/catalog.hpp"
#include "geohom/invariants.hpp"
#include "geohom/morphisms.hpp"
#include "geohom/poset.hpp"
#include "geohom/verify.hpp"

namespace {

using namespace geohom;

constexpr int kExitFail = 1;
constexpr int kExitIncomplete = 2;

struct Options {
  std::string graph = "k33";
  std::uint64_t seed = 1;
  std::string mode = "random";
  std::optional<std::int64_t> bound;
  std::size_t window = EnumerationConfig{}.stabilization_window;
  std::size_t max_samples = EnumerationConfig{}.max_samples;
  std::string out;
  std::string atlas;
  std::string format = "json";
  std::string src;
  std::string dst;
  std::string label;
  std::string what = "ex";
  std::vector<int> criteria;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

std::string histogram_line(const Atlas& a) {
  std::string out = std::to_string(a.classes.size()) + " classes; histogram";
  for (const auto& [cr, count] : a.histogram()) out += " " + std::to_string(cr) + ":" + std::to_string(count);
  return out;
}

// The labelled k33 atlas from --atlas, or a fresh enumeration from --seed. Labels are recomputed.
Atlas labelled_atlas(const Options& o) {
  Atlas a;
  if (!o.atlas.empty()) {
    a = load_atlas(o.atlas);
  } else {
    EnumerationConfig cfg;
    cfg.seed = o.seed;
    a = enumerate_classes(Target::k33, cfg);
  }
  if (a.target != Target::k33) throw std::runtime_error("a k33 atlas is required");
  catalog::assign_catalog_labels(a);
  return a;
}

int cmd_enumerate(const Options& o) {
  EnumerationConfig cfg;
  cfg.mode = parse_mode(o.mode);
  cfg.seed = o.seed;
  cfg.coordinate_bound = o.bound.value_or(cfg.mode == EnumerationMode::grid ? EnumerationConfig::kMaxGridBound
                                                                            : cfg.coordinate_bound);
  cfg.stabilization_window = o.window;
  cfg.max_samples = o.max_samples;
  const Target target = parse_target(o.graph);
  const std::string out = o.out.empty() ? "atlas-" + o.graph + ".json" : o.out;

  Atlas atlas;
  try {
    atlas = enumerate_classes(target, cfg);
  } catch (const BudgetExhausted& e) {
    save_atlas(e.partial(), out);
    std::cout << histogram_line(e.partial()) << " (incomplete: budget exhausted)\n";
    return kExitIncomplete;
  }
  if (target == Target::k33) {
    try {
      catalog::assign_catalog_labels(atlas);
    } catch (const AnchorConflict& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
  }
  save_atlas(atlas, out);
  std::cout << histogram_line(atlas) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyInputs in;
  in.seed = o.seed;
  if (!o.atlas.empty()) in.k33_atlas = load_atlas(o.atlas);
  Verifier v(std::move(in));
  std::vector<int> ids = o.criteria;
  if (ids.empty()) {
    for (int id = 1; id <= Verifier::kCriteria; ++id) ids.push_back(id);
  }
  std::optional<CheckResult> first_failure;
  for (int id : ids) {
    const CheckResult r = v.run(id);
    std::cout << format_result(r) << std::endl;
    if (!r.passed && !first_failure) first_failure = r;
  }
  if (first_failure) {
    std::cerr << "first failing check: " << first_failure->id << " " << first_failure->name << "\n";
    return kExitFail;
  }
  return 0;
}

int cmd_hom(const Options& o) {
  const Atlas a = labelled_atlas(o);
  const Certificate c = hom_report(a.at(o.src).representative, a.at(o.dst).representative, o.src, o.dst);
  write_output(o.out, to_json(c).dump(2) + "\n");
  return 0;
}

int cmd_poset(const Options& o) {
  const HomPoset p = build_poset(labelled_atlas(o));
  if (o.format == "dot") {
    write_output(o.out, poset_dot(p));
  } else {
    write_output(o.out, to_json(p).dump(2) + "\n");
  }
  return 0;
}

int cmd_export(const Options& o) {
  const Atlas a = labelled_atlas(o);
  const RealizationClass& c = a.at(o.label);
  std::string text;
  if (o.what == "ex") {
    text = o.format == "dot" ? ex_dot(c.representative, "EX_" + o.label)
                             : format_graph_literal(ex_graph(c.representative)) + "\n";
  } else if (o.what == "lex") {
    if (o.format != "dot") throw std::runtime_error("lex export supports --format dot only");
    text = lex_dot(c.representative, "LEX_" + o.label);
  } else if (o.what == "signature") {
    text = to_json(c.signature).dump(2) + "\n";
  } else {
    text = to_json(c.representative).dump(2) + "\n";
  }
  write_output(o.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric homomorphisms between straight-line drawings of K33 and K6"};
  app.require_subcommand(1);
  Options o;

  auto add_seed = [&o](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed")->capture_default_str(); };
  auto add_atlas = [&o](CLI::App* sub) {
    sub->add_option("--atlas", o.atlas, "k33 atlas file (enumerated from --seed when omitted)")
        ->check(CLI::ExistingFile);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "find all realization classes and write an atlas");
  enumerate->add_option("--graph", o.graph, "k33 or k6")->check(CLI::IsMember({"k33", "k6"}))->capture_default_str();
  add_seed(enumerate);
  enumerate->add_option("--mode", o.mode, "random or grid")->check(CLI::IsMember({"random", "grid"}))
      ->capture_default_str();
  enumerate->add_option("--bound", o.bound, "coordinate bound (default 1000, or 8 in grid mode)");
  enumerate->add_option("--window", o.window, "samples without a new class before stopping")->capture_default_str();
  enumerate->add_option("--max-samples", o.max_samples, "sample budget")->capture_default_str();
  enumerate->add_option("--out", o.out, "atlas file (default atlas-<graph>.json)");

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
  add_seed(verify);
  add_atlas(verify);
  verify->add_option("--criterion", o.criteria, "run only these checks (1-10)")->check(CLI::Range(1, 10));

  CLI::App* hom = app.add_subcommand("hom", "list injective homomorphisms or a non-precedence certificate");
  hom->add_option("src", o.src, "source class label")->required();
  hom->add_option("dst", o.dst, "target class label")->required();
  add_seed(hom);
  add_atlas(hom);
  hom->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* poset = app.add_subcommand("poset", "build the homomorphism poset");
  add_seed(poset);
  add_atlas(poset);
  poset->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  poset->add_option("--out", o.out, "output file (default stdout)");

  CLI::App* exp = app.add_subcommand("export", "export one class");
  exp->add_option("--label", o.label, "class label")->required();
  exp->add_option("--what", o.what, "ex, lex, signature or realization")
      ->check(CLI::IsMember({"ex", "lex", "signature", "realization"}))
      ->capture_default_str();
  add_seed(exp);
  add_atlas(exp);
  exp->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
  exp->add_option("--out", o.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (verify->parsed()) return cmd_verify(o);
    if (hom->parsed()) return cmd_hom(o);
    if (poset->parsed()) return cmd_poset(o);
    return cmd_export(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
