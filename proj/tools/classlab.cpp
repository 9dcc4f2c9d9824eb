#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "classlab/catalog.hpp"
#include "classlab/character_table.hpp"
#include "classlab/error.hpp"
#include "classlab/verifiers.hpp"
#include "classlab/verify_suite.hpp"

namespace {

using namespace classlab;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::golden_mismatch:
    case errc::eigen_split_failure:
    case errc::non_integer_result:
      return kExitViolation;
    default:
      return kExitInputError;
  }
}

/// "<name>" resolves against the builtin examples; "<path>#<name>" loads a
/// catalog file first.
CatalogEntry resolve_group(const std::string& spec) {
  std::vector<CatalogEntry> entries;
  std::string name = spec;
  std::size_t hash = spec.rfind('#');
  if (hash != std::string::npos) {
    entries = load_catalog(spec.substr(0, hash));
    name = spec.substr(hash + 1);
  } else {
    entries = builtin_examples();
  }
  for (CatalogEntry& entry : entries)
    if (entry.name == name) return std::move(entry);
  fail(errc::construction_invalid, "no group named '" + name + "' in the catalog");
}

int run_analyze_command(const std::string& group_spec, bool with_chartab, bool as_json) {
  CatalogEntry entry = resolve_group(group_spec);
  AnalysisOptions options;
  options.with_character_table = with_chartab;
  AnalysisReport report = run_analyze(entry, options);
  if (as_json)
    std::cout << to_json(report).dump(2) << "\n";
  else
    std::cout << render_text(report);
  bool ok = report.golden_ok;
  for (const auto& [k, rep] : report.one_d_reports) ok = ok && rep.case_conclusions_ok;
  for (const auto& [k, rep] : report.self_paired_reports) ok = ok && rep.all_ok;
  return ok ? kExitOk : kExitViolation;
}

int run_search_command(const std::string& condition_name, std::optional<long long> max_order,
                       const std::string& catalog_path) {
  std::optional<SearchCondition> condition = parse_search_condition(condition_name);
  if (!condition) fail(errc::construction_invalid, "unknown condition '" + condition_name + "'");
  std::vector<CatalogEntry> entries =
      catalog_path.empty() ? builtin_examples() : load_catalog(catalog_path);
  std::vector<SearchHit> hits = search_condition(entries, *condition, max_order);
  for (const SearchHit& hit : hits) {
    const PatternEntry* pattern = nullptr;
    for (const PatternEntry& pe : hit.report->patterns)
      if (pe.class_index == hit.class_index) pattern = &pe;
    std::cout << hit.entry << " class " << hit.class_index << " " << to_string(hit.tag);
    if (pattern) {
      std::cout << " |K|=" << hit.report->classes[hit.class_index].size;
      if (pattern->d_class)
        std::cout << " |D|=" << hit.report->classes[*pattern->d_class].size;
      std::cout << " m=" << pattern->m << " eta=" << pattern->eta_value;
    }
    std::cout << "\n";
  }
  std::cout << hits.size() << " hit(s) in " << entries.size() << " group(s)\n";
  return kExitOk;
}

int run_chartab_command(const std::string& group_spec, const std::string& export_path) {
  CatalogEntry entry = resolve_group(group_spec);
  GroupTable group = build_group(entry.construction, kDefaultCharTableCap);
  ClassPartition p = conjugacy_classes(group);
  CharacterTable t = dixon_character_table(group, p);
  std::string text = export_character_table_text(t, entry.name);
  std::cout << text;
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    require(out.good(), errc::parse_error, "cannot write " + export_path);
    out << text;
    std::ofstream json_out(export_path + ".json");
    require(json_out.good(), errc::parse_error, "cannot write " + export_path + ".json");
    json_out << export_character_table_json(t, entry.name).dump(2) << "\n";
  }
  return kExitOk;
}

int run_scan_simple_command() {
  std::vector<std::pair<std::string, GroupTable>> groups = standard_simple_groups();
  std::vector<std::pair<std::string, const GroupTable*>> view;
  for (const auto& [name, group] : groups) view.emplace_back(name, &group);
  std::vector<ScanHit> hits = scan_kkinv_patterns(view);
  for (const auto& [name, group] : groups) {
    long long count = 0;
    for (const ScanHit& hit : hits)
      if (hit.group == name) ++count;
    std::cout << name << " order " << group.order() << ": " << count
              << " sparse K K^{-1} class(es)\n";
  }
  for (const ScanHit& hit : hits)
    std::cout << "HIT " << hit.group << " class " << hit.class_index << " " << to_string(hit.tag)
              << " |K|=" << hit.k_size << " |D|=" << hit.d_size << "\n";
  return hits.empty() ? kExitOk : kExitViolation;
}

int run_verify_command() {
  std::vector<VerifyCheck> checks = run_full_verification();
  int failures = 0;
  for (const VerifyCheck& check : checks) {
    std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";
    if (!check.pass) ++failures;
  }
  std::cout << checks.size() - failures << "/" << checks.size() << " checks passed\n";
  return failures == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with products of conjugacy classes in finite groups"};
  app.require_subcommand(1);

  std::string group_spec;
  bool with_chartab = false;
  bool as_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one group");
  analyze->add_option("--group", group_spec, "builtin name or catalog.json#name")->required();
  analyze->add_flag("--chartab", with_chartab, "include the character table digest");
  analyze->add_flag("--json", as_json, "emit the report as JSON");

  std::string condition;
  long long max_order = 0;
  std::string catalog_path;
  CLI::App* search = app.add_subcommand("search", "scan a catalog for a class-product condition");
  search->add_option("--condition", condition,
                     "one_d | one_d_dinv | one_k_kinv_nonreal | eta_le_3")
      ->required();
  search->add_option("--max-order", max_order, "skip groups above this order");
  search->add_option("--catalog", catalog_path, "catalog JSON file (default: builtins)");

  std::string chartab_group;
  std::string export_path;
  CLI::App* chartab = app.add_subcommand("chartab", "print the exact character table");
  chartab->add_option("--group", chartab_group, "builtin name or catalog.json#name")->required();
  chartab->add_option("--export", export_path, "also write <path> and <path>.json");

  CLI::App* scan = app.add_subcommand("scan-simple",
                                      "scan the fixed simple-group catalog for sparse products");

  bool verify_all = false;
  CLI::App* verify = app.add_subcommand("verify", "run the full property suite");
  verify->add_flag("--all", verify_all, "run every check");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze_command(group_spec, with_chartab, as_json);
    if (search->parsed())
      return run_search_command(
          condition, max_order > 0 ? std::optional<long long>(max_order) : std::nullopt,
          catalog_path);
    if (chartab->parsed()) return run_chartab_command(chartab_group, export_path);
    if (scan->parsed()) return run_scan_simple_command();
    if (verify->parsed()) {
      if (!verify_all) {
        std::cerr << "verify: pass --all to run the full property suite\n";
        return kExitInputError;
      }
      return run_verify_command();
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
