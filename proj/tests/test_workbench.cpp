#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "classlab/catalog.hpp"
#include "classlab/error.hpp"
#include "classlab/verify_suite.hpp"

using namespace classlab;

namespace {

const CatalogEntry& builtin(const std::vector<CatalogEntry>& entries, const std::string& name) {
  for (const CatalogEntry& e : entries)
    if (e.name == name) return e;
  REQUIRE(false);
  return entries.front();
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin catalog builds the seven examples") {
  std::vector<CatalogEntry> entries = builtin_examples();
  REQUIRE(entries.size() == 7);
  std::vector<long long> expected_orders{21, 110, 120, 150, 24, 55, 351};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    GroupTable g = build_group(entries[i].construction);
    CHECK(g.order() == expected_orders[i]);
  }
  CHECK(entries[0].name == "Ex5.1");
  CHECK(entries[6].name == "Ex5.7");
}

TEST_CASE("golden facts hold for every builtin") {
  for (const CatalogEntry& entry : builtin_examples()) {
    AnalysisReport report = run_analyze(entry);
    CHECK(report.golden_ok);
    for (const std::string& note : report.golden_notes) {
      CAPTURE(note);
      CHECK(false);
    }
  }
}

TEST_CASE("analysis of the order-21 example") {
  std::vector<CatalogEntry> entries = builtin_examples();
  AnalysisReport report = run_analyze(builtin(entries, "Ex5.1"));
  CHECK(report.order == 21);
  bool found = false;
  for (const PatternEntry& pe : report.patterns)
    if (pe.tag == KKInvTag::OneDDinv && pe.eta_value == 3 && pe.m == 7) found = true;
  CHECK(found);
  CHECK(report.one_d_reports.empty());
}

TEST_CASE("analysis of the order-55 example") {
  std::vector<CatalogEntry> entries = builtin_examples();
  AnalysisReport report = run_analyze(builtin(entries, "Ex5.6"));
  bool found = false;
  for (const auto& [k, rep] : report.self_paired_reports)
    if (rep.p == 11 && rep.n == 1 && rep.all_ok) found = true;
  CHECK(found);
}

TEST_CASE("analysis of SL(2,3): derived length and quaternion span") {
  std::vector<CatalogEntry> entries = builtin_examples();
  AnalysisReport report = run_analyze(builtin(entries, "Ex5.5"));
  REQUIRE(!report.one_d_reports.empty());
  for (const auto& [k, rep] : report.one_d_reports) {
    CHECK(rep.k_size == 4);
    CHECK(rep.d_size == 6);
    CHECK(rep.case_tag == OneDCase::OtherDivisor);
    CHECK(rep.k_span_order == 24);
    CHECK(rep.d_span_order == 8);
    CHECK(rep.derived_length == 3);
    CHECK(rep.d_span_unique_involution_order8);
    CHECK(rep.case_conclusions_ok);
  }
}

TEST_CASE("analysis of the trivial group") {
  CatalogEntry entry;
  entry.name = "C1";
  entry.construction.spec = CyclicSpec{1, "g"};
  AnalysisOptions options;
  options.with_character_table = true;
  AnalysisReport report = run_analyze(entry, options);
  CHECK(report.order == 1);
  CHECK(report.classes.size() == 1);
  REQUIRE(report.character_table.has_value());
  CHECK(report.character_table->degrees == std::vector<long long>{1});
}

TEST_CASE("analysis with character tables enforces the cap") {
  CatalogEntry entry;
  entry.name = "C30";
  entry.construction.spec = CyclicSpec{30, "g"};
  AnalysisOptions options;
  options.with_character_table = true;
  options.chartab_cap = 20;
  CHECK_THROWS_AS(run_analyze(entry, options), Error);
}

TEST_CASE("search conditions over the builtins") {
  std::vector<CatalogEntry> entries = builtin_examples();

  auto names_with = [&](SearchCondition c) {
    std::set<std::string> names;
    for (const SearchHit& hit : search_condition(entries, c)) names.insert(hit.entry);
    return names;
  };

  CHECK(names_with(SearchCondition::one_d) ==
        std::set<std::string>{"Ex5.2", "Ex5.3", "Ex5.4", "Ex5.5"});

  // Ex5.6 and Ex5.7 carry the showcase non-real self-paired classes; Ex5.1
  // has one as well (its size-3 class of order-7 elements: the exponent sums
  // {1,2,4} + {3,5,6} cover Z7, so K K^{-1} = 1 u K u K^{-1} there too).
  std::set<std::string> self_paired = names_with(SearchCondition::one_k_kinv_nonreal);
  CHECK(self_paired.count("Ex5.6") == 1);
  CHECK(self_paired.count("Ex5.7") == 1);
  CHECK(self_paired.count("Ex5.1") == 1);
  for (const SearchHit& hit : search_condition(entries, SearchCondition::one_k_kinv_nonreal))
    for (const auto& [k, rep] : hit.report->self_paired_reports)
      CHECK(rep.all_ok);

  std::set<std::string> ddinv = names_with(SearchCondition::one_d_dinv);
  CHECK(ddinv.count("Ex5.1") == 1);

  // Hits carry the full report and are ordered by catalog position, then
  // class index.
  std::vector<SearchHit> hits = search_condition(entries, SearchCondition::one_d);
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i - 1].entry == hits[i].entry) CHECK(hits[i - 1].class_index < hits[i].class_index);
  }
  for (const SearchHit& hit : hits) {
    REQUIRE(hit.report != nullptr);
    CHECK(hit.report->group == hit.entry);
  }

  // Order filter.
  CHECK(search_condition(entries, SearchCondition::one_d, 100).size() <
        search_condition(entries, SearchCondition::one_d).size());

  // No hits in an abelian control group.
  CatalogEntry z6;
  z6.name = "C6";
  z6.construction.spec = CyclicSpec{6, "g"};
  CHECK(search_condition({z6}, SearchCondition::one_d).empty());
}

TEST_CASE("search hits are invariant under catalog permutation") {
  std::vector<CatalogEntry> entries = builtin_examples();
  std::vector<CatalogEntry> reversed(entries.rbegin(), entries.rend());
  auto key_set = [](const std::vector<SearchHit>& hits) {
    std::set<std::pair<std::string, int>> keys;
    for (const SearchHit& h : hits) keys.insert({h.entry, h.class_index});
    return keys;
  };
  CHECK(key_set(search_condition(entries, SearchCondition::eta_le_3)) ==
        key_set(search_condition(reversed, SearchCondition::eta_le_3)));
}

TEST_CASE("catalog files load and validate") {
  TempFile good("catalog_good.json", R"json([
    {"name": "A5", "kind": "perm_gens", "gens": ["(1 2 3 4 5)", "(1 2 3)"]},
    {"name": "C6", "kind": "cyclic", "n": 6},
    {"name": "F21", "kind": "semidirect", "base": [["a", 7]],
     "steps": [{"gen": "b", "order": 3, "action": {"a": "a^2"}}],
     "expected": {"order": 21, "class_sizes": [1, 3, 3, 7, 7]}},
    {"name": "V4xC10", "kind": "direct",
     "factors": [{"kind": "cyclic", "n": 10}, {"kind": "perm_gens", "gens": ["(1 2)(3 4)", "(1 3)(2 4)"]}]}
  ])json");
  std::vector<CatalogEntry> entries = load_catalog(good.path);
  REQUIRE(entries.size() == 4);
  CHECK(build_group(entries[0].construction).order() == 60);
  CHECK(build_group(entries[2].construction).order() == 21);
  CHECK(build_group(entries[3].construction).order() == 40);
  AnalysisReport report = run_analyze(entries[2]);
  CHECK(report.golden_ok);

  TempFile empty("catalog_empty.json", "[]");
  CHECK(load_catalog(empty.path).empty());

  TempFile dup("catalog_dup.json",
               R"json([{"name":"X","kind":"cyclic","n":3},{"name":"X","kind":"cyclic","n":5}])json");
  try {
    load_catalog(dup.path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::duplicate_name);
  }

  TempFile broken("catalog_broken.json", "[{\"name\": \"X\",");
  try {
    load_catalog(broken.path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::parse_error);
  }

  TempFile bad_kind("catalog_bad_kind.json", R"json([{"name":"X","kind":"matrix","q":3}])json");
  try {
    load_catalog(bad_kind.path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::construction_invalid);
  }

  TempFile bad_cycle("catalog_bad_cycle.json",
                     R"json([{"name":"X","kind":"perm_gens","gens":["(1 2"]}])json");
  try {
    load_catalog(bad_cycle.path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::construction_invalid);
  }

  CHECK_THROWS_AS(load_catalog("does_not_exist.json"), Error);
}

TEST_CASE("golden mismatches are reported") {
  TempFile wrong("catalog_wrong_golden.json",
                 R"json([{"name":"C6","kind":"cyclic","n":6,"expected":{"order":7}}])json");
  std::vector<CatalogEntry> entries = load_catalog(wrong.path);
  AnalysisReport report = run_analyze(entries[0]);
  CHECK(!report.golden_ok);
  REQUIRE(!report.golden_notes.empty());
}

TEST_CASE("construction errors carry the entry name") {
  CatalogEntry entry;
  entry.name = "TooBig";
  entry.construction.spec = CyclicSpec{50000, "g"};
  try {
    run_analyze(entry);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_cap_exceeded);
    CHECK(std::string(e.what()).find("TooBig") != std::string::npos);
  }
}

TEST_CASE("report JSON is stable and exact") {
  std::vector<CatalogEntry> entries = builtin_examples();
  AnalysisOptions options;
  options.with_character_table = true;
  AnalysisReport report = run_analyze(builtin(entries, "Ex5.1"), options);
  nlohmann::ordered_json doc = to_json(report);
  CHECK(doc["group"] == "Ex5.1");
  CHECK(doc["order"] == 21);
  CHECK(doc["classes"].size() == 5);
  CHECK(doc["classes"][0]["size"] == 1);
  CHECK(doc["character_table"]["degrees"].size() == 5);
  CHECK(doc["golden_ok"] == true);
  std::string rendered = to_json(report).dump();
  CHECK(rendered == to_json(run_analyze(builtin(entries, "Ex5.1"), options)).dump());

  std::string text = render_text(report);
  CHECK(text.find("group Ex5.1") != std::string::npos);
  CHECK(text.find("OneDDinv") != std::string::npos);
}

TEST_CASE("full verification suite passes without the simple catalog") {
  // The simple five are exercised in the acceptance suite; keep the unit run
  // quick by sweeping the builtins and standard groups only.
  std::vector<VerifyCheck> checks = run_full_verification(false);
  CHECK(!checks.empty());
  for (const VerifyCheck& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}
