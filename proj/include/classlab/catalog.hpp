#ifndef CLASSLAB_CATALOG_HPP
#define CLASSLAB_CATALOG_HPP

#include <json.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "classlab/character_table.hpp"
#include "classlab/classes.hpp"
#include "classlab/error.hpp"
#include "classlab/group.hpp"
#include "classlab/permutation.hpp"
#include "classlab/verifiers.hpp"

namespace classlab {

// ---------------------------------------------------------------------------
// Group constructions as data
// ---------------------------------------------------------------------------

struct Construction;

struct CyclicSpec {
  long long n = 1;
  std::string gen_name = "g";
};

struct PermGensSpec {
  std::vector<std::string> gens;
  std::optional<int> degree;
};

struct DirectSpec {
  std::vector<Construction> factors;
};

/// One split extension layer: a new cyclic generator acting on everything
/// built so far, with the action given per named generator as a word
/// (mirroring exponent notation like c^a = c^10).
struct SemidirectStep {
  std::string gen;
  long long order = 1;
  std::vector<std::pair<std::string, std::string>> action;  // generator -> word
};

struct SemidirectSpec {
  std::vector<std::pair<std::string, long long>> base;  // named cyclic factors
  std::vector<SemidirectStep> steps;
};

struct Construction {
  std::variant<CyclicSpec, PermGensSpec, DirectSpec, SemidirectSpec> spec;
};

struct Expected {
  std::optional<long long> order;
  std::optional<std::vector<long long>> class_sizes;
};

struct CatalogEntry {
  std::string name;
  Construction construction;
  std::optional<Expected> expected;
};

namespace detail {

struct WordTerm {
  std::string gen;
  long long exponent = 1;
};

/// Words are products of generator powers: "c^4 d^3", "b", "x y", or "1".
inline std::vector<WordTerm> parse_word(const std::string& word) {
  std::vector<WordTerm> terms;
  std::string token;
  std::istringstream stream(word);
  while (stream >> token) {
    std::size_t start = 0;
    while (start < token.size()) {
      std::size_t end = token.find('*', start);
      std::string atom = token.substr(start, end == std::string::npos ? end : end - start);
      start = end == std::string::npos ? token.size() : end + 1;
      if (atom.empty()) continue;
      if (atom == "1") continue;
      std::size_t caret = atom.find('^');
      WordTerm term;
      if (caret == std::string::npos) {
        term.gen = atom;
      } else {
        term.gen = atom.substr(0, caret);
        std::string exp = atom.substr(caret + 1);
        require(!exp.empty() && exp.find_first_not_of("0123456789") == std::string::npos,
                errc::construction_invalid, "bad exponent in word '" + word + "'");
        term.exponent = std::stoll(exp);
      }
      require(!term.gen.empty(), errc::construction_invalid, "empty generator in '" + word + "'");
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

inline int evaluate_word(const GroupTable& g,
                         const std::vector<std::pair<std::string, int>>& named_gens,
                         const std::string& word) {
  int result = 0;
  for (const WordTerm& term : parse_word(word)) {
    int gen_index = -1;
    for (const auto& [name, index] : named_gens)
      if (name == term.gen) gen_index = index;
    require(gen_index >= 0, errc::construction_invalid,
            "unknown generator '" + term.gen + "' in word '" + word + "'");
    result = g.mul(result, g.power(gen_index, term.exponent));
  }
  return result;
}

}  // namespace detail

inline GroupTable build_group(const Construction& construction, int cap = kDefaultOrderCap) {
  if (const auto* cyclic = std::get_if<CyclicSpec>(&construction.spec)) {
    return construct_cyclic(static_cast<int>(cyclic->n), cap, cyclic->gen_name);
  }
  if (const auto* perm = std::get_if<PermGensSpec>(&construction.spec)) {
    std::vector<Permutation> gens;
    int degree = perm->degree.value_or(0);
    for (const std::string& s : perm->gens)
      degree = std::max(degree, parse_cycle_notation(s).degree());
    for (const std::string& s : perm->gens) gens.push_back(parse_cycle_notation(s, degree));
    return from_permutation_generators(gens, cap);
  }
  if (const auto* direct = std::get_if<DirectSpec>(&construction.spec)) {
    require(!direct->factors.empty(), errc::construction_invalid, "empty direct product");
    GroupTable result = build_group(direct->factors[0], cap);
    for (std::size_t i = 1; i < direct->factors.size(); ++i)
      result = construct_direct_product(result, build_group(direct->factors[i], cap), cap);
    return result;
  }
  const auto& semi = std::get<SemidirectSpec>(construction.spec);
  require(!semi.base.empty(), errc::construction_invalid, "semidirect product without a base");
  std::vector<std::pair<std::string, int>> named_gens;
  GroupTable group = construct_cyclic(static_cast<int>(semi.base[0].second), cap,
                                      semi.base[0].first);
  named_gens.emplace_back(semi.base[0].first, 1);
  for (std::size_t i = 1; i < semi.base.size(); ++i) {
    GroupTable factor =
        construct_cyclic(static_cast<int>(semi.base[i].second), cap, semi.base[i].first);
    int shift = factor.order();
    group = construct_direct_product(group, factor, cap);
    for (auto& [name, index] : named_gens) index *= shift;
    named_gens.emplace_back(semi.base[i].first, 1);
  }
  for (const SemidirectStep& step : semi.steps) {
    std::vector<int> gen_indices, image_indices;
    for (const auto& [name, index] : named_gens) {
      gen_indices.push_back(index);
      bool found = false;
      for (const auto& [gen_name, word] : step.action) {
        if (gen_name != name) continue;
        image_indices.push_back(detail::evaluate_word(group, named_gens, word));
        found = true;
        break;
      }
      require(found, errc::construction_invalid,
              "action of '" + step.gen + "' does not specify an image for '" + name + "'");
    }
    std::vector<int> alpha =
        extend_generator_images_to_automorphism(group, gen_indices, image_indices);
    GroupTable acting = construct_cyclic(static_cast<int>(step.order), cap, step.gen);
    group = construct_semidirect_product(group, acting, {{1, alpha}}, cap);
    int shift = acting.order();
    for (auto& [name, index] : named_gens) index *= shift;
    named_gens.emplace_back(step.gen, 1);
  }
  return group;
}

// ---------------------------------------------------------------------------
// Builtin catalog
// ---------------------------------------------------------------------------

inline std::vector<CatalogEntry> builtin_examples() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.name = "Ex5.1";
    SemidirectSpec spec;
    spec.base = {{"a", 7}};
    spec.steps = {{"b", 3, {{"a", "a^2"}}}};
    e.construction.spec = std::move(spec);
    e.expected = Expected{21, std::vector<long long>{1, 3, 3, 7, 7}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.2";
    SemidirectSpec spec;
    spec.base = {{"c", 11}};
    spec.steps = {{"b", 5, {{"c", "c^4"}}}, {"a", 2, {{"c", "c^10"}, {"b", "b"}}}};
    e.construction.spec = std::move(spec);
    e.expected =
        Expected{110, std::vector<long long>{1, 10, 11, 11, 11, 11, 11, 11, 11, 11, 11}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.3";
    DirectSpec spec;
    Construction z10;
    z10.spec = CyclicSpec{10, "a"};
    Construction a4;
    a4.spec = PermGensSpec{{"(1 2 3)", "(1 2)(3 4)"}, 4};
    spec.factors = {std::move(z10), std::move(a4)};
    e.construction.spec = std::move(spec);
    std::vector<long long> sizes;
    for (int i = 0; i < 10; ++i) sizes.push_back(1);
    for (int i = 0; i < 10; ++i) sizes.push_back(3);
    for (int i = 0; i < 20; ++i) sizes.push_back(4);
    e.expected = Expected{120, std::move(sizes)};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.4";
    SemidirectSpec spec;
    spec.base = {{"c", 5}, {"d", 5}};
    spec.steps = {{"b", 3, {{"c", "c d^3"}, {"d", "c^4 d^3"}}},
                  {"a", 2, {{"c", "c"}, {"d", "c^4 d^4"}, {"b", "b^2"}}}};
    e.construction.spec = std::move(spec);
    e.expected = Expected{150, std::nullopt};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.5";
    // SL(2,3) acting on the eight nonzero vectors of GF(3)^2.
    e.construction.spec = PermGensSpec{{"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"}, 8};
    e.expected = Expected{24, std::vector<long long>{1, 1, 4, 4, 4, 4, 6}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.6";
    SemidirectSpec spec;
    spec.base = {{"x", 11}};
    spec.steps = {{"a", 5, {{"x", "x^4"}}}};
    e.construction.spec = std::move(spec);
    e.expected = Expected{55, std::vector<long long>{1, 5, 5, 11, 11, 11, 11}};
    entries.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "Ex5.7";
    SemidirectSpec spec;
    spec.base = {{"x", 3}, {"y", 3}, {"z", 3}};
    spec.steps = {{"a", 13, {{"x", "y"}, {"y", "z"}, {"z", "x y"}}}};
    e.construction.spec = std::move(spec);
    std::vector<long long> sizes{1, 13, 13};
    for (int i = 0; i < 12; ++i) sizes.push_back(27);
    e.expected = Expected{351, std::move(sizes)};
    entries.push_back(std::move(e));
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Catalog files
// ---------------------------------------------------------------------------

namespace detail {

inline Construction construction_from_json(const nlohmann::json& node,
                                           const std::string& context) {
  require(node.is_object() && node.contains("kind") && node["kind"].is_string(),
          errc::construction_invalid, context + ": construction needs a string 'kind'");
  std::string kind = node["kind"].get<std::string>();
  Construction result;
  if (kind == "cyclic") {
    require(node.contains("n") && node["n"].is_number_integer(), errc::construction_invalid,
            context + ": cyclic construction needs integer 'n'");
    CyclicSpec spec;
    spec.n = node["n"].get<long long>();
    if (node.contains("gen")) spec.gen_name = node["gen"].get<std::string>();
    result.spec = std::move(spec);
  } else if (kind == "perm_gens") {
    require(node.contains("gens") && node["gens"].is_array() && !node["gens"].empty(),
            errc::construction_invalid, context + ": perm_gens needs a non-empty 'gens' array");
    PermGensSpec spec;
    for (const auto& gen : node["gens"]) {
      require(gen.is_string(), errc::construction_invalid,
              context + ": generators are cycle-notation strings");
      std::string text = gen.get<std::string>();
      try {
        parse_cycle_notation(text);  // validate eagerly
      } catch (const Error& e) {
        fail(errc::construction_invalid, context + ": " + e.what());
      }
      spec.gens.push_back(std::move(text));
    }
    if (node.contains("degree")) spec.degree = node["degree"].get<int>();
    result.spec = std::move(spec);
  } else if (kind == "direct") {
    require(node.contains("factors") && node["factors"].is_array() && !node["factors"].empty(),
            errc::construction_invalid, context + ": direct product needs 'factors'");
    DirectSpec spec;
    for (const auto& factor : node["factors"])
      spec.factors.push_back(construction_from_json(factor, context));
    result.spec = std::move(spec);
  } else if (kind == "semidirect") {
    require(node.contains("base") && node["base"].is_array() && !node["base"].empty(),
            errc::construction_invalid,
            context + ": semidirect needs a 'base' array of [name, order] pairs");
    SemidirectSpec spec;
    for (const auto& pair : node["base"]) {
      require(pair.is_array() && pair.size() == 2 && pair[0].is_string() &&
                  pair[1].is_number_integer(),
              errc::construction_invalid, context + ": base entries are [name, order] pairs");
      spec.base.emplace_back(pair[0].get<std::string>(), pair[1].get<long long>());
    }
    if (node.contains("steps")) {
      require(node["steps"].is_array(), errc::construction_invalid,
              context + ": 'steps' must be an array");
      for (const auto& step_node : node["steps"]) {
        require(step_node.is_object() && step_node.contains("gen") &&
                    step_node.contains("order") && step_node.contains("action") &&
                    step_node["action"].is_object(),
                errc::construction_invalid,
                context + ": steps need 'gen', 'order' and an 'action' object");
        SemidirectStep step;
        step.gen = step_node["gen"].get<std::string>();
        step.order = step_node["order"].get<long long>();
        for (const auto& [key, value] : step_node["action"].items()) {
          require(value.is_string(), errc::construction_invalid,
                  context + ": action images are words");
          detail::parse_word(value.get<std::string>());  // validate eagerly
          step.action.emplace_back(key, value.get<std::string>());
        }
        spec.steps.push_back(std::move(step));
      }
    }
    result.spec = std::move(spec);
  } else {
    fail(errc::construction_invalid, context + ": unknown construction kind '" + kind + "'");
  }
  return result;
}

}  // namespace detail

inline std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open catalog file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::parse_error, std::string("catalog ") + path + ": " + e.what());
  }
  require(doc.is_array(), errc::parse_error, "catalog " + path + " must be a JSON array");

  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  for (const auto& node : doc) {
    require(node.is_object() && node.contains("name") && node["name"].is_string(),
            errc::construction_invalid, "catalog entries need a string 'name'");
    CatalogEntry entry;
    entry.name = node["name"].get<std::string>();
    require(names.insert(entry.name).second, errc::duplicate_name,
            "duplicate catalog entry '" + entry.name + "'");
    entry.construction = detail::construction_from_json(node, "entry '" + entry.name + "'");
    if (node.contains("expected")) {
      const auto& exp = node["expected"];
      require(exp.is_object(), errc::construction_invalid,
              "entry '" + entry.name + "': 'expected' must be an object");
      Expected expected;
      if (exp.contains("order")) expected.order = exp["order"].get<long long>();
      if (exp.contains("class_sizes"))
        expected.class_sizes = exp["class_sizes"].get<std::vector<long long>>();
      entry.expected = std::move(expected);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

struct AnalysisOptions {
  bool with_character_table = false;
  int order_cap = kDefaultOrderCap;          // class-algebra analysis cap
  int chartab_cap = kDefaultCharTableCap;    // full analysis cap
};

struct ClassSummary {
  int index = 0;
  long long size = 0;
  long long rep_order = 0;
  bool real = false;
  int inverse_class = 0;
  std::string rep_label;
};

struct PatternEntry {
  int class_index = 0;
  KKInvTag tag = KKInvTag::Other;
  std::optional<int> d_class;
  long long m = 0;
  long long eta_value = 0;
  bool d_equals_k = false;
};

struct CharTableDigest {
  std::vector<long long> degrees;
  int conductor = 1;
};

struct AnalysisReport {
  std::string group;
  long long order = 1;
  std::vector<ClassSummary> classes;
  std::vector<PatternEntry> patterns;  // one per non-identity class
  std::vector<std::pair<int, OneDStructureReport>> one_d_reports;
  std::vector<std::pair<int, SelfPairedClassReport>> self_paired_reports;
  std::optional<CharTableDigest> character_table;
  bool golden_ok = true;
  std::vector<std::string> golden_notes;
};

inline AnalysisReport run_analyze(const CatalogEntry& entry, const AnalysisOptions& options = {}) {
  GroupTable group = [&] {
    try {
      return build_group(entry.construction, options.order_cap);
    } catch (const Error& e) {
      throw Error(e.code(), "entry '" + entry.name + "': " + e.what());
    }
  }();

  AnalysisReport report;
  report.group = entry.name;
  report.order = group.order();
  ClassPartition p = conjugacy_classes(group);

  long long total = 0;
  for (int i = 0; i < p.count(); ++i) {
    ClassSummary summary;
    summary.index = i;
    summary.size = p.size(i);
    summary.rep_order = group.element_order(p.representative[i]);
    summary.real = is_real(p, i);
    summary.inverse_class = p.inverse_class[i];
    summary.rep_label = group.label(p.representative[i]);
    total += summary.size;
    report.classes.push_back(std::move(summary));
  }
  require(total == group.order(), errc::construction_invalid, "class sizes do not sum to |G|");

  for (int k = 1; k < p.count(); ++k) {
    KKInvPattern pattern = kkinv_pattern(group, p, k);
    PatternEntry pe;
    pe.class_index = k;
    pe.tag = pattern.tag;
    pe.d_class = pattern.d_class;
    pe.m = pattern.m;
    pe.eta_value = eta(product_multiset(group, p, k, p.inverse_class[k]));
    pe.d_equals_k = pattern.d_equals_k;
    report.patterns.push_back(std::move(pe));

    if (pattern.tag == KKInvTag::OneD)
      report.one_d_reports.emplace_back(k, analyze_one_d_structure(group, p, k));
    if (pattern.tag == KKInvTag::OneKKinv)
      report.self_paired_reports.emplace_back(k, analyze_self_paired_class(group, p, k));
  }

  if (options.with_character_table) {
    CharacterTable t = dixon_character_table(group, p, options.chartab_cap);
    long long degree_sum = 0;
    for (long long d : t.degrees) degree_sum += d * d;
    require(degree_sum == group.order(), errc::eigen_split_failure,
            "degree sum does not match the group order");
    report.character_table = CharTableDigest{t.degrees, t.conductor};
  }

  if (entry.expected) {
    if (entry.expected->order && *entry.expected->order != group.order()) {
      report.golden_ok = false;
      report.golden_notes.push_back("order: expected " + std::to_string(*entry.expected->order) +
                                    ", computed " + std::to_string(group.order()));
    }
    if (entry.expected->class_sizes) {
      std::vector<long long> sizes;
      for (int i = 0; i < p.count(); ++i) sizes.push_back(p.size(i));
      if (sizes != *entry.expected->class_sizes) {
        report.golden_ok = false;
        report.golden_notes.push_back("class sizes differ from the recorded golden values");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

enum class SearchCondition { one_d, one_d_dinv, one_k_kinv_nonreal, eta_le_3 };

inline std::optional<SearchCondition> parse_search_condition(const std::string& s) {
  if (s == "one_d") return SearchCondition::one_d;
  if (s == "one_d_dinv") return SearchCondition::one_d_dinv;
  if (s == "one_k_kinv_nonreal") return SearchCondition::one_k_kinv_nonreal;
  if (s == "eta_le_3") return SearchCondition::eta_le_3;
  return std::nullopt;
}

struct SearchHit {
  std::string entry;
  int class_index = 0;
  KKInvTag tag = KKInvTag::Other;
  std::shared_ptr<const AnalysisReport> report;
};

inline std::vector<SearchHit> search_condition(const std::vector<CatalogEntry>& entries,
                                               SearchCondition condition,
                                               std::optional<long long> max_order = std::nullopt,
                                               const AnalysisOptions& options = {}) {
  std::vector<SearchHit> hits;
  for (const CatalogEntry& entry : entries) {
    AnalysisReport report = run_analyze(entry, options);
    if (max_order && report.order > *max_order) continue;
    auto shared = std::make_shared<const AnalysisReport>(std::move(report));
    for (const PatternEntry& pe : shared->patterns) {
      bool matches = false;
      switch (condition) {
        case SearchCondition::one_d: matches = pe.tag == KKInvTag::OneD; break;
        case SearchCondition::one_d_dinv: matches = pe.tag == KKInvTag::OneDDinv; break;
        case SearchCondition::one_k_kinv_nonreal: matches = pe.tag == KKInvTag::OneKKinv; break;
        case SearchCondition::eta_le_3: matches = pe.eta_value <= 3; break;
      }
      if (matches) hits.push_back({shared->group, pe.class_index, pe.tag, shared});
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Report rendering
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json doc;
  doc["group"] = r.group;
  doc["order"] = r.order;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ClassSummary& c : r.classes) {
    nlohmann::ordered_json node;
    node["index"] = c.index;
    node["size"] = c.size;
    node["rep_order"] = c.rep_order;
    node["real"] = c.real;
    node["inverse_class"] = c.inverse_class;
    node["rep"] = c.rep_label;
    classes.push_back(std::move(node));
  }
  doc["classes"] = std::move(classes);
  nlohmann::ordered_json patterns = nlohmann::ordered_json::array();
  for (const PatternEntry& pe : r.patterns) {
    nlohmann::ordered_json node;
    node["class"] = pe.class_index;
    node["pattern"] = to_string(pe.tag);
    if (pe.d_class)
      node["d_class"] = *pe.d_class;
    else
      node["d_class"] = nullptr;
    node["m"] = pe.m;
    node["eta"] = pe.eta_value;
    node["d_equals_k"] = pe.d_equals_k;
    patterns.push_back(std::move(node));
  }
  doc["kkinv_patterns"] = std::move(patterns);
  nlohmann::ordered_json one_d = nlohmann::ordered_json::array();
  for (const auto& [k, rep] : r.one_d_reports) {
    nlohmann::ordered_json node = to_json(rep);
    node["class"] = k;
    one_d.push_back(std::move(node));
  }
  doc["one_d_structure"] = std::move(one_d);
  nlohmann::ordered_json self_paired = nlohmann::ordered_json::array();
  for (const auto& [k, rep] : r.self_paired_reports) {
    nlohmann::ordered_json node = to_json(rep);
    node["class"] = k;
    self_paired.push_back(std::move(node));
  }
  doc["self_paired_structure"] = std::move(self_paired);
  if (r.character_table) {
    nlohmann::ordered_json node;
    node["degrees"] = r.character_table->degrees;
    node["conductor"] = r.character_table->conductor;
    doc["character_table"] = std::move(node);
  } else {
    doc["character_table"] = nullptr;
  }
  doc["golden_ok"] = r.golden_ok;
  doc["golden_notes"] = r.golden_notes;
  return doc;
}

inline std::string render_text(const AnalysisReport& r) {
  std::string out;
  out += "group " + r.group + "  order " + std::to_string(r.order) + "  classes " +
         std::to_string(r.classes.size()) + "\n";
  out += "classes (index size rep_order real rep):\n";
  for (const ClassSummary& c : r.classes)
    out += "  " + std::to_string(c.index) + " " + std::to_string(c.size) + " " +
           std::to_string(c.rep_order) + " " + (c.real ? "yes" : "no") + " " + c.rep_label + "\n";
  out += "kkinv patterns (class pattern d m eta):\n";
  for (const PatternEntry& pe : r.patterns) {
    out += "  " + std::to_string(pe.class_index) + " " + to_string(pe.tag) + " " +
           (pe.d_class ? std::to_string(*pe.d_class) : std::string("-")) + " " +
           std::to_string(pe.m) + " " + std::to_string(pe.eta_value);
    if (pe.d_equals_k) out += " (D = K)";
    out += "\n";
  }
  for (const auto& [k, rep] : r.one_d_reports) {
    out += "one_d class " + std::to_string(k) + ": |K|=" + std::to_string(rep.k_size) +
           " |D|=" + std::to_string(rep.d_size) + " case=" + to_string(rep.case_tag) +
           " |<K>|=" + std::to_string(rep.k_span_order) +
           " |<D>|=" + std::to_string(rep.d_span_order) +
           " dl=" + (rep.derived_length ? std::to_string(*rep.derived_length) : std::string("-")) +
           (rep.case_conclusions_ok ? " ok" : " VIOLATION") + "\n";
  }
  for (const auto& [k, rep] : r.self_paired_reports) {
    out += "self_paired class " + std::to_string(k) + ": |K|=" + std::to_string(rep.k_size) +
           " |<K>|=" + std::to_string(rep.span_order) + " p=" + std::to_string(rep.p) +
           " n=" + std::to_string(rep.n) + (rep.all_ok ? " ok" : " VIOLATION") + "\n";
  }
  if (r.character_table) {
    out += "character degrees:";
    for (long long d : r.character_table->degrees) out += " " + std::to_string(d);
    out += "  (conductor " + std::to_string(r.character_table->conductor) + ")\n";
  }
  if (!r.golden_ok) {
    out += "GOLDEN MISMATCH:\n";
    for (const std::string& note : r.golden_notes) out += "  " + note + "\n";
  }
  return out;
}

}  // namespace classlab

#endif  // CLASSLAB_CATALOG_HPP
