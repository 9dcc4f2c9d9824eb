#ifndef CLASSLAB_VERIFY_SUITE_HPP
#define CLASSLAB_VERIFY_SUITE_HPP

#include <string>
#include <utility>
#include <vector>

#include "classlab/catalog.hpp"
#include "classlab/character_table.hpp"
#include "classlab/classes.hpp"
#include "classlab/group.hpp"
#include "classlab/verifiers.hpp"

namespace classlab {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Groups covered by the full property suite: the builtin examples, a few
/// standard small groups, and the fixed simple-group catalog.
inline std::vector<std::pair<std::string, GroupTable>> verification_catalog(
    bool include_simple = true) {
  std::vector<std::pair<std::string, GroupTable>> groups;
  for (const CatalogEntry& entry : builtin_examples())
    groups.emplace_back(entry.name, build_group(entry.construction));
  groups.emplace_back("S3", from_permutation_generators({parse_cycle_notation("(1 2)", 3),
                                                         parse_cycle_notation("(1 2 3)", 3)}));
  groups.emplace_back("S4", from_permutation_generators({parse_cycle_notation("(1 2)", 4),
                                                         parse_cycle_notation("(1 2 3 4)", 4)}));
  groups.emplace_back("D8", from_permutation_generators({parse_cycle_notation("(1 2 3 4)", 4),
                                                         parse_cycle_notation("(1 3)", 4)}));
  groups.emplace_back("Q8",
                      from_permutation_generators({parse_cycle_notation("(1 3 2 4)(5 8 6 7)", 8),
                                                   parse_cycle_notation("(1 5 2 6)(3 7 4 8)", 8)}));
  if (include_simple)
    for (auto& [name, group] : standard_simple_groups()) groups.emplace_back(name, std::move(group));
  return groups;
}

/// Runs every structural property the library asserts, over the verification
/// catalog; one entry per check with a pass flag.
inline std::vector<VerifyCheck> run_full_verification(bool include_simple = true) {
  std::vector<VerifyCheck> checks;
  auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  };

  std::vector<std::pair<std::string, GroupTable>> groups = verification_catalog(include_simple);

  for (const auto& [name, group] : groups) {
    ClassPartition p = conjugacy_classes(group);

    {
      bool ok = true;
      std::string detail;
      try {
        group.validate();
      } catch (const Error& e) {
        ok = false;
        detail = e.what();
      }
      record(name + ": group table laws", ok, detail);
    }
    {
      long long total = 0;
      bool ok = true;
      for (int i = 0; i < p.count(); ++i) {
        total += p.size(i);
        ok = ok && group.order() % p.size(i) == 0 && p.inverse_class[p.inverse_class[i]] == i;
      }
      record(name + ": class partition laws", ok && total == group.order());
    }
    record(name + ": class-sum multiplicity identities", sweep_multiplication_identities(group, p));

    CharacterTable t = dixon_character_table(group, p);
    record(name + ": row orthogonality", check_row_orthogonality(t));
    record(name + ": column orthogonality", check_column_orthogonality(t));
    record(name + ": degree square sum", check_degree_sum(t));
    record(name + ": conjugate rows closed", check_conjugate_rows_closed(t));
    record(name + ": coprime size/degree vanishing", check_coprime_degree_vanishing(t));
    record(name + ": self-product support excluded", check_self_product_support(t));

    {
      std::vector<std::pair<int, int>> discrepancies;
      bool ok = verify_kkinv_character_equivalence(group, p, t, &discrepancies);
      std::string detail;
      if (!ok)
        detail = std::to_string(discrepancies.size()) + " (K, D) pairs disagree";
      record(name + ": class/character criterion equivalence", ok, detail);
    }
    {
      bool ok = true;
      for (int i = 0; i < p.count() && ok; ++i) {
        for (int j = 0; j < p.count() && ok; ++j) {
          ClassProductMultiset m = product_multiset(group, p, i, j);
          ok = structure_constants_via_characters(t, i, j) == m.coeffs;
        }
      }
      record(name + ": structure constants, both routes", ok);
    }
    {
      bool ok = true;
      std::string detail;
      for (int k = 1; k < p.count(); ++k) {
        KKInvPattern pattern = kkinv_pattern(group, p, k);
        if (pattern.tag == KKInvTag::OneD) {
          OneDStructureReport rep = analyze_one_d_structure(group, p, k);
          if (!rep.case_conclusions_ok) {
            ok = false;
            detail = "class " + std::to_string(k);
          }
        } else if (pattern.tag == KKInvTag::OneKKinv) {
          SelfPairedClassReport rep = analyze_self_paired_class(group, p, k);
          if (!rep.all_ok) {
            ok = false;
            detail = "class " + std::to_string(k);
          }
        } else if (pattern.d_equals_k) {
          ElementSet span = subgroup_closure(group, ElementSet::of(p.classes[k]));
          if (!is_elementary_abelian(group, span).value) {
            ok = false;
            detail = "class " + std::to_string(k) + " span not elementary abelian";
          }
        }
      }
      record(name + ": sparse-product structure conclusions", ok, detail);
    }
  }

  if (include_simple) {
    std::vector<std::pair<std::string, const GroupTable*>> simple_view;
    std::vector<std::pair<std::string, GroupTable>> simple = standard_simple_groups();
    for (const auto& [name, group] : simple) simple_view.emplace_back(name, &group);
    for (const auto& [name, group] : simple)
      record(name + ": non-abelian simple", is_simple(group));
    std::vector<ScanHit> hits = scan_kkinv_patterns(simple_view);
    record("simple catalog: no sparse K K^{-1} supports", hits.empty(),
           hits.empty() ? "" : hits[0].group + " class " + std::to_string(hits[0].class_index));
  }

  for (const CatalogEntry& entry : builtin_examples()) {
    AnalysisReport report = run_analyze(entry);
    record(entry.name + ": golden facts", report.golden_ok,
           report.golden_notes.empty() ? "" : report.golden_notes[0]);
  }

  return checks;
}

inline bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const VerifyCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace classlab

#endif  // CLASSLAB_VERIFY_SUITE_HPP
