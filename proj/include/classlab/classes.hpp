#ifndef CLASSLAB_CLASSES_HPP
#define CLASSLAB_CLASSES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "classlab/error.hpp"
#include "classlab/group.hpp"

namespace classlab {

/// Conjugacy classes of a GroupTable. Class 0 is {identity}; classes are
/// ordered by ascending size with ties broken by smallest representative
/// index, and each class's element list is sorted.
struct ClassPartition {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;       // element index -> class index
  std::vector<int> inverse_class;  // class index -> class of inverses
  std::vector<int> representative; // first (smallest) element of each class

  int count() const { return static_cast<int>(classes.size()); }

  long long size(int i) const { return static_cast<long long>(classes[i].size()); }
};

inline ClassPartition conjugacy_classes(const GroupTable& g) {
  ClassPartition p;
  p.class_of.assign(g.order(), -1);
  std::vector<std::vector<int>> orbits;
  for (int x = 0; x < g.order(); ++x) {
    if (p.class_of[x] >= 0) continue;
    std::vector<int> orbit;
    for (int c = 0; c < g.order(); ++c) {
      int y = g.conj(x, c);
      if (p.class_of[y] < 0) {
        p.class_of[y] = static_cast<int>(orbits.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<int> order(orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a][0] < orbits[b][0];
  });

  p.classes.resize(orbits.size());
  p.representative.resize(orbits.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    p.classes[i] = std::move(orbits[order[i]]);
    p.representative[i] = p.classes[i][0];
    for (int x : p.classes[i]) p.class_of[x] = static_cast<int>(i);
  }

  p.inverse_class.resize(p.classes.size());
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    p.inverse_class[i] = p.class_of[g.inv(p.representative[i])];
  return p;
}

inline bool is_real(const ClassPartition& p, int i) {
  require(i >= 0 && i < p.count(), errc::index_out_of_range, "class index out of range");
  return p.inverse_class[i] == i;
}

/// Class-indexed multiplicity vector for a product of two class sums; houses
/// the structure constants.
struct ClassProductMultiset {
  std::vector<long long> coeffs;

  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) s.push_back(static_cast<int>(k));
    return s;
  }
};

/// coeffs[k] = number of pairs (a, b) in class_i x class_j with a*b equal to
/// the fixed representative of class k. The per-element landing counts are
/// recounted across each whole class, so class-function well-definedness is
/// checked on every call.
inline ClassProductMultiset product_multiset(const GroupTable& g, const ClassPartition& p, int i,
                                             int j) {
  require(i >= 0 && i < p.count() && j >= 0 && j < p.count(), errc::index_out_of_range,
          "class index out of range");
  std::vector<long long> landings(g.order(), 0);
  for (int a : p.classes[i])
    for (int b : p.classes[j]) ++landings[g.mul(a, b)];
  ClassProductMultiset result;
  result.coeffs.resize(p.count());
  for (int k = 0; k < p.count(); ++k) {
    long long at_rep = landings[p.representative[k]];
    for (int z : p.classes[k])
      require(landings[z] == at_rep, errc::construction_invalid,
              "class product is not a class function");
    result.coeffs[k] = at_rep;
  }
  return result;
}

/// Number of distinct conjugacy classes meeting a G-invariant set.
inline long long eta(const GroupTable& g, const ClassPartition& p, const ElementSet& s) {
  require(!s.elems.empty(), errc::not_invariant_set, "empty set");
  require_valid_indices(g, s.elems);
  std::vector<char> touched(p.count(), 0);
  long long covered = 0;
  for (int x : s.elems) {
    if (!touched[p.class_of[x]]) {
      touched[p.class_of[x]] = 1;
      covered += p.size(p.class_of[x]);
    }
  }
  // Invariant sets are exactly unions of whole classes.
  require(covered == s.size(), errc::not_invariant_set, "set is not closed under conjugation");
  long long count = 0;
  for (char t : touched) count += t;
  return count;
}

inline long long eta(const ClassProductMultiset& m) {
  long long count = 0;
  for (long long c : m.coeffs) count += (c != 0);
  return count;
}

enum class KKInvTag { TrivialOnly, OneD, OneDDinv, OneKKinv, Other };

inline const char* to_string(KKInvTag tag) {
  switch (tag) {
    case KKInvTag::TrivialOnly: return "TrivialOnly";
    case KKInvTag::OneD: return "OneD";
    case KKInvTag::OneDDinv: return "OneDDinv";
    case KKInvTag::OneKKinv: return "OneKKinv";
    case KKInvTag::Other: return "Other";
  }
  return "?";
}

/// Classification of the support of K*K^{-1}:
///   TrivialOnly : {1}
///   OneD        : {1, D} with D real, D not in {K, K^{-1}}
///   OneDDinv    : {1, D, D^{-1}} with D non-real, D not in {K, K^{-1}}
///   OneKKinv    : {1, K, K^{-1}} with K non-real
///   Other       : anything else; d_equals_k marks the real case
///                 K*K^{-1} = 1 u K, reported distinctly.
struct KKInvPattern {
  KKInvTag tag = KKInvTag::Other;
  std::optional<int> d_class;
  long long m = 0;  // multiplicity on D (and on D^{-1}) when the tag names one
  bool d_equals_k = false;
};

inline KKInvPattern kkinv_pattern(const GroupTable& g, const ClassPartition& p, int k) {
  require(k >= 0 && k < p.count(), errc::index_out_of_range, "class index out of range");
  require(k != 0, errc::identity_class, "pattern of the identity class");
  int kinv = p.inverse_class[k];
  ClassProductMultiset prod = product_multiset(g, p, k, kinv);
  require(prod.coeffs[0] == p.size(k), errc::construction_invalid,
          "identity multiplicity in K*K^{-1} must equal |K|");
  std::vector<int> support = prod.support();

  KKInvPattern result;
  if (support.size() == 1) {
    result.tag = KKInvTag::TrivialOnly;
    return result;
  }
  if (support.size() == 2) {
    int d = support[1];
    require(prod.coeffs[d] * p.size(d) == p.size(k) * p.size(kinv) - p.size(k),
            errc::construction_invalid, "multiset does not balance");
    result.d_class = d;
    result.m = prod.coeffs[d];
    if (d == k || d == kinv) {
      // K real with K*K^{-1} = 1 u K; reported distinctly from OneD.
      result.tag = KKInvTag::Other;
      result.d_equals_k = true;
    } else if (p.inverse_class[d] == d) {
      result.tag = KKInvTag::OneD;
    } else {
      result.tag = KKInvTag::Other;  // cannot happen: support is inverse-closed
    }
    return result;
  }
  if (support.size() == 3) {
    int d1 = support[1], d2 = support[2];
    if (p.inverse_class[d1] == d2 && d1 != d2) {
      require(prod.coeffs[d1] == prod.coeffs[d2], errc::construction_invalid,
              "inverse pair must carry equal multiplicity");
      if (d1 == kinv || d1 == k) {
        // Support {1, K, K^{-1}} with K non-real.
        result.tag = KKInvTag::OneKKinv;
        result.d_class = k;
        result.m = prod.coeffs[k];
      } else {
        result.tag = KKInvTag::OneDDinv;
        result.d_class = d1;
        result.m = prod.coeffs[d1];
      }
      return result;
    }
  }
  result.tag = KKInvTag::Other;
  return result;
}

}  // namespace classlab

#endif  // CLASSLAB_CLASSES_HPP
