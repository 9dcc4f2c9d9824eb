#ifndef CLASSLAB_GROUP_HPP
#define CLASSLAB_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "classlab/error.hpp"
#include "classlab/numeric.hpp"
#include "classlab/permutation.hpp"

namespace classlab {

inline constexpr int kDefaultOrderCap = 5000;

/// A fully enumerated finite group: dense multiplication and inverse tables
/// over element indices 0..n-1, with element 0 the identity. Immutable after
/// construction and safe to share across threads.
class GroupTable {
 public:
  GroupTable(int order, std::vector<int> mul_table, std::vector<std::string> labels = {})
      : order_(order), mul_(std::move(mul_table)), labels_(std::move(labels)) {
    require(order_ >= 1, errc::construction_invalid, "group order must be positive");
    require(mul_.size() == static_cast<std::size_t>(order_) * order_, errc::construction_invalid,
            "multiplication table has wrong size");
    require(labels_.empty() || labels_.size() == static_cast<std::size_t>(order_),
            errc::construction_invalid, "label table has wrong size");
    inv_.assign(order_, -1);
    for (int i = 0; i < order_; ++i) {
      for (int j = 0; j < order_; ++j) {
        if (mul(i, j) == 0) {
          require(mul(j, i) == 0, errc::construction_invalid, "inverse is not two-sided");
          inv_[i] = j;
        }
      }
      require(inv_[i] >= 0, errc::construction_invalid, "element without inverse");
    }
    validate();
  }

  int order() const { return order_; }

  int mul(int i, int j) const { return mul_[static_cast<std::size_t>(i) * order_ + j]; }

  int inv(int i) const { return inv_[i]; }

  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^{-1} x g

  int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int power(int g, long long e) const {
    int r = 0;
    if (e < 0) {
      g = inv(g);
      e = -e;
    }
    for (long long i = 0; i < e; ++i) r = mul(r, g);
    return r;
  }

  long long element_order(int g) const {
    require(g >= 0 && g < order_, errc::index_out_of_range, "element index out of range");
    long long k = 1;
    int x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (int i = 1; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

  bool has_labels() const { return !labels_.empty(); }

  std::string label(int i) const {
    if (labels_.empty()) return "g" + std::to_string(i);
    return labels_[i];
  }

  /// Identity row/column, two-sided inverses and sampled associativity.
  /// Exhaustive associativity below order 200, 1000 fixed-seed triples above.
  void validate() const {
    for (int i = 0; i < order_; ++i) {
      require(mul(0, i) == i && mul(i, 0) == i, errc::construction_invalid,
              "identity row/column broken");
      require(mul(i, inv_[i]) == 0 && mul(inv_[i], i) == 0, errc::construction_invalid,
              "inverse table broken");
    }
    auto check_triple = [&](int a, int b, int c) {
      require(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::construction_invalid,
              "associativity violated");
    };
    if (order_ < 200) {
      for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
          for (int c = 0; c < order_; ++c) check_triple(a, b, c);
    } else {
      SplitMix64 rng(0x5eedULL);
      for (int t = 0; t < 1000; ++t) {
        int a = static_cast<int>(rng.below(order_));
        int b = static_cast<int>(rng.below(order_));
        int c = static_cast<int>(rng.below(order_));
        check_triple(a, b, c);
      }
    }
  }

 private:
  int order_ = 1;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// Sorted set of element indices; `closed` is set once the set has been
/// verified multiplication-closed.
struct ElementSet {
  std::vector<int> elems;
  bool closed = false;

  static ElementSet of(std::vector<int> elements, bool closed_flag = false) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return ElementSet{std::move(elements), closed_flag};
  }

  long long size() const { return static_cast<long long>(elems.size()); }

  bool contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }

  bool is_trivial() const { return elems.size() == 1 && elems[0] == 0; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.elems == b.elems; }
};

inline ElementSet whole_group(const GroupTable& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return ElementSet{std::move(all), true};
}

inline void require_valid_indices(const GroupTable& g, const std::vector<int>& elems) {
  for (int x : elems)
    require(x >= 0 && x < g.order(), errc::index_out_of_range, "element index out of range");
}

/// Smallest multiplication-closed subset containing S (and the identity).
inline ElementSet subgroup_closure(const GroupTable& g, const ElementSet& seed) {
  require(!seed.elems.empty(), errc::index_out_of_range, "closure of an empty set");
  require_valid_indices(g, seed.elems);
  std::vector<char> in(g.order(), 0);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(0);
  for (int s : seed.elems) add(s);
  // Monoid closure under right multiplication by the seed equals the
  // generated subgroup in a finite group.
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : seed.elems) add(g.mul(list[i], s));
  return ElementSet::of(std::move(list), true);
}

/// Smallest closed set containing every conjugate of S; the result is a
/// normal subgroup of G.
inline ElementSet normal_closure(const GroupTable& g, const ElementSet& seed) {
  require(!seed.elems.empty(), errc::index_out_of_range, "closure of an empty set");
  require_valid_indices(g, seed.elems);
  std::vector<char> in(g.order(), 0);
  std::vector<int> gens;
  for (int s : seed.elems) {
    for (int c = 0; c < g.order(); ++c) {
      int y = g.conj(s, c);
      if (!in[y]) {
        in[y] = 1;
        gens.push_back(y);
      }
    }
  }
  return subgroup_closure(g, ElementSet::of(std::move(gens)));
}

inline bool set_is_closed(const GroupTable& g, const ElementSet& h) {
  for (int a : h.elems)
    for (int b : h.elems)
      if (!h.contains(g.mul(a, b))) return false;
  return true;
}

inline bool set_is_normal(const GroupTable& g, const ElementSet& h) {
  for (int x : h.elems)
    for (int c = 0; c < g.order(); ++c)
      if (!h.contains(g.conj(x, c))) return false;
  return true;
}

inline bool subset_is_abelian(const GroupTable& g, const ElementSet& h) {
  for (std::size_t i = 0; i < h.elems.size(); ++i)
    for (std::size_t j = i + 1; j < h.elems.size(); ++j)
      if (g.mul(h.elems[i], h.elems[j]) != g.mul(h.elems[j], h.elems[i])) return false;
  return true;
}

/// Elementwise product {ab : a in A, b in B}.
inline ElementSet set_product(const GroupTable& g, const ElementSet& a, const ElementSet& b) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out;
  for (int x : a.elems)
    for (int y : b.elems) {
      int p = g.mul(x, y);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  return ElementSet::of(std::move(out));
}

/// [x, G] as a subgroup: closure of { x^{-1} x^g : g in G }.
inline ElementSet commutator_span(const GroupTable& g, int x) {
  require(x >= 0 && x < g.order(), errc::index_out_of_range, "element index out of range");
  std::vector<char> in(g.order(), 0);
  std::vector<int> gens;
  for (int c = 0; c < g.order(); ++c) {
    int y = g.mul(g.inv(x), g.conj(x, c));
    if (!in[y]) {
      in[y] = 1;
      gens.push_back(y);
    }
  }
  return subgroup_closure(g, ElementSet::of(std::move(gens)));
}

struct DerivedSeries {
  std::vector<ElementSet> series;              // H, H', H'', ... until stabilization
  std::optional<int> derived_length;           // nullopt = stabilized above trivial
};

inline ElementSet derived_subgroup(const GroupTable& g, const ElementSet& h) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> gens;
  for (int a : h.elems)
    for (int b : h.elems) {
      int c = g.commutator(a, b);
      if (!in[c]) {
        in[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(g, ElementSet::of(std::move(gens)));
}

inline DerivedSeries derived_series(const GroupTable& g, const ElementSet& h) {
  require(h.closed, errc::not_closed, "derived series needs a closed subgroup");
  DerivedSeries result;
  result.series.push_back(h);
  while (true) {
    const ElementSet& current = result.series.back();
    ElementSet next = derived_subgroup(g, current);
    if (next == current) break;
    result.series.push_back(std::move(next));
    if (result.series.back().is_trivial()) break;
  }
  if (result.series.back().is_trivial())
    result.derived_length = static_cast<int>(result.series.size()) - 1;
  return result;
}

inline bool is_solvable(const GroupTable& g, const ElementSet& h) {
  return derived_series(g, h).derived_length.has_value();
}

inline std::vector<std::pair<long long, int>> factorize_ll(long long n) {
  std::vector<std::pair<long long, int>> factors;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

/// Invariant factor decomposition d1 | d2 | ... of an abelian subgroup,
/// recovered from element-order statistics per prime; nullopt when H is not
/// abelian.
inline std::optional<std::vector<long long>> abelian_invariants(const GroupTable& g,
                                                                const ElementSet& h) {
  require(h.closed, errc::not_closed, "abelian invariants need a closed subgroup");
  if (!subset_is_abelian(g, h)) return std::nullopt;
  if (h.size() == 1) return std::vector<long long>{};

  std::vector<long long> orders;
  orders.reserve(h.elems.size());
  for (int x : h.elems) orders.push_back(g.element_order(x));

  // For each prime, read off the type partition from the counts
  // N_k = #{h : order(h) | p^k}: the number of cyclic factors with exponent
  // >= k is log_p(N_k / N_{k-1}).
  std::vector<std::vector<long long>> primary_parts;  // per prime, descending factor list
  for (auto [p, mult] : factorize_ll(h.size())) {
    (void)mult;
    std::vector<int> layer_counts;  // f_k for k = 1..
    long long prev = 1;
    for (int k = 1;; ++k) {
      long long pk = ipow_ll(p, k);
      long long count = 0;
      for (long long o : orders)
        if (pk % o == 0) ++count;
      if (count == prev) break;
      require(count % prev == 0, errc::construction_invalid, "order statistics inconsistent");
      long long ratio = count / prev;
      int f = 0;
      while (ratio % p == 0) {
        ratio /= p;
        ++f;
      }
      require(ratio == 1, errc::construction_invalid, "order statistics inconsistent");
      layer_counts.push_back(f);
      prev = count;
    }
    // Conjugate partition: lambda_i = #{k : f_k >= i}.
    std::vector<long long> factors;
    if (!layer_counts.empty()) {
      for (int i = 1; i <= layer_counts[0]; ++i) {
        int lambda = 0;
        for (int f : layer_counts)
          if (f >= i) ++lambda;
        factors.push_back(ipow_ll(p, lambda));
      }
    }
    primary_parts.push_back(std::move(factors));  // already descending
  }

  std::size_t count = 0;
  for (const auto& part : primary_parts) count = std::max(count, part.size());
  std::vector<long long> invariants(count, 1);
  for (const auto& part : primary_parts)
    for (std::size_t i = 0; i < part.size(); ++i) invariants[i] *= part[i];
  std::reverse(invariants.begin(), invariants.end());  // ascending, d1 | d2 | ...
  return invariants;
}

struct ElementaryAbelianVerdict {
  bool value = false;
  long long p = 0;
  int n = 0;
};

inline ElementaryAbelianVerdict is_elementary_abelian(const GroupTable& g, const ElementSet& h) {
  require(h.closed, errc::not_closed, "elementary abelian test needs a closed subgroup");
  if (h.size() == 1) return {false, 0, 0};
  if (!subset_is_abelian(g, h)) return {false, 0, 0};
  long long p = 0;
  for (int x : h.elems) {
    if (x == 0) continue;
    long long o = g.element_order(x);
    if (p == 0) {
      if (!is_prime_ll(o)) return {false, 0, 0};
      p = o;
    } else if (o != p) {
      return {false, 0, 0};
    }
  }
  int n = 0;
  long long size = h.size();
  while (size > 1) {
    if (size % p != 0) return {false, 0, 0};
    size /= p;
    ++n;
  }
  return {true, p, n};
}

inline bool subset_is_cyclic(const GroupTable& g, const ElementSet& h) {
  for (int x : h.elems)
    if (g.element_order(x) == h.size()) return true;
  return false;
}

inline long long count_elements_of_order(const GroupTable& g, const ElementSet& h, long long k) {
  long long count = 0;
  for (int x : h.elems)
    if (g.element_order(x) == k) ++count;
  return count;
}

/// Order-8 group with a unique involution and no element of order 8; among
/// the order-8 groups this pins the quaternion group exactly.
inline bool is_quaternion8(const GroupTable& g, const ElementSet& h) {
  require(h.closed, errc::not_closed, "recognizer needs a closed subgroup");
  return h.size() == 8 && count_elements_of_order(g, h, 2) == 1 &&
         count_elements_of_order(g, h, 8) == 0;
}

inline long long group_exponent(const GroupTable& g) {
  long long e = 1;
  for (int i = 0; i < g.order(); ++i) e = lcm_ll(e, g.element_order(i));
  return e;
}

/// Group on the cosets of a verified-normal subgroup N; coset indices follow
/// ascending smallest-member order so the identity coset is element 0.
inline GroupTable quotient_group(const GroupTable& g, const ElementSet& n) {
  require(n.closed, errc::not_closed, "quotient needs a closed subgroup");
  require(set_is_closed(g, n), errc::not_closed, "subgroup set is not actually closed");
  require(set_is_normal(g, n), errc::not_normal, "subgroup is not normal");

  std::vector<int> coset_key(g.order(), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (coset_key[x] >= 0) continue;
    int key = g.order();
    std::vector<int> members;
    members.reserve(n.elems.size());
    for (int h : n.elems) {
      int y = g.mul(x, h);
      members.push_back(y);
      key = std::min(key, y);
    }
    for (int y : members) coset_key[y] = key;
  }

  std::vector<int> keys;
  for (int x = 0; x < g.order(); ++x)
    if (coset_key[x] == x) keys.push_back(x);
  std::sort(keys.begin(), keys.end());
  std::unordered_map<int, int> index_of;
  for (std::size_t i = 0; i < keys.size(); ++i) index_of[keys[i]] = static_cast<int>(i);

  int q = static_cast<int>(keys.size());
  std::vector<int> mul(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      mul[static_cast<std::size_t>(i) * q + j] = index_of[coset_key[g.mul(keys[i], keys[j])]];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(keys.size());
    for (int k : keys) labels.push_back(g.label(k));
  }
  return GroupTable(q, std::move(mul), std::move(labels));
}

struct SubgroupTable {
  GroupTable table;
  std::vector<int> parent_of;  // subgroup index -> parent index
};

/// Re-indexes a closed subgroup as a standalone GroupTable (identity first,
/// then ascending parent index).
inline SubgroupTable subgroup_as_group(const GroupTable& g, const ElementSet& h) {
  require(h.closed, errc::not_closed, "subgroup table needs a closed subgroup");
  require(set_is_closed(g, h), errc::not_closed, "subgroup set is not actually closed");
  std::unordered_map<int, int> index_of;
  for (std::size_t i = 0; i < h.elems.size(); ++i) index_of[h.elems[i]] = static_cast<int>(i);
  int m = static_cast<int>(h.elems.size());
  std::vector<int> mul(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      mul[static_cast<std::size_t>(i) * m + j] = index_of[g.mul(h.elems[i], h.elems[j])];
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(h.elems.size());
    for (int x : h.elems) labels.push_back(g.label(x));
  }
  return SubgroupTable{GroupTable(m, std::move(mul), std::move(labels)), h.elems};
}

/// No proper nontrivial normal subgroup, tested by normal closures of class
/// representatives. The default reports non-abelian simplicity; the inclusive
/// flag admits prime cyclic groups.
inline bool is_simple(const GroupTable& g, bool inclusive = false) {
  require(g.order() > 1, errc::trivial_group, "simplicity of the trivial group");
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  for (int x = 1; x < g.order(); ++x) {
    if (seen[x]) continue;
    for (int c = 0; c < g.order(); ++c) seen[g.conj(x, c)] = 1;
    ElementSet closure = normal_closure(g, ElementSet::of({x}));
    if (closure.size() < g.order()) return false;
  }
  return inclusive ? true : !g.is_abelian();
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline std::string combine_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

}  // namespace detail

/// Enumerates the closure of the generators breadth-first from the identity;
/// newly discovered elements of each level are appended in lexicographic
/// image order, so element numbering is reproducible run to run.
inline GroupTable from_permutation_generators(const std::vector<Permutation>& gens,
                                              int cap = kDefaultOrderCap) {
  require(!gens.empty(), errc::empty_generators, "no generators given");
  int degree = gens[0].degree();
  for (const auto& g : gens)
    require(g.degree() == degree, errc::degree_mismatch, "generators of mixed degree");

  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::unordered_map<std::vector<int>, int, detail::VecHash> index_of;
  index_of[elems[0].images()] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::set<Permutation> discovered;
    for (int idx : frontier)
      for (const auto& g : gens) {
        Permutation q = elems[idx] * g;
        if (!index_of.count(q.images())) discovered.insert(std::move(q));
      }
    frontier.clear();
    for (const auto& q : discovered) {
      require(static_cast<int>(elems.size()) < cap, errc::order_cap_exceeded,
              "closure exceeds order cap " + std::to_string(cap));
      index_of[q.images()] = static_cast<int>(elems.size());
      frontier.push_back(static_cast<int>(elems.size()));
      elems.push_back(q);
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i) * n + j] = index_of.at((elems[i] * elems[j]).images());
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(to_cycle_string(p));
  return GroupTable(n, std::move(mul), std::move(labels));
}

inline GroupTable construct_cyclic(int n, int cap = kDefaultOrderCap,
                                   const std::string& gen_name = "g") {
  require(n >= 1, errc::construction_invalid, "cyclic group order must be positive");
  require(n <= cap, errc::order_cap_exceeded, "cyclic order exceeds cap");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  std::vector<std::string> labels(n);
  labels[0] = "1";
  for (int i = 1; i < n; ++i)
    labels[i] = i == 1 ? gen_name : gen_name + "^" + std::to_string(i);
  return GroupTable(n, std::move(mul), std::move(labels));
}

inline GroupTable construct_direct_product(const GroupTable& a, const GroupTable& b,
                                           int cap = kDefaultOrderCap) {
  long long order = static_cast<long long>(a.order()) * b.order();
  require(order <= cap, errc::order_cap_exceeded, "direct product exceeds order cap");
  int n = static_cast<int>(order);
  int nb = b.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int a1 = i / nb, b1 = i % nb;
    for (int j = 0; j < n; ++j) {
      int a2 = j / nb, b2 = j % nb;
      mul[static_cast<std::size_t>(i) * n + j] = a.mul(a1, a2) * nb + b.mul(b1, b2);
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = detail::combine_labels(a.label(i / nb), b.label(i % nb));
  return GroupTable(n, std::move(mul), std::move(labels));
}

/// Extends images of generating elements to the automorphism of T they
/// define. Fails with NotAnAutomorphism when the images are inconsistent with
/// T's multiplication, do not cover T, or are not bijective.
inline std::vector<int> extend_generator_images_to_automorphism(const GroupTable& t,
                                                                const std::vector<int>& gens,
                                                                const std::vector<int>& images) {
  require(gens.size() == images.size(), errc::not_an_automorphism,
          "generator/image count mismatch");
  require_valid_indices(t, gens);
  require_valid_indices(t, images);
  std::vector<int> phi(t.order(), -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int x = queue[q];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = t.mul(x, gens[k]);
      int image = t.mul(phi[x], images[k]);
      if (phi[y] < 0) {
        phi[y] = image;
        queue.push_back(y);
      } else {
        require(phi[y] == image, errc::not_an_automorphism,
                "generator images are inconsistent with the group's relations");
      }
    }
  }
  for (int x = 0; x < t.order(); ++x)
    require(phi[x] >= 0, errc::not_an_automorphism, "generators do not generate the group");
  std::vector<char> hit(t.order(), 0);
  for (int x = 0; x < t.order(); ++x) {
    require(!hit[phi[x]], errc::not_an_automorphism, "generator images define a non-bijection");
    hit[phi[x]] = 1;
  }
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b)
      require(phi[t.mul(a, b)] == t.mul(phi[a], phi[b]), errc::not_an_automorphism,
              "extension does not preserve multiplication");
  return phi;
}

/// Semidirect product N x| H. `action` maps generator indices of H to
/// automorphisms of N given as permutations of N's element indices; it is
/// extended to all of H by relation-checked closure. Multiplication follows
/// the fixed convention
///     (n1, h1) (n2, h2) = (n1 * alpha_{h1}(n2), h1 h2),
/// so conjugation of the embedded N by (1, h) applies alpha_h. Exponent-style
/// action notation "c^h = c^k" is realized by alpha_h(c) = c^k.
inline GroupTable construct_semidirect_product(const GroupTable& n_group, const GroupTable& h_group,
                                               const std::map<int, std::vector<int>>& action,
                                               int cap = kDefaultOrderCap) {
  long long order = static_cast<long long>(n_group.order()) * h_group.order();
  require(order <= cap, errc::order_cap_exceeded, "semidirect product exceeds order cap");
  require(!action.empty() || h_group.order() == 1, errc::action_inconsistent_with_relations,
          "no action generators given");

  for (const auto& [h_gen, alpha] : action) {
    require(h_gen >= 0 && h_gen < h_group.order(), errc::index_out_of_range,
            "action generator index out of range");
    require(alpha.size() == static_cast<std::size_t>(n_group.order()), errc::not_an_automorphism,
            "action image has wrong size");
    std::vector<char> hit(n_group.order(), 0);
    for (int img : alpha) {
      require(img >= 0 && img < n_group.order() && !hit[img], errc::not_an_automorphism,
              "action image is not a bijection");
      hit[img] = 1;
    }
    for (int a = 0; a < n_group.order(); ++a)
      for (int b = 0; b < n_group.order(); ++b)
        require(alpha[n_group.mul(a, b)] == n_group.mul(alpha[a], alpha[b]),
                errc::not_an_automorphism, "action image does not preserve multiplication");
  }

  // Extend the action to every element of H, verifying consistency whenever
  // an element is reached along two different generator words.
  std::vector<std::vector<int>> alpha_of(h_group.order());
  std::vector<char> assigned(h_group.order(), 0);
  std::vector<int> identity_map(n_group.order());
  for (int i = 0; i < n_group.order(); ++i) identity_map[i] = i;
  alpha_of[0] = identity_map;
  assigned[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int h = queue[q];
    for (const auto& [h_gen, alpha_gen] : action) {
      int h2 = h_group.mul(h, h_gen);
      std::vector<int> composed(n_group.order());
      for (int x = 0; x < n_group.order(); ++x) composed[x] = alpha_of[h][alpha_gen[x]];
      if (!assigned[h2]) {
        alpha_of[h2] = std::move(composed);
        assigned[h2] = 1;
        queue.push_back(h2);
      } else {
        require(alpha_of[h2] == composed, errc::action_inconsistent_with_relations,
                "action is inconsistent with the relations of the acting group");
      }
    }
  }
  for (int h = 0; h < h_group.order(); ++h)
    require(assigned[h], errc::action_inconsistent_with_relations,
            "action generators do not generate the acting group");

  int total = static_cast<int>(order);
  int nh = h_group.order();
  std::vector<int> mul(static_cast<std::size_t>(total) * total);
  for (int i = 0; i < total; ++i) {
    int n1 = i / nh, h1 = i % nh;
    for (int j = 0; j < total; ++j) {
      int n2 = j / nh, h2 = j % nh;
      mul[static_cast<std::size_t>(i) * total + j] =
          n_group.mul(n1, alpha_of[h1][n2]) * nh + h_group.mul(h1, h2);
    }
  }
  std::vector<std::string> labels(total);
  for (int i = 0; i < total; ++i)
    labels[i] = detail::combine_labels(n_group.label(i / nh), h_group.label(i % nh));
  return GroupTable(total, std::move(mul), std::move(labels));
}

}  // namespace classlab

#endif  // CLASSLAB_GROUP_HPP
