#ifndef CLASSLAB_CHARACTER_TABLE_HPP
#define CLASSLAB_CHARACTER_TABLE_HPP

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "classlab/classes.hpp"
#include "classlab/cyclotomic.hpp"
#include "classlab/error.hpp"
#include "classlab/gf.hpp"
#include "classlab/group.hpp"
#include "classlab/numeric.hpp"

namespace classlab {

inline constexpr int kDefaultCharTableCap = 1024;

/// Exact irreducible character table. Rows are characters sorted by ascending
/// degree (ties broken by descending lexicographic value order, which puts
/// the principal character first); columns follow the class partition.
struct CharacterTable {
  long long group_order = 1;
  int conductor = 1;  // the group exponent
  int num_classes = 1;
  std::vector<long long> class_sizes;
  std::vector<long long> class_orders;  // element order per class
  std::vector<int> inverse_class;
  std::vector<long long> degrees;
  std::vector<std::vector<Cyclotomic>> values;
  // Multiplicities of the o_k-th roots of unity making up values[i][k]
  // (non-negative integers summing to the degree); retained for diagnostics
  // and printing unless the table is too large.
  std::vector<std::vector<std::vector<long long>>> root_multiplicities;

  int rows() const { return static_cast<int>(values.size()); }

  const Cyclotomic& value(int row, int k) const { return values[row][k]; }

  int principal_row() const {
    Cyclotomic one = Cyclotomic::from_integer(1, conductor);
    for (int i = 0; i < rows(); ++i) {
      if (degrees[i] != 1) continue;
      bool all_one = true;
      for (int k = 0; k < num_classes && all_one; ++k) all_one = values[i][k] == one;
      if (all_one) return i;
    }
    fail(errc::eigen_split_failure, "table has no principal character");
  }

  /// Row index of the complex conjugate character; chi(g^{-1}) = conj(chi(g)),
  /// so the conjugate row is matched through the inverse-class permutation.
  int conjugate_row(int row) const {
    for (int j = 0; j < rows(); ++j) {
      bool match = true;
      for (int k = 0; k < num_classes && match; ++k)
        match = values[j][k] == values[row][inverse_class[k]];
      if (match) return j;
    }
    fail(errc::eigen_split_failure, "table is not closed under conjugation");
  }

  /// Root-of-unity combination string for one entry, e.g. "E5+E5^4";
  /// rational entries print plainly.
  std::string value_string(int row, int k) const {
    const Cyclotomic& v = values[row][k];
    if (v.is_rational()) return rat_to_string(v.rational_value());
    if (!root_multiplicities.empty()) {
      const std::vector<long long>& mults = root_multiplicities[row][k];
      long long order = class_orders[k];
      std::string out;
      for (long long t = 0; t < order; ++t) {
        long long m = mults[t];
        if (m == 0) continue;
        std::string term;
        if (t == 0) {
          term = std::to_string(m);
        } else {
          term = "E" + std::to_string(order);
          if (t > 1) term += "^" + std::to_string(t);
          if (m != 1) term = std::to_string(m) + "*" + term;
        }
        out += out.empty() ? term : "+" + term;
      }
      return out.empty() ? "0" : out;
    }
    return v.to_string();
  }
};

namespace detail {

struct DixonRow {
  long long degree;
  std::vector<Cyclotomic> values;
  std::vector<std::vector<long long>> mults;
};

}  // namespace detail

/// Exact character table via class matrices over GF(p): pick the least prime
/// p = 1 (mod exponent) with p > 2*sqrt(|G|), split common eigenspaces one
/// class matrix at a time (ascending class index, eigenvalues in ascending
/// GF(p) order), recover degrees from the orthogonality relation, and lift
/// values through discrete Fourier inversion into root-of-unity
/// multiplicities.
inline CharacterTable dixon_character_table(const GroupTable& g, const ClassPartition& p,
                                            int cap = kDefaultCharTableCap) {
  require(g.order() <= cap, errc::order_cap_exceeded,
          "character table cap exceeded: " + std::to_string(g.order()));
  int r = p.count();
  long long n = g.order();

  std::vector<long long> class_orders(r);
  long long exponent = 1;
  for (int k = 0; k < r; ++k) {
    class_orders[k] = g.element_order(p.representative[k]);
    exponent = lcm_ll(exponent, class_orders[k]);
  }

  long long lower = 0;
  while ((lower + 1) * (lower + 1) <= 4 * n) ++lower;  // lower = floor(2 sqrt n)
  long long prime = least_prime_one_mod(exponent, lower);
  PrimeField f{prime};
  long long root = f.pow(primitive_root(prime), (prime - 1) / exponent);

  // Powers of each class representative, recorded as class indices.
  std::vector<std::vector<int>> power_class(r);
  for (int k = 0; k < r; ++k) {
    power_class[k].resize(class_orders[k]);
    int x = 0;
    for (long long s = 0; s < class_orders[k]; ++s) {
      power_class[k][s] = p.class_of[x];
      x = g.mul(x, p.representative[k]);
    }
  }

  auto class_matrix = [&](int i) {
    FMatrix m(r, FVector(r, 0));
    for (int k = 0; k < r; ++k) {
      int rep = p.representative[k];
      for (int x : p.classes[i]) {
        int j = p.class_of[g.mul(g.inv(x), rep)];
        m[j][k] = f.add(m[j][k], 1);
      }
    }
    return m;
  };

  // Split the common eigenspaces. Bases are kept in reduced echelon form so
  // coordinates in a subspace can be read off the pivot columns.
  std::vector<FMatrix> subspaces;
  std::vector<std::vector<int>> pivot_cols;
  {
    FMatrix full(r, FVector(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    std::vector<int> pivots(r);
    for (int i = 0; i < r; ++i) pivots[i] = i;
    subspaces.push_back(std::move(full));
    pivot_cols.push_back(std::move(pivots));
  }
  for (int i = 1; i < r; ++i) {
    bool all_split = true;
    for (const auto& basis : subspaces)
      if (basis.size() > 1) all_split = false;
    if (all_split) break;

    FMatrix m = class_matrix(i);
    std::vector<FMatrix> next_subspaces;
    std::vector<std::vector<int>> next_pivots;
    for (std::size_t v = 0; v < subspaces.size(); ++v) {
      const FMatrix& basis = subspaces[v];
      std::size_t dim = basis.size();
      if (dim == 1) {
        next_subspaces.push_back(basis);
        next_pivots.push_back(pivot_cols[v]);
        continue;
      }
      // Restriction of m to the subspace, in basis coordinates.
      FMatrix restriction(dim, FVector(dim, 0));
      for (std::size_t t = 0; t < dim; ++t) {
        FVector image = mat_vec(f, m, basis[t]);
        FVector coords(dim);
        for (std::size_t s = 0; s < dim; ++s) coords[s] = image[pivot_cols[v][s]];
        for (std::size_t s = 0; s < dim; ++s) restriction[s][t] = coords[s];
        FVector check(basis[0].size(), 0);
        for (std::size_t s = 0; s < dim; ++s)
          for (std::size_t c = 0; c < check.size(); ++c)
            check[c] = f.add(check[c], f.mul(coords[s], basis[s][c]));
        require(check == image, errc::eigen_split_failure,
                "class matrix does not stabilize a computed subspace");
      }

      FVector poly = char_poly(f, restriction);
      std::size_t split_total = 0;
      for (long long lambda = 0; lambda < prime; ++lambda) {
        if (eval_poly(f, poly, lambda) != 0) continue;
        FMatrix shifted = restriction;
        for (std::size_t d = 0; d < dim; ++d) shifted[d][d] = f.sub(shifted[d][d], lambda);
        FMatrix kernel = kernel_basis(f, std::move(shifted));
        if (kernel.empty()) continue;
        FMatrix ambient;
        for (const FVector& coords : kernel) {
          FVector vec(basis[0].size(), 0);
          for (std::size_t s = 0; s < dim; ++s)
            for (std::size_t c = 0; c < vec.size(); ++c)
              vec[c] = f.add(vec[c], f.mul(coords[s], basis[s][c]));
          ambient.push_back(std::move(vec));
        }
        std::vector<int> pivots = rref(f, ambient);
        require(ambient.size() == kernel.size(), errc::eigen_split_failure,
                "eigenspace lift lost dimensions");
        split_total += ambient.size();
        next_subspaces.push_back(std::move(ambient));
        next_pivots.push_back(std::move(pivots));
      }
      require(split_total == dim, errc::eigen_split_failure,
              "eigenspaces of a class matrix do not fill the subspace");
    }
    subspaces = std::move(next_subspaces);
    pivot_cols = std::move(next_pivots);
  }
  require(static_cast<int>(subspaces.size()) == r, errc::eigen_split_failure,
          "expected one common eigenvector per class");
  for (const auto& basis : subspaces)
    require(basis.size() == 1, errc::eigen_split_failure, "a subspace failed to split");

  long long isqrt_n = 0;
  while ((isqrt_n + 1) * (isqrt_n + 1) <= n) ++isqrt_n;

  std::vector<long long> size_inv(r);
  for (int k = 0; k < r; ++k) size_inv[k] = f.inv(p.size(k) % prime);

  std::vector<detail::DixonRow> rows;
  rows.reserve(r);
  for (const auto& basis : subspaces) {
    FVector omega = basis[0];
    require(omega[0] != 0, errc::eigen_split_failure,
            "eigenvector vanishes on the identity class");
    long long scale = f.inv(omega[0]);
    for (long long& w : omega) w = f.mul(w, scale);

    // Degree from sum_k omega_k omega_{k^-1} / |class k| = |G| / chi(1)^2.
    long long s = 0;
    for (int k = 0; k < r; ++k)
      s = f.add(s, f.mul(f.mul(omega[k], omega[p.inverse_class[k]]), size_inv[k]));
    long long deg_square = f.mul(n % prime, f.inv(s));
    long long degree = 0;
    for (long long t = 1; t <= isqrt_n; ++t)
      if (f.mul(t, t) == deg_square) {
        degree = t;
        break;
      }
    require(degree > 0, errc::eigen_split_failure, "no admissible degree for an eigenvector");

    // Character values mod p, then the DFT lift to exact cyclotomic values.
    FVector chi_mod(r);
    for (int k = 0; k < r; ++k) chi_mod[k] = f.mul(f.mul(degree % prime, omega[k]), size_inv[k]);

    detail::DixonRow row;
    row.degree = degree;
    row.values.reserve(r);
    row.mults.resize(r);
    for (int k = 0; k < r; ++k) {
      long long o = class_orders[k];
      long long zo_inv = f.inv(f.pow(root, exponent / o));
      long long o_inv = f.inv(o % prime);
      std::vector<long long> mults(o);
      long long total = 0;
      Cyclotomic value(static_cast<int>(exponent));
      for (long long t = 0; t < o; ++t) {
        long long acc = 0;
        for (long long u = 0; u < o; ++u)
          acc = f.add(acc, f.mul(chi_mod[power_class[k][u]], f.pow(zo_inv, (t * u) % (prime - 1))));
        long long m = f.mul(acc, o_inv);
        require(m <= degree, errc::eigen_split_failure,
                "root multiplicity exceeds the degree");
        mults[t] = m;
        total += m;
        if (m != 0)
          value += Cyclotomic::root_of_unity(static_cast<int>(exponent), t * (exponent / o))
                       .scaled(make_rat(m));
      }
      require(total == degree, errc::eigen_split_failure,
              "root multiplicities do not sum to the degree");
      row.mults[k] = std::move(mults);
      row.values.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }

  long long degree_square_sum = 0;
  for (const auto& row : rows) degree_square_sum += row.degree * row.degree;
  require(degree_square_sum == n, errc::eigen_split_failure,
          "degrees do not satisfy the order identity");

  std::sort(rows.begin(), rows.end(), [](const detail::DixonRow& a, const detail::DixonRow& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
      int c = Cyclotomic::compare(a.values[k], b.values[k]);
      if (c != 0) return c > 0;  // descending value order within a degree
    }
    return false;
  });

  CharacterTable table;
  table.group_order = n;
  table.conductor = static_cast<int>(exponent);
  table.num_classes = r;
  table.class_sizes.resize(r);
  for (int k = 0; k < r; ++k) table.class_sizes[k] = p.size(k);
  table.class_orders = class_orders;
  table.inverse_class = p.inverse_class;
  long long mult_entries = 0;
  for (long long o : class_orders) mult_entries += o;
  bool retain = static_cast<long long>(r) * mult_entries <= 4000000;
  for (auto& row : rows) {
    table.degrees.push_back(row.degree);
    table.values.push_back(std::move(row.values));
    if (retain) table.root_multiplicities.push_back(std::move(row.mults));
  }
  return table;
}

/// (1/|G|) sum_k |class k| theta(k) conj(phi(k)), exact.
inline Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& theta,
                                const std::vector<Cyclotomic>& phi) {
  require(theta.size() == static_cast<std::size_t>(t.num_classes) && theta.size() == phi.size(),
          errc::length_mismatch, "class function has wrong length");
  Cyclotomic acc(t.conductor);
  for (int k = 0; k < t.num_classes; ++k) {
    if (theta[k].is_zero() || phi[k].is_zero()) continue;
    acc += (theta[k] * phi[k].conj()).scaled(make_rat(t.class_sizes[k]));
  }
  return acc.scaled(make_rat(1, t.group_order));
}

/// Multiplicity of every irreducible in the product of rows i and j.
inline std::vector<std::pair<int, long long>> decompose_product(const CharacterTable& t, int i,
                                                                int j) {
  require(i >= 0 && i < t.rows() && j >= 0 && j < t.rows(), errc::index_out_of_range,
          "row index out of range");
  std::vector<Cyclotomic> product;
  product.reserve(t.num_classes);
  for (int k = 0; k < t.num_classes; ++k) product.push_back(t.values[i][k] * t.values[j][k]);
  std::vector<std::pair<int, long long>> result;
  long long degree_sum = 0;
  for (int row = 0; row < t.rows(); ++row) {
    Cyclotomic m = inner_product(t, product, t.values[row]);
    require(m.is_rational(), errc::non_integer_result, "non-rational product multiplicity");
    Rat value = m.rational_value();
    require(rat_is_integer(value) && value >= 0, errc::non_integer_result,
            "product multiplicity is not a non-negative integer");
    long long mult = integer_to_ll(value.get_num());
    degree_sum += mult * t.degrees[row];
    result.emplace_back(row, mult);
  }
  require(degree_sum == t.degrees[i] * t.degrees[j], errc::non_integer_result,
          "product decomposition does not balance degrees");
  return result;
}

/// Structure constant from the character side:
/// (|C_i||C_j|/|G|) sum_chi chi(c_i) chi(c_j) conj(chi(c_k)) / chi(1).
inline long long structure_constant_via_characters(const CharacterTable& t, int i, int j, int k) {
  require(i >= 0 && i < t.num_classes && j >= 0 && j < t.num_classes && k >= 0 &&
              k < t.num_classes,
          errc::index_out_of_range, "class index out of range");
  Cyclotomic acc(t.conductor);
  for (int row = 0; row < t.rows(); ++row) {
    // conj(chi(c_k)) = chi(c_k^{-1}).
    Cyclotomic term = t.values[row][i] * t.values[row][j] * t.values[row][t.inverse_class[k]];
    acc += term.scaled(make_rat(1, t.degrees[row]));
  }
  require(acc.is_rational(), errc::non_integer_result, "structure constant is not rational");
  Rat value = acc.rational_value() * make_rat(t.class_sizes[i] * t.class_sizes[j], t.group_order);
  require(rat_is_integer(value) && value >= 0, errc::non_integer_result,
          "structure constant is not a non-negative integer");
  return integer_to_ll(value.get_num());
}

/// All structure constants alpha_k for a fixed class pair (i, j); same
/// formula as the per-triple overload, evaluated over integer coordinate
/// vectors so whole-table sweeps stay fast.
inline std::vector<long long> structure_constants_via_characters(const CharacterTable& t, int i,
                                                                 int j) {
  require(i >= 0 && i < t.num_classes && j >= 0 && j < t.num_classes, errc::index_out_of_range,
          "class index out of range");
  const auto& ctx = detail::cyclo_context(t.conductor);
  int phi = ctx.phi;

  // Integer coordinates of every table value; character values are algebraic
  // integers over the power basis, so denominators are always 1.
  auto int_coords = [&](const Cyclotomic& v) {
    std::vector<Integer> out(phi);
    const auto& coeffs = v.coefficients();
    for (int c = 0; c < phi; ++c) {
      require(coeffs[c].get_den() == 1, errc::non_integer_result,
              "table value is not an algebraic integer");
      out[c] = coeffs[c].get_num();
    }
    return out;
  };

  long long deg_lcm = 1;
  for (long long d : t.degrees) deg_lcm = lcm_ll(deg_lcm, d);

  auto mul_into = [&](const std::vector<Integer>& a, const std::vector<Integer>& b,
                      std::vector<Integer>& out) {
    std::vector<Integer> buffer(2 * phi - 1);
    for (int s = 0; s < phi; ++s) {
      if (a[s] == 0) continue;
      for (int u = 0; u < phi; ++u) {
        if (b[u] == 0) continue;
        mpz_addmul(buffer[s + u].get_mpz_t(), a[s].get_mpz_t(), b[u].get_mpz_t());
      }
    }
    for (int c = 0; c < phi; ++c) out[c] = buffer[c];
    for (int m = phi; m < 2 * phi - 1; ++m) {
      if (buffer[m] == 0) continue;
      const auto& row = ctx.power_rows[m];
      for (int c = 0; c < phi; ++c)
        if (row[c] != 0) mpz_addmul(out[c].get_mpz_t(), buffer[m].get_mpz_t(), row[c].get_mpz_t());
    }
  };

  // w_chi = chi(c_i) chi(c_j) * (L / chi(1)).
  std::vector<std::vector<Integer>> weights(t.rows());
  for (int row = 0; row < t.rows(); ++row) {
    std::vector<Integer> prod(phi);
    mul_into(int_coords(t.values[row][i]), int_coords(t.values[row][j]), prod);
    Integer scale = to_integer(deg_lcm / t.degrees[row]);
    for (Integer& c : prod) c *= scale;
    weights[row] = std::move(prod);
  }

  std::vector<long long> result(t.num_classes);
  std::vector<Integer> acc(phi), term(phi);
  for (int k = 0; k < t.num_classes; ++k) {
    for (Integer& c : acc) c = 0;
    for (int row = 0; row < t.rows(); ++row) {
      mul_into(weights[row], int_coords(t.values[row][t.inverse_class[k]]), term);
      for (int c = 0; c < phi; ++c) acc[c] += term[c];
    }
    for (int c = 1; c < phi; ++c)
      require(acc[c] == 0, errc::non_integer_result, "structure constant is not rational");
    Integer numerator = acc[0] * to_integer(t.class_sizes[i] * t.class_sizes[j]);
    Rat value{numerator, to_integer(t.group_order * deg_lcm)};
    value.canonicalize();
    require(rat_is_integer(value) && value >= 0, errc::non_integer_result,
            "structure constant is not a non-negative integer");
    result[k] = integer_to_ll(value.get_num());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Table property checks
// ---------------------------------------------------------------------------

inline bool check_row_orthogonality(const CharacterTable& t) {
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.rows(); ++j) {
      Cyclotomic ip = inner_product(t, t.values[i], t.values[j]);
      if (!(ip == Cyclotomic::from_integer(i == j ? 1 : 0, t.conductor))) return false;
    }
  return true;
}

inline bool check_column_orthogonality(const CharacterTable& t) {
  for (int i = 0; i < t.num_classes; ++i)
    for (int j = 0; j < t.num_classes; ++j) {
      Cyclotomic acc(t.conductor);
      for (int row = 0; row < t.rows(); ++row)
        acc += t.values[row][i] * t.values[row][t.inverse_class[j]];
      long long expected = (i == j) ? t.group_order / t.class_sizes[i] : 0;
      if (!(acc == Cyclotomic::from_integer(expected, t.conductor))) return false;
    }
  return true;
}

inline bool check_degree_sum(const CharacterTable& t) {
  long long sum = 0;
  for (long long d : t.degrees) sum += d * d;
  return sum == t.group_order;
}

inline bool check_conjugate_rows_closed(const CharacterTable& t) {
  for (int i = 0; i < t.rows(); ++i) {
    try {
      t.conjugate_row(i);
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

/// Coprime class-size/degree sweep: gcd(|K|, chi(1)) = 1 forces
/// |chi(g)| in {0, chi(1)} on that class.
inline bool check_coprime_degree_vanishing(const CharacterTable& t) {
  for (int row = 0; row < t.rows(); ++row)
    for (int k = 1; k < t.num_classes; ++k) {
      if (gcd_ll(t.class_sizes[k], t.degrees[row]) != 1) continue;
      const Cyclotomic& v = t.values[row][k];
      Cyclotomic norm = v * t.values[row][t.inverse_class[k]];
      bool ok = v.is_zero() ||
                norm == Cyclotomic::from_integer(t.degrees[row] * t.degrees[row], t.conductor);
      if (!ok) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

inline std::string export_character_table_text(const CharacterTable& t,
                                               const std::string& group_name) {
  std::string out;
  out += "group: " + group_name + "\n";
  out += "order: " + std::to_string(t.group_order) + "\n";
  out += "exponent: " + std::to_string(t.conductor) + "\n";
  out += "classes: " + std::to_string(t.num_classes) + "\n";
  out += "class_sizes:";
  for (long long s : t.class_sizes) out += " " + std::to_string(s);
  out += "\nclass_orders:";
  for (long long o : t.class_orders) out += " " + std::to_string(o);
  out += "\n";
  for (int row = 0; row < t.rows(); ++row) {
    out += "chi_" + std::to_string(row + 1) + ":";
    for (int k = 0; k < t.num_classes; ++k) out += " " + t.value_string(row, k);
    out += "\n";
  }
  return out;
}

inline nlohmann::ordered_json export_character_table_json(const CharacterTable& t,
                                                          const std::string& group_name) {
  nlohmann::ordered_json doc;
  doc["group"] = group_name;
  doc["order"] = t.group_order;
  doc["exponent"] = t.conductor;
  doc["classes"] = t.num_classes;
  doc["class_sizes"] = t.class_sizes;
  doc["class_orders"] = t.class_orders;
  nlohmann::ordered_json chars = nlohmann::ordered_json::array();
  for (int row = 0; row < t.rows(); ++row) {
    nlohmann::ordered_json entry;
    entry["degree"] = t.degrees[row];
    std::vector<std::string> values;
    values.reserve(t.num_classes);
    for (int k = 0; k < t.num_classes; ++k) values.push_back(t.value_string(row, k));
    entry["values"] = values;
    chars.push_back(std::move(entry));
  }
  doc["characters"] = std::move(chars);
  return doc;
}

}  // namespace classlab

#endif  // CLASSLAB_CHARACTER_TABLE_HPP
