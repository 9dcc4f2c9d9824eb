#ifndef CLASSLAB_GF_HPP
#define CLASSLAB_GF_HPP

#include <vector>

#include "classlab/error.hpp"
#include "classlab/numeric.hpp"

namespace classlab {

/// Arithmetic in GF(p) for word-sized p.
struct PrimeField {
  long long p;

  long long add(long long a, long long b) const { return (a + b) % p; }
  long long sub(long long a, long long b) const { return ((a - b) % p + p) % p; }
  long long mul(long long a, long long b) const { return (a * b) % p; }
  long long neg(long long a) const { return (p - a % p) % p; }

  long long pow(long long base, long long exp) const {
    base %= p;
    if (base < 0) base += p;
    long long result = 1;
    while (exp > 0) {
      if (exp & 1) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }

  long long inv(long long a) const {
    a %= p;
    if (a < 0) a += p;
    require(a != 0, errc::construction_invalid, "division by zero in GF(p)");
    return pow(a, p - 2);
  }
};

/// Least prime p with p = 1 (mod modulus) and p > strict_lower.
inline long long least_prime_one_mod(long long modulus, long long strict_lower) {
  for (long long p = modulus + 1;; p += modulus) {
    if (p > strict_lower && is_prime_ll(p)) return p;
  }
}

inline long long primitive_root(long long p) {
  if (p == 2) return 1;
  std::vector<long long> prime_factors;
  long long m = p - 1;
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  PrimeField f{p};
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : prime_factors)
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  fail(errc::construction_invalid, "no primitive root found");
}

using FVector = std::vector<long long>;
using FMatrix = std::vector<FVector>;

inline FVector mat_vec(const PrimeField& f, const FMatrix& m, const FVector& v) {
  FVector out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && v[j] != 0) acc = f.add(acc, f.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

/// In-place reduced row echelon form; returns the pivot column of each row.
inline std::vector<int> rref(const PrimeField& f, FMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    long long scale = f.inv(m[row][col]);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = f.mul(m[row][j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      long long factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(pivots.size());
  return pivots;
}

/// Canonical kernel basis of a square matrix (one vector per free column of
/// the reduced echelon form, in ascending free-column order).
inline FMatrix kernel_basis(const PrimeField& f, FMatrix m) {
  std::size_t n = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(f, m);
  std::vector<int> pivot_of_col(n, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  FMatrix basis;
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    FVector v(n, 0);
    v[col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m[r][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial (monic, ascending coefficients) via Hessenberg
/// reduction and the standard recurrence on leading blocks.
inline FVector char_poly(const PrimeField& f, FMatrix h) {
  std::size_t n = h.size();
  if (n == 0) return {1};
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && h[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      std::swap(h[pivot], h[col + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][pivot], h[i][col + 1]);
    }
    long long inv_pivot = f.inv(h[col + 1][col]);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h[i][col] == 0) continue;
      long long factor = f.mul(h[i][col], inv_pivot);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(factor, h[col + 1][j]));
      for (std::size_t i2 = 0; i2 < n; ++i2)
        h[i2][col + 1] = f.add(h[i2][col + 1], f.mul(factor, h[i2][i]));
    }
  }

  // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i h[m-1-i][m-1] * (prod of the i
  // subdiagonal entries above row m) * p_{m-1-i}.
  std::vector<FVector> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const FVector& prev = polys[m - 1];
    FVector poly(m + 1, 0);
    for (std::size_t t = 0; t < prev.size(); ++t) {
      poly[t + 1] = f.add(poly[t + 1], prev[t]);                            // x * prev
      poly[t] = f.sub(poly[t], f.mul(h[m - 1][m - 1], prev[t]));            // - h_mm * prev
    }
    long long prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = f.mul(prod, h[m - i][m - i - 1]);
      if (prod == 0) break;
      long long coeff = f.mul(h[m - 1 - i][m - 1], prod);
      if (coeff == 0) continue;
      const FVector& lower = polys[m - 1 - i];
      for (std::size_t t = 0; t < lower.size(); ++t)
        poly[t] = f.sub(poly[t], f.mul(coeff, lower[t]));
    }
    polys[m] = std::move(poly);
  }
  return polys[n];
}

inline long long eval_poly(const PrimeField& f, const FVector& poly, long long x) {
  long long acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

}  // namespace classlab

#endif  // CLASSLAB_GF_HPP
