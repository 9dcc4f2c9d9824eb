#ifndef CLASSLAB_CYCLOTOMIC_HPP
#define CLASSLAB_CYCLOTOMIC_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "classlab/error.hpp"
#include "classlab/numeric.hpp"

namespace classlab {

namespace detail {

// Exact division of integer polynomials, used to build cyclotomic polynomials
// from x^e - 1 by peeling off the proper divisors' factors.
inline std::vector<Integer> poly_div_exact(const std::vector<Integer>& num,
                                           const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  const Integer& lead = den.back();
  for (int d = static_cast<int>(rem.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
    if (rem[d] == 0) continue;
    Integer q = rem[d] / lead;
    require(q * lead == rem[d], errc::construction_invalid, "polynomial division not exact");
    quot[d - (den.size() - 1)] = q;
    for (std::size_t i = 0; i < den.size(); ++i) rem[d - (den.size() - 1) + i] -= q * den[i];
  }
  for (const Integer& c : rem)
    require(c == 0, errc::construction_invalid, "polynomial division left a remainder");
  return quot;
}

struct CycloContext {
  int conductor = 1;
  int phi = 1;
  std::vector<Integer> min_poly;                 // the conductor's cyclotomic polynomial, monic
  std::vector<std::vector<Integer>> power_rows;  // x^m reduced, m = 0 .. max(e-1, 2*phi-2)
};

inline const CycloContext& cyclo_context(int conductor);

inline std::vector<Integer> cyclotomic_polynomial_impl(int e) {
  std::vector<Integer> poly(e + 1, Integer(0));
  poly[0] = -1;
  poly[e] = 1;  // x^e - 1
  for (int d = 1; d < e; ++d)
    if (e % d == 0) poly = poly_div_exact(poly, cyclo_context(d).min_poly);
  return poly;
}

inline const CycloContext& cyclo_context(int conductor) {
  require(conductor >= 1, errc::zero_conductor, "conductor must be positive");
  // Recursive: building a conductor's context walks its proper divisors.
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<CycloContext>();
  ctx->conductor = conductor;
  ctx->phi = euler_phi(conductor);
  ctx->min_poly = cyclotomic_polynomial_impl(conductor);
  require(static_cast<int>(ctx->min_poly.size()) == ctx->phi + 1, errc::construction_invalid,
          "cyclotomic polynomial has wrong degree");

  int max_power = std::max(conductor - 1, 2 * ctx->phi - 2);
  ctx->power_rows.resize(max_power + 1);
  for (int m = 0; m <= max_power; ++m) {
    std::vector<Integer> row(ctx->phi, Integer(0));
    if (m < ctx->phi) {
      row[m] = 1;
    } else {
      const std::vector<Integer>& prev = ctx->power_rows[m - 1];
      // Multiply by x and reduce: x^phi = -(min_poly minus its leading term).
      Integer lead = prev[ctx->phi - 1];
      for (int j = ctx->phi - 1; j >= 1; --j) row[j] = prev[j - 1];
      row[0] = 0;
      if (lead != 0)
        for (int j = 0; j < ctx->phi; ++j) row[j] -= lead * ctx->min_poly[j];
    }
    ctx->power_rows[m] = std::move(row);
  }

  const CycloContext& ref = *ctx;
  cache[conductor] = std::move(ctx);
  return ref;
}

}  // namespace detail

inline const std::vector<Integer>& cyclotomic_polynomial(int e) {
  return detail::cyclo_context(e).min_poly;
}

/// An element of Q(zeta_e) in canonical form: rational coordinates over the
/// power basis 1, zeta, ..., zeta^(phi(e)-1), reduced modulo the conductor's
/// cyclotomic polynomial. Equality across conductors lifts both operands to
/// the lcm conductor first.
class Cyclotomic {
 public:
  explicit Cyclotomic(int conductor = 1)
      : conductor_(checked(conductor)), coeffs_(detail::cyclo_context(conductor_).phi, Rat(0)) {}

  static Cyclotomic from_rational(const Rat& value, int conductor = 1) {
    Cyclotomic z(conductor);
    z.coeffs_[0] = value;
    return z;
  }

  static Cyclotomic from_integer(long long value, int conductor = 1) {
    return from_rational(make_rat(value), conductor);
  }

  /// zeta_e^k.
  static Cyclotomic root_of_unity(int conductor, long long k) {
    const auto& ctx = detail::cyclo_context(conductor);
    long long reduced = ((k % conductor) + conductor) % conductor;
    Cyclotomic z(conductor);
    for (int j = 0; j < ctx.phi; ++j) z.coeffs_[j] = Rat(ctx.power_rows[reduced][j]);
    return z;
  }

  int conductor() const { return conductor_; }

  const std::vector<Rat>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const Rat& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (coeffs_[j] != 0) return false;
    return true;
  }

  Rat rational_value() const {
    require(is_rational(), errc::non_integer_result, "value is not rational");
    return coeffs_[0];
  }

  Cyclotomic lifted_to(int conductor) const {
    require(conductor % conductor_ == 0, errc::zero_conductor,
            "can only lift to a multiple of the conductor");
    if (conductor == conductor_) return *this;
    const auto& ctx = detail::cyclo_context(conductor);
    int factor = conductor / conductor_;
    Cyclotomic z(conductor);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& row = ctx.power_rows[j * factor];
      for (int t = 0; t < ctx.phi; ++t) z.coeffs_[t] += coeffs_[j] * row[t];
    }
    return z;
  }

  /// Complex conjugation: zeta^j -> zeta^(e-j).
  Cyclotomic conj() const {
    const auto& ctx = detail::cyclo_context(conductor_);
    Cyclotomic z(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      const auto& row = ctx.power_rows[(conductor_ - j) % conductor_];
      for (int t = 0; t < ctx.phi; ++t) z.coeffs_[t] += coeffs_[j] * row[t];
    }
    return z;
  }

  /// z * conj(z); always fixed by conjugation.
  Cyclotomic abs_square() const { return *this * conj(); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] += y.coeffs_[j];
    return x;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) x.coeffs_[j] -= y.coeffs_[j];
    return x;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    const auto& ctx = detail::cyclo_context(x.conductor_);
    int phi = ctx.phi;
    std::vector<Rat> buffer(2 * phi - 1, Rat(0));
    for (int s = 0; s < phi; ++s) {
      if (x.coeffs_[s] == 0) continue;
      for (int t = 0; t < phi; ++t) {
        if (y.coeffs_[t] == 0) continue;
        buffer[s + t] += x.coeffs_[s] * y.coeffs_[t];
      }
    }
    Cyclotomic z(x.conductor_);
    for (int j = 0; j < phi; ++j) z.coeffs_[j] = std::move(buffer[j]);
    for (int m = phi; m < 2 * phi - 1; ++m) {
      if (buffer[m] == 0) continue;
      const auto& row = ctx.power_rows[m];
      for (int j = 0; j < phi; ++j)
        if (row[j] != 0) z.coeffs_[j] += buffer[m] * row[j];
    }
    return z;
  }

  Cyclotomic& operator+=(const Cyclotomic& other) { return *this = *this + other; }
  Cyclotomic& operator-=(const Cyclotomic& other) { return *this = *this - other; }
  Cyclotomic& operator*=(const Cyclotomic& other) { return *this = *this * other; }

  Cyclotomic scaled(const Rat& factor) const {
    Cyclotomic z = *this;
    for (Rat& c : z.coeffs_) c *= factor;
    return z;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    return x.coeffs_ == y.coeffs_;
  }

  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Deterministic total order (lift to common conductor, compare coefficient
  /// sequences); used only to make reports and tables reproducible.
  static int compare(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = to_common(a, b);
    for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
      int c = cmp(x.coeffs_[j], y.coeffs_[j]);
      if (c != 0) return c;
    }
    return 0;
  }

  /// Canonical rendering, e.g. "2+E5^2+E5^3" or "-1/2+3*E7".
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const Rat& c = coeffs_[j];
      if (c == 0) continue;
      bool negative = c < 0;
      Rat abs = negative ? Rat(-c) : c;
      std::string term;
      if (j == 0) {
        term = rat_to_string(abs);
      } else {
        std::string power = "E" + std::to_string(conductor_);
        if (j > 1) power += "^" + std::to_string(j);
        term = (abs == 1) ? power : rat_to_string(abs) + "*" + power;
      }
      if (out.empty())
        out = negative ? "-" + term : term;
      else
        out += (negative ? "-" : "+") + term;
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int checked(int conductor) {
    require(conductor >= 1, errc::zero_conductor, "conductor must be positive");
    return conductor;
  }

  static std::pair<Cyclotomic, Cyclotomic> to_common(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return {a, b};
    int e = static_cast<int>(lcm_ll(a.conductor_, b.conductor_));
    return {a.lifted_to(e), b.lifted_to(e)};
  }

  int conductor_;
  std::vector<Rat> coeffs_;
};

}  // namespace classlab

#endif  // CLASSLAB_CYCLOTOMIC_HPP
