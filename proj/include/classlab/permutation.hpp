#ifndef CLASSLAB_PERMUTATION_HPP
#define CLASSLAB_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "classlab/error.hpp"

namespace classlab {

/// A permutation of {0, ..., degree-1}, stored as its image table.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int img : images_) {
      require(img >= 0 && static_cast<std::size_t>(img) < images_.size() && !seen[img],
              errc::construction_invalid, "image table is not a bijection");
      seen[img] = 1;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  int apply(int point) const { return images_[point]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  /// Function composition: (a*b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
    Permutation r;
    r.images_ = std::move(images);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i]] = static_cast<int>(i);
    Permutation r;
    r.images_ = std::move(images);
    return r;
  }

  long long order() const {
    long long result = 1;
    for (const auto& cycle : cycles(true)) result = std::lcm<long long>(result, cycle.size());
    return result;
  }

  /// Cycle decomposition on 0-based points; fixed points omitted unless
  /// include_fixed is set.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> result;
    std::vector<char> seen(images_.size(), 0);
    for (int start = 0; start < degree(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      int p = start;
      do {
        seen[p] = 1;
        cycle.push_back(p);
        p = images_[p];
      } while (p != start);
      if (cycle.size() > 1 || include_fixed) result.push_back(std::move(cycle));
    }
    return result;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Renders disjoint cycles on 1-based points: "(1 2 3)(4 5)"; identity is "()".
inline std::string to_cycle_string(const Permutation& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& cycle : cycles) {
    s += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(cycle[i] + 1);
    }
    s += ')';
  }
  return s;
}

/// Parses whitespace-tolerant products of disjoint cycles in 1-based points,
/// e.g. "(1 2 3)(4 5)". Commas may separate points. "()" is the identity; its
/// degree is the declared degree (or 0 when none is given).
inline Permutation parse_cycle_notation(const std::string& text,
                                        std::optional<int> degree = std::nullopt) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool in_cycle = false;
  int max_point = 0;
  std::vector<char> used;

  auto use_point = [&](int point1) {
    require(point1 >= 1, errc::malformed_cycle, "points are 1-based in " + text);
    if (static_cast<std::size_t>(point1) > used.size()) used.resize(point1, 0);
    require(!used[point1 - 1], errc::malformed_cycle,
            "repeated point " + std::to_string(point1) + " in " + text);
    used[point1 - 1] = 1;
    max_point = std::max(max_point, point1);
    current.push_back(point1 - 1);
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      require(!in_cycle, errc::malformed_cycle, "nested '(' in " + text);
      in_cycle = true;
      current.clear();
      ++i;
    } else if (c == ')') {
      require(in_cycle, errc::malformed_cycle, "unbalanced ')' in " + text);
      in_cycle = false;
      if (current.size() >= 2) cycles.push_back(current);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      require(in_cycle, errc::malformed_cycle, "point outside cycle in " + text);
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      use_point(value);
    } else {
      fail(errc::malformed_cycle, std::string("unexpected character '") + c + "' in " + text);
    }
  }
  require(!in_cycle, errc::malformed_cycle, "unbalanced '(' in " + text);

  int deg = max_point;
  if (degree) {
    require(max_point <= *degree, errc::point_exceeds_degree,
            "point " + std::to_string(max_point) + " exceeds declared degree " +
                std::to_string(*degree));
    deg = *degree;
  }
  std::vector<int> images(deg);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  return Permutation(std::move(images));
}

}  // namespace classlab

#endif  // CLASSLAB_PERMUTATION_HPP
