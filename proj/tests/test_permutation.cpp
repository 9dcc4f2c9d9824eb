#include <doctest.h>

#include <vector>

#include "classlab/error.hpp"
#include "classlab/numeric.hpp"
#include "classlab/permutation.hpp"

using namespace classlab;

namespace {

Permutation random_permutation(int degree, SplitMix64& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  for (int i = degree - 1; i > 0; --i)
    std::swap(images[i], images[rng.below(i + 1)]);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("cycle parsing basics") {
  Permutation p = parse_cycle_notation("(1 2 3)(4 5)");
  CHECK(p.degree() == 5);
  CHECK(p.order() == 6);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 0);
  CHECK(p.apply(3) == 4);

  Permutation id4 = parse_cycle_notation("()", 4);
  CHECK(id4.degree() == 4);
  CHECK(id4.is_identity());

  CHECK(parse_cycle_notation("(1,2,3)(4,5)") == p);  // commas tolerated
  CHECK(parse_cycle_notation("  ( 1   2 3)  (4 5 ) ") == p);
}

TEST_CASE("cycle parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_cycle_notation("(1 2"), Error);
  CHECK_THROWS_AS(parse_cycle_notation("1 2)"), Error);
  CHECK_THROWS_AS(parse_cycle_notation("(1 2)(2 3)"), Error);  // repeated point
  CHECK_THROWS_AS(parse_cycle_notation("(1 x)"), Error);
  CHECK_THROWS_AS(parse_cycle_notation("(0 1)"), Error);  // points are 1-based

  try {
    parse_cycle_notation("(1 2", std::nullopt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::malformed_cycle);
  }
  try {
    parse_cycle_notation("(1 5)", 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::point_exceeds_degree);
  }
}

TEST_CASE("cycle notation round-trips") {
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(to_cycle_string(parse_cycle_notation("(1 2 3)(4 5)")) == "(1 2 3)(4 5)");

  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = 1 + static_cast<int>(rng.below(10));
    Permutation p = random_permutation(degree, rng);
    Permutation back = parse_cycle_notation(to_cycle_string(p), degree);
    CHECK(back == p);
  }
}

TEST_CASE("composition and inversion") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation a = random_permutation(8, rng);
    Permutation b = random_permutation(8, rng);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK((a * a.inverse()).is_identity());
  }
  Permutation c = parse_cycle_notation("(1 2 3 4 5)");
  CHECK(c.order() == 5);
  CHECK((c * c * c * c * c).is_identity());
}
