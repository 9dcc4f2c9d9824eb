#include <doctest.h>

#include "classlab/numeric.hpp"

using namespace classlab;

TEST_CASE("rationals normalize and print exactly") {
  CHECK(make_rat(2, 4) == make_rat(1, 2));
  CHECK(rat_to_string(make_rat(1, 2)) == "1/2");
  CHECK(rat_to_string(make_rat(-6, 4)) == "-3/2");
  CHECK(rat_to_string(make_rat(7)) == "7");
  CHECK(rat_is_integer(make_rat(8, 4)));
  CHECK(!rat_is_integer(make_rat(8, 3)));
}

TEST_CASE("small prime test") {
  CHECK(is_prime_ll(2));
  CHECK(is_prime_ll(31));
  CHECK(is_prime_ll(331));
  CHECK(is_prime_ll(12289));
  CHECK(!is_prime_ll(1));
  CHECK(!is_prime_ll(0));
  CHECK(!is_prime_ll(341));  // 11 * 31
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(5) == 4);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(105) == 48);
  CHECK(euler_phi(330) == 80);
}

TEST_CASE("deterministic rng is stable") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 16; ++i) CHECK(a.next() == b.next());
}
