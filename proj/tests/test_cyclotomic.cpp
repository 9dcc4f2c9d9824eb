#include <doctest.h>

#include <vector>

#include "classlab/cyclotomic.hpp"
#include "classlab/error.hpp"
#include "classlab/numeric.hpp"

using namespace classlab;

namespace {

Cyclotomic zeta(int e, long long k) { return Cyclotomic::root_of_unity(e, k); }

Cyclotomic random_element(int conductor, SplitMix64& rng) {
  Cyclotomic z(conductor);
  int phi = euler_phi(conductor);
  Cyclotomic sum(conductor);
  for (int j = 0; j < phi; ++j) {
    long long num = static_cast<long long>(rng.below(7)) - 3;
    sum += zeta(conductor, j).scaled(make_rat(num));
  }
  return sum;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);  // first conductor with a coefficient outside {-1,0,1}
}

TEST_CASE("basic root-of-unity identities") {
  CHECK(zeta(4, 1) * zeta(4, 1) == Cyclotomic::from_integer(-1, 4));
  CHECK((Cyclotomic::from_integer(1, 3) + zeta(3, 1) + zeta(3, 2)).is_zero());
  Cyclotomic sum7(7);
  for (int k = 0; k < 7; ++k) sum7 += zeta(7, k);
  CHECK(sum7.is_zero());
  CHECK(zeta(5, 5) == Cyclotomic::from_integer(1, 5));
}

TEST_CASE("abs_square of zeta5 + zeta5^4") {
  // (z + z^4)(z^4 + z) = z^2 + 2 z^5 + z^8 = 2 + z^2 + z^3.
  Cyclotomic v = zeta(5, 1) + zeta(5, 4);
  Cyclotomic expected = Cyclotomic::from_integer(2, 5) + zeta(5, 2) + zeta(5, 3);
  CHECK(v.abs_square() == expected);
  CHECK(v.abs_square().conj() == v.abs_square());
}

TEST_CASE("conjugation") {
  SplitMix64 rng(99);
  for (int e : {3, 5, 8, 12, 30}) {
    for (int k = 0; k < e; ++k) CHECK(zeta(e, k).conj() == zeta(e, (e - k) % e));
    Cyclotomic z = random_element(e, rng);
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).conj() == z * z.conj());
  }
}

TEST_CASE("power arithmetic") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int e = 2 + static_cast<int>(rng.below(20));
    long long a = rng.below(2 * e);
    long long b = rng.below(2 * e);
    CHECK(zeta(e, a) * zeta(e, b) == zeta(e, a + b));
  }
}

TEST_CASE("ring laws on random elements") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    Cyclotomic a = random_element(12, rng);
    Cyclotomic b = random_element(12, rng);
    Cyclotomic c = random_element(12, rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("conductor lifting and cross-conductor equality") {
  CHECK(zeta(3, 1) == zeta(6, 2));
  CHECK(zeta(2, 1) == Cyclotomic::from_integer(-1, 1));
  CHECK(Cyclotomic::from_rational(make_rat(1, 2), 3) == Cyclotomic::from_rational(make_rat(1, 2), 4));
  Cyclotomic lifted = zeta(5, 1).lifted_to(30);
  CHECK(lifted.conductor() == 30);
  CHECK(lifted == zeta(30, 6));
  CHECK_THROWS_AS(zeta(5, 1).lifted_to(12), Error);
}

TEST_CASE("rational detection") {
  Cyclotomic z = zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4);
  CHECK(z.is_rational());
  CHECK(z.rational_value() == make_rat(-1));
  CHECK(!zeta(5, 1).is_rational());
  CHECK_THROWS_AS(zeta(5, 1).rational_value(), Error);
}

TEST_CASE("string rendering") {
  CHECK(Cyclotomic(5).to_string() == "0");
  CHECK(Cyclotomic::from_integer(-1, 4).to_string() == "-1");
  CHECK((Cyclotomic::from_integer(2, 5) + zeta(5, 2) + zeta(5, 3)).to_string() == "2+E5^2+E5^3");
  CHECK(zeta(4, 1).scaled(make_rat(1, 2)).to_string() == "1/2*E4");
  CHECK((Cyclotomic::from_integer(1, 3) - zeta(3, 1)).to_string() == "1-E3");
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Cyclotomic(0), Error);
  CHECK_THROWS_AS(Cyclotomic(-3), Error);
}

TEST_CASE("deterministic comparison is a total order on samples") {
  SplitMix64 rng(21);
  std::vector<Cyclotomic> samples;
  for (int i = 0; i < 12; ++i) samples.push_back(random_element(8, rng));
  for (const auto& a : samples) {
    CHECK(Cyclotomic::compare(a, a) == 0);
    for (const auto& b : samples) {
      CHECK(Cyclotomic::compare(a, b) == -Cyclotomic::compare(b, a));
      if (Cyclotomic::compare(a, b) == 0) CHECK(a == b);
    }
  }
}
