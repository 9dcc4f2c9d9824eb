#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "classlab/character_table.hpp"
#include "classlab/classes.hpp"
#include "classlab/error.hpp"
#include "classlab/gf.hpp"
#include "classlab/group.hpp"
#include "test_groups_common.hpp"

using namespace classlab;
using namespace classlab_test;

namespace {

CharacterTable table_of(const GroupTable& g) {
  return dixon_character_table(g, conjugacy_classes(g));
}

// Oracle: characteristic polynomial by cofactor expansion of det(xI - A),
// for cross-checking the Hessenberg routine on small matrices.
FVector brute_char_poly(const PrimeField& f, const FMatrix& a) {
  std::size_t n = a.size();
  // Polynomial matrix entries: poly in x, ascending coefficients.
  std::vector<std::vector<FVector>> m(n, std::vector<FVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = {f.neg(a[i][j]), 1};
      else
        m[i][j] = {f.neg(a[i][j])};
    }
  // Recursive determinant over the polynomial ring.
  struct Det {
    const PrimeField& f;
    FVector mul(const FVector& x, const FVector& y) {
      FVector out(x.size() + y.size() - 1, 0);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
          out[i + j] = f.add(out[i + j], f.mul(x[i], y[j]));
      return out;
    }
    FVector add(FVector x, const FVector& y, bool subtract) {
      if (x.size() < y.size()) x.resize(y.size(), 0);
      for (std::size_t i = 0; i < y.size(); ++i)
        x[i] = subtract ? f.sub(x[i], y[i]) : f.add(x[i], y[i]);
      return x;
    }
    FVector det(const std::vector<std::vector<FVector>>& m) {
      std::size_t n = m.size();
      if (n == 1) return m[0][0];
      FVector acc{0};
      for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<FVector>> minor;
        for (std::size_t i = 1; i < n; ++i) {
          std::vector<FVector> row;
          for (std::size_t j = 0; j < n; ++j)
            if (j != col) row.push_back(m[i][j]);
          minor.push_back(std::move(row));
        }
        acc = add(std::move(acc), mul(m[0][col], det(minor)), col % 2 == 1);
      }
      return acc;
    }
  } solver{f};
  FVector result = solver.det(m);
  result.resize(n + 1, 0);
  return result;
}

}  // namespace

TEST_CASE("finite field plumbing") {
  CHECK(least_prime_one_mod(6, 4) == 7);
  CHECK(least_prime_one_mod(30, 15) == 31);
  CHECK(least_prime_one_mod(330, 51) == 331);
  CHECK(least_prime_one_mod(1, 2) == 3);

  PrimeField f{13};
  long long g = primitive_root(13);
  CHECK(g == 2);
  std::set<long long> powers;
  for (int i = 0; i < 12; ++i) powers.insert(f.pow(g, i));
  CHECK(powers.size() == 12);
  CHECK(f.mul(f.inv(5), 5) == 1);
}

TEST_CASE("characteristic polynomial matches the cofactor oracle") {
  PrimeField f{101};
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng.below(4);
    FMatrix a(n, FVector(n));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long long>(rng.below(101));
    CHECK(char_poly(f, a) == brute_char_poly(f, a));
  }
  // Companion matrix of x^3 + 2x + 5.
  FMatrix companion = {{0, 0, 96}, {1, 0, 99}, {0, 1, 0}};
  CHECK(char_poly(f, companion) == FVector{5, 2, 0, 1});
}

TEST_CASE("kernel basis is canonical") {
  PrimeField f{7};
  FMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 0, 0}};
  FMatrix kernel = kernel_basis(f, m);
  CHECK(kernel.size() == 2);
  for (const auto& v : kernel) {
    FVector image = mat_vec(f, m, v);
    for (long long x : image) CHECK(x == 0);
  }
}

TEST_CASE("character table of the trivial group and Z2") {
  GroupTable z1 = construct_cyclic(1);
  CharacterTable t1 = table_of(z1);
  CHECK(t1.rows() == 1);
  CHECK(t1.degrees == std::vector<long long>{1});

  GroupTable z2 = construct_cyclic(2);
  CharacterTable t2 = table_of(z2);
  CHECK(t2.rows() == 2);
  CHECK(t2.degrees == std::vector<long long>{1, 1});
  Cyclotomic one = Cyclotomic::from_integer(1, t2.conductor);
  Cyclotomic minus_one = Cyclotomic::from_integer(-1, t2.conductor);
  CHECK(t2.values[0][0] == one);
  CHECK(t2.values[0][1] == one);
  CHECK(t2.values[1][0] == one);
  CHECK(t2.values[1][1] == minus_one);
}

TEST_CASE("character table of S3") {
  GroupTable s3 = make_s3();
  CharacterTable t = table_of(s3);
  CHECK(t.conductor == 6);
  REQUIRE(t.degrees == std::vector<long long>{1, 1, 2});
  // Classes are ordered [identity, 3-cycles, transpositions]; the standard
  // character takes 0 on transpositions and -1 on 3-cycles.
  Cyclotomic minus_one = Cyclotomic::from_integer(-1, t.conductor);
  CHECK(t.values[2][1] == minus_one);
  CHECK(t.values[2][2].is_zero());
  CHECK(t.principal_row() == 0);
  // The sign character is row 1: 1 on 3-cycles, -1 on transpositions.
  CHECK(t.values[1][1] == Cyclotomic::from_integer(1, t.conductor));
  CHECK(t.values[1][2] == minus_one);
}

TEST_CASE("character table of A5") {
  GroupTable a5 = make_a5();
  CharacterTable t = table_of(a5);
  REQUIRE(t.degrees == std::vector<long long>{1, 3, 3, 4, 5});
  CHECK(t.conductor == 30);
  CHECK(check_degree_sum(t));

  // Golden-ratio values on the order-5 classes.
  Cyclotomic golden_a = Cyclotomic::from_integer(1, 30) +
                        Cyclotomic::root_of_unity(5, 1).lifted_to(30) +
                        Cyclotomic::root_of_unity(5, 4).lifted_to(30);
  Cyclotomic golden_b = Cyclotomic::from_integer(1, 30) +
                        Cyclotomic::root_of_unity(5, 2).lifted_to(30) +
                        Cyclotomic::root_of_unity(5, 3).lifted_to(30);
  std::vector<int> order5_classes;
  for (int k = 0; k < t.num_classes; ++k)
    if (t.class_orders[k] == 5) order5_classes.push_back(k);
  REQUIRE(order5_classes.size() == 2);
  for (int row : {1, 2}) {
    std::multiset<std::string> seen;
    for (int k : order5_classes) seen.insert(t.values[row][k].to_string());
    std::multiset<std::string> expected{golden_a.to_string(), golden_b.to_string()};
    CHECK(seen == expected);
  }
}

TEST_CASE("orthogonality and structural checks across a small catalog") {
  for (const GroupTable& g :
       {make_s3(), make_s4(), make_d8(), make_q8(), make_f21(), make_g55(), construct_cyclic(12)}) {
    CharacterTable t = table_of(g);
    CHECK(check_row_orthogonality(t));
    CHECK(check_column_orthogonality(t));
    CHECK(check_degree_sum(t));
    CHECK(check_conjugate_rows_closed(t));
    CHECK(check_coprime_degree_vanishing(t));
    CHECK(t.conductor == group_exponent(g));
  }
}

TEST_CASE("tables are deterministic") {
  GroupTable g1 = make_s4();
  GroupTable g2 = make_s4();
  CharacterTable a = table_of(g1);
  CharacterTable b = table_of(g2);
  REQUIRE(a.rows() == b.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.num_classes; ++k) CHECK(a.values[i][k] == b.values[i][k]);
}

TEST_CASE("inner products") {
  GroupTable s3 = make_s3();
  CharacterTable t = table_of(s3);
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.rows(); ++j) {
      Cyclotomic ip = inner_product(t, t.values[i], t.values[j]);
      CHECK(ip == Cyclotomic::from_integer(i == j ? 1 : 0, t.conductor));
    }

  // [chi conj(chi), 1] = [chi, chi] = 1 for every irreducible chi.
  int principal = t.principal_row();
  for (int i = 0; i < t.rows(); ++i) {
    std::vector<Cyclotomic> self_product;
    for (int k = 0; k < t.num_classes; ++k)
      self_product.push_back(t.values[i][k] * t.values[i][k].conj());
    Cyclotomic ip = inner_product(t, self_product, t.values[principal]);
    CHECK(ip == Cyclotomic::from_integer(1, t.conductor));
  }

  std::vector<Cyclotomic> wrong_length(2, Cyclotomic(1));
  CHECK_THROWS_AS(inner_product(t, wrong_length, wrong_length), Error);
}

TEST_CASE("product decomposition") {
  GroupTable s3 = make_s3();
  CharacterTable t = table_of(s3);
  // Rows: 0 = principal, 1 = sign, 2 = standard.
  auto linear_product = decompose_product(t, 1, 1);
  for (auto [row, mult] : linear_product) CHECK(mult == (row == 0 ? 1 : 0));

  auto std_squared = decompose_product(t, 2, 2);
  for (auto [row, mult] : std_squared) CHECK(mult == 1);  // 1 + sign + std

  GroupTable q8 = make_q8();
  CharacterTable tq = table_of(q8);
  int two_dim = -1;
  for (int i = 0; i < tq.rows(); ++i)
    if (tq.degrees[i] == 2) two_dim = i;
  REQUIRE(two_dim >= 0);
  auto dec = decompose_product(tq, two_dim, two_dim);
  long long total = 0;
  for (auto [row, mult] : dec) total += mult * tq.degrees[row];
  CHECK(total == 4);
}

TEST_CASE("structure constants via characters equal the combinatorial counts") {
  for (const GroupTable& g : {make_s3(), make_q8(), make_f21(), make_g55()}) {
    ClassPartition p = conjugacy_classes(g);
    CharacterTable t = dixon_character_table(g, p);
    for (int i = 0; i < p.count(); ++i)
      for (int j = 0; j < p.count(); ++j) {
        ClassProductMultiset m = product_multiset(g, p, i, j);
        std::vector<long long> row = structure_constants_via_characters(t, i, j);
        CHECK(row == m.coeffs);
      }
  }
  // Spot-check the per-triple route, including the identity-column cases.
  GroupTable s3 = make_s3();
  ClassPartition p = conjugacy_classes(s3);
  CharacterTable t = dixon_character_table(s3, p);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        CHECK(structure_constant_via_characters(t, i, j, k) ==
              product_multiset(s3, p, i, j).coeffs[k]);
}

TEST_CASE("table export formats") {
  GroupTable s3 = make_s3();
  CharacterTable t = table_of(s3);
  std::string expected =
      "group: S3\n"
      "order: 6\n"
      "exponent: 6\n"
      "classes: 3\n"
      "class_sizes: 1 2 3\n"
      "class_orders: 1 3 2\n"
      "chi_1: 1 1 1\n"
      "chi_2: 1 1 -1\n"
      "chi_3: 2 -1 0\n";
  CHECK(export_character_table_text(t, "S3") == expected);

  nlohmann::ordered_json doc = export_character_table_json(t, "S3");
  CHECK(doc["group"] == "S3");
  CHECK(doc["order"] == 6);
  CHECK(doc["characters"].size() == 3);
  CHECK(doc["characters"][2]["degree"] == 2);
  CHECK(doc["characters"][2]["values"][1] == "-1");

  // Irrational values print as root-of-unity combinations.
  GroupTable g55 = make_g55();
  CharacterTable t55 = table_of(g55);
  bool found_root_string = false;
  for (int row = 0; row < t55.rows(); ++row)
    for (int k = 0; k < t55.num_classes; ++k) {
      std::string s = t55.value_string(row, k);
      if (s.find('E') != std::string::npos) found_root_string = true;
    }
  CHECK(found_root_string);
}

TEST_CASE("order cap") {
  GroupTable z6 = construct_cyclic(6);
  CHECK_THROWS_AS(dixon_character_table(z6, conjugacy_classes(z6), 5), Error);
}
