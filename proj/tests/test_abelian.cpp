#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mendel/abelian.hpp"

using namespace mendel;

TEST_CASE("group construction") {
  AbelianGroup g = make_abelian_group({3, 3});
  CHECK(g.order == 9);
  CHECK(g.identity() == Elem{0, 0});

  CHECK(make_abelian_group({9, 3}).order == 27);
  CHECK_THROWS_AS(make_abelian_group({6}), Error);
  try {
    make_abelian_group({6});
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_prime_power_factor);
  }
}

TEST_CASE("canonical indexing counts the first factor fastest") {
  AbelianGroup g = make_abelian_group({3, 3});
  CHECK(g.element(0) == Elem{0, 0});
  CHECK(g.element(1) == Elem{1, 0});
  CHECK(g.element(3) == Elem{0, 1});
  for (long long i = 0; i < g.order; ++i) CHECK(g.index_of(g.element(i)) == i);
}

TEST_CASE("element operations") {
  AbelianGroup g = make_abelian_group({9, 3});
  CHECK(g.add({8, 2}, {1, 1}) == Elem{0, 0});
  CHECK(g.neg({4, 1}) == Elem{5, 2});
  CHECK(g.smul(3, {1, 0}) == Elem{3, 0});
  CHECK(g.element_order({3, 0}) == 3);
  CHECK(g.element_order({1, 1}) == 9);
}

TEST_CASE("automorphism validation") {
  AbelianGroup z7 = make_abelian_group({7});
  CHECK_NOTHROW(check_automorphism(z7, {{3}}));

  AbelianGroup z9 = make_abelian_group({9});
  CHECK_THROWS_AS(check_automorphism(z9, {{3}}), Error);
  try {
    check_automorphism(z9, {{3}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_bijective);
  }

  AbelianGroup z33 = make_abelian_group({3, 3});
  GroupAutomorphism a = check_automorphism(z33, {{2, 1}, {0, 2}});
  // direct application to all 9 elements is a permutation fixing identity
  std::vector<char> seen(9, 0);
  for (long long i = 0; i < 9; ++i) {
    long long im = z33.index_of(a.apply(z33.element(i)));
    CHECK_FALSE(seen[im]);
    seen[im] = 1;
  }
  CHECK(a.apply(z33.identity()) == z33.identity());
}

TEST_CASE("divisibility condition catches non-homomorphisms") {
  AbelianGroup g = make_abelian_group({9, 3});
  // image of the Z3 generator must be 3-torsion in Z9
  CHECK_THROWS_AS(check_automorphism(g, {{1, 1}, {0, 1}}), Error);
  CHECK_NOTHROW(check_automorphism(g, {{1, 3}, {0, 1}}));
}

TEST_CASE("matrix helpers reduce row-wise") {
  AbelianGroup g = make_abelian_group({9, 3});
  Matrix id = identity_matrix(g);
  Matrix a = reduce_matrix(g, {{10, 3}, {4, -1}});
  CHECK(a == Matrix{{1, 3}, {1, 2}});
  CHECK(matmul(g, id, a) == a);
  CHECK(matsub(g, a, a) == Matrix{{0, 0}, {0, 0}});
}

TEST_CASE("every valid automorphism permutes the group fixing identity") {
  AbelianGroup g = make_abelian_group({4, 2});
  int valid = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; b += 2)  // Hom(Z2 -> Z4) lands in 2Z4
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          Matrix m{{a, b}, {c, d}};
          if (!is_valid_hom(g, m) || !is_bijective_hom(g, m)) continue;
          ++valid;
          GroupAutomorphism k = check_automorphism(g, m);
          CHECK(k.apply(g.identity()) == g.identity());
        }
  CHECK(valid == 8);  // |Aut(Z4 x Z2)| = 8
}
