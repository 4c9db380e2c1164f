#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "mendel/construct.hpp"
#include "mendel/enumerate.hpp"
#include "mendel/numbers.hpp"

using namespace mendel;

namespace {

std::set<Matrix> matrix_set(const std::vector<GroupAutomorphism>& ks) {
  std::set<Matrix> out;
  for (auto& k : ks) out.insert(k.matrix);
  return out;
}

}  // namespace

TEST_CASE("solutions over cyclic groups match the polynomial roots") {
  auto z7 = solutions_of_f(make_abelian_group({7}));
  REQUIRE(z7.size() == 2);
  CHECK(z7[0].matrix == Matrix{{3}});
  CHECK(z7[1].matrix == Matrix{{5}});

  CHECK(solutions_of_f(make_abelian_group({9})).empty());
  CHECK(solutions_of_f(make_abelian_group({5})).empty());
  CHECK(solutions_of_f(make_abelian_group({49})).size() == 2);
}

TEST_CASE("solutions are automorphisms satisfying f pointwise") {
  for (auto factors : std::vector<std::vector<int>>{{3, 3}, {9, 3}, {2, 2}, {4, 4}}) {
    AbelianGroup g = make_abelian_group(factors);
    for (const auto& k : solutions_of_f(g)) {
      CHECK_NOTHROW(check_automorphism(g, k.matrix));
      for (long long i = 0; i < g.order; ++i) {
        Elem x = g.element(i);
        Elem want = g.add(g.add(k.apply(k.apply(x)), g.neg(k.apply(x))), x);
        CHECK(want == g.identity());
      }
    }
  }
}

TEST_CASE("structured and brute-force solvers agree on elementary groups") {
  SolveOptions brute;
  brute.brute_force = true;
  for (auto factors : std::vector<std::vector<int>>{
           {2, 2}, {3, 3}, {5, 5}, {7, 7}, {3, 3, 3}, {2, 2, 2, 2}}) {
    AbelianGroup g = make_abelian_group(factors);
    CHECK(matrix_set(solutions_of_f(g)) == matrix_set(solutions_of_f(g, brute)));
  }
}

TEST_CASE("conjugacy classes over (Z3)^2 are the two Jordan types") {
  AbelianGroup g = make_abelian_group({3, 3});
  auto sols = solutions_of_f(g);
  CHECK(sols.size() == 9);
  auto classes = conjugacy_classes(g, sols);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() + classes[1].size() == sols.size());
  // one class is the scalar 2I alone, the other contains the Jordan block
  auto scalar = Matrix{{2, 0}, {0, 2}};
  auto jordan = Matrix{{2, 1}, {0, 2}};
  const auto& big = classes[0].size() == 8 ? classes[0] : classes[1];
  const auto& small = classes[0].size() == 1 ? classes[0] : classes[1];
  CHECK(small.size() == 1);
  CHECK(small.front().matrix == scalar);
  bool jordan_found = false;
  for (auto& k : big) jordan_found = jordan_found || k.matrix == jordan;
  CHECK(jordan_found);
}

TEST_CASE("the single class over (Z2)^2 contains the companion matrix") {
  AbelianGroup g = make_abelian_group({2, 2});
  auto classes = conjugacy_classes(g, solutions_of_f(g));
  REQUIRE(classes.size() == 1);
  bool found = false;
  for (auto& k : classes[0]) found = found || k.matrix == Matrix{{0, 1}, {1, 1}};
  CHECK(found);
}

TEST_CASE("conjugacy over Z7 is trivial") {
  AbelianGroup g = make_abelian_group({7});
  auto classes = conjugacy_classes(g, solutions_of_f(g));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 1);
}

TEST_CASE("(Z7)^2 has three classes and (Z3)^4 has three classes") {
  AbelianGroup g7 = make_abelian_group({7, 7});
  CHECK(conjugacy_classes(g7, solutions_of_f(g7)).size() == 3);

  AbelianGroup g3 = make_abelian_group({3, 3, 3, 3});
  auto sols = solutions_of_f(g3);
  auto classes = conjugacy_classes(g3, sols);
  CHECK(classes.size() == 3);
  size_t total = 0;
  for (auto& c : classes) total += c.size();
  CHECK(total == sols.size());
}

TEST_CASE("mixed groups: Z9xZ3 contributes one class, Z27xZ3 none") {
  AbelianGroup g = make_abelian_group({9, 3});
  auto sols = solutions_of_f(g);
  CHECK_FALSE(sols.empty());
  CHECK(conjugacy_classes(g, sols).size() == 1);

  CHECK(solutions_of_f(make_abelian_group({27, 3})).empty());
}

TEST_CASE("count_affine reproduces the ground truths") {
  CHECK(count_affine(1).a == 1);
  CHECK(count_affine(3).a == 1);
  CHECK(count_affine(9).a == 2);
  CHECK(count_affine(4).a == 1);
  CHECK(count_affine(25).a == 1);
  CHECK(count_affine(5).a == 0);
  CHECK(count_affine(11).a == 0);
  CHECK(count_affine(12).a == 1);
  CHECK(count_affine(7).a == 2);
}

TEST_CASE("count_affine is multiplicative across coprime parts") {
  CHECK(count_affine(21).a == count_affine(3).a * count_affine(7).a);
  CHECK(count_affine(63).a == count_affine(9).a * count_affine(7).a);
  // direct enumeration over the group of order 21 agrees
  AbelianGroup z21 = make_abelian_group({3, 7});
  auto classes = conjugacy_classes(z21, solutions_of_f(z21));
  CHECK(classes.size() == 2);

  std::map<long long, long long> memo;
  auto a = [&](long long v) {
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, count_affine(v).a).first;
    return it->second;
  };
  for (long long u = 1; u <= 49; ++u)
    for (long long v = u; v <= 49 && u * v <= 343; ++v) {
      if (std::gcd(u, v) != 1) continue;
      CHECK(a(u * v) == a(u) * a(v));
    }
}

TEST_CASE("prime order counts follow the trichotomy") {
  for (long long p = 2; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    long long want = p % 3 == 1 ? 2 : (p == 3 ? 1 : 0);
    CHECK(count_affine(p).a == want);
  }
}

TEST_CASE("class representatives are pairwise non-conjugate") {
  for (auto factors : std::vector<std::vector<int>>{{3, 3}, {9, 3}, {3, 3, 3, 3}, {7, 7}}) {
    AbelianGroup g = make_abelian_group(factors);
    auto classes = conjugacy_classes(g, solutions_of_f(g));
    for (size_t i = 0; i < classes.size(); ++i)
      for (size_t j = 0; j < classes.size(); ++j) {
        bool conj = conjugate_in_aut(g, classes[i].front().matrix, classes[j].front().matrix);
        CHECK(conj == (i == j));
      }
  }
}

TEST_CASE("no solutions at odd exponents of primes that are 2 mod 3") {
  for (long long q : {2LL, 8LL, 32LL, 128LL, 125LL}) {
    for (auto& factors : abelian_groups_of_order(q)) {
      AbelianGroup g = make_abelian_group(factors);
      CHECK(solutions_of_f(g).empty());
    }
  }
}

TEST_CASE("report text format") {
  std::string text = report_to_text(count_affine(9));
  CHECK(text == "GROUP 9 classes=0\nGROUP 3x3 classes=2\na(9)=2\n");
}

TEST_CASE("abelian groups of an order") {
  auto gs = abelian_groups_of_order(36);
  REQUIRE(gs.size() == 4);
  CHECK(gs[0] == std::vector<int>{9, 4});
  CHECK(gs[3] == std::vector<int>{3, 3, 2, 2});
}

TEST_CASE("count_affine respects the prime-power cap") {
  CHECK_THROWS_AS(count_affine(1 << 10), Error);
}

TEST_CASE("Kepka-Nemec criterion") {
  AbelianGroup z7 = make_abelian_group({7});
  GroupAutomorphism k3 = check_automorphism(z7, {{3}});
  GroupAutomorphism k5 = check_automorphism(z7, {{5}});
  CHECK_FALSE(kepka_nemec_iso(z7, k3, z7, k5));
  CHECK(kepka_nemec_iso(z7, k3, z7, k3));

  AbelianGroup g33 = make_abelian_group({3, 3});
  GroupAutomorphism d = check_automorphism(g33, {{2, 0}, {0, 2}});
  GroupAutomorphism j = check_automorphism(g33, {{2, 1}, {0, 2}});
  CHECK_FALSE(kepka_nemec_iso(g33, d, g33, j));
  // conjugating j by an explicit automorphism preserves the class
  Matrix psi{{1, 1}, {0, 1}};
  Matrix conj = matmul(g33, matmul(g33, psi, j.matrix), Matrix{{1, 2}, {0, 1}});
  CHECK(kepka_nemec_iso(g33, j, g33, check_automorphism(g33, conj)));

  // different groups of the same order are never isomorphic parameters
  AbelianGroup z9 = make_abelian_group({9});
  CHECK_FALSE(kepka_nemec_iso(g33, d, z9, check_automorphism(z9, {{2}})));
}

TEST_CASE("Kepka-Nemec agrees with table isomorphism") {
  AbelianGroup g = make_abelian_group({3, 3});
  auto classes = conjugacy_classes(g, solutions_of_f(g));
  std::vector<GroupAutomorphism> reps;
  for (auto& c : classes) reps.push_back(c.front());
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j) {
      bool kn = kepka_nemec_iso(g, reps[i], g, reps[j]);
      bool iso = is_isomorphic(affine_mendelsohn(g, reps[i]), affine_mendelsohn(g, reps[j]))
                     .has_value();
      CHECK(kn == iso);
    }
}

TEST_CASE("self-converse tests") {
  AbelianGroup z7 = make_abelian_group({7});
  CHECK_FALSE(is_self_converse(z7, check_automorphism(z7, {{3}})));
  CHECK(converse(affine_mendelsohn(z7, check_automorphism(z7, {{3}}))) ==
        affine_mendelsohn(z7, check_automorphism(z7, {{5}})));

  AbelianGroup z3 = make_abelian_group({3});
  CHECK(is_self_converse(z3, check_automorphism(z3, {{2}})));
  AbelianGroup g33 = make_abelian_group({3, 3});
  CHECK(is_self_converse(g33, check_automorphism(g33, {{2, 0}, {0, 2}})));

  AbelianGroup z13 = make_abelian_group({13});
  CHECK_FALSE(is_self_converse(z13, check_automorphism(z13, {{4}})));
}

TEST_CASE("loop-based enumeration filters medial tables") {
  // associative loops only produce affine quasigroups, so b stays 0
  std::vector<LoopTable> loops{loop_from_group(make_abelian_group({3, 3}))};
  LoopEnumeration le = distributive_from_loops(loops);
  CHECK(le.b == 0);
  CHECK(le.representatives.empty());
}
