#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mendel/construct.hpp"
#include "mendel/field.hpp"
#include "mendel/numbers.hpp"

using namespace mendel;

namespace {

CayleyTable linear(int n, int a, int b) {
  std::vector<uint8_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = static_cast<uint8_t>((a * x + b * y) % n);
  return make_cayley(n, std::move(t));
}

void check_mendelsohn_medial(const CayleyTable& q) {
  PropertyReport r = predicate_suite(q);
  CHECK(r.idempotent);
  CHECK(r.semisymmetric);
  CHECK(r.medial);
}

}  // namespace

TEST_CASE("affine_mendelsohn over Z7") {
  AbelianGroup z7 = make_abelian_group({7});
  CHECK(affine_mendelsohn(z7, check_automorphism(z7, {{3}})) == linear(7, 5, 3));

  try {
    affine_mendelsohn(z7, check_automorphism(z7, {{2}}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::condition_m_violated);
  }
}

TEST_CASE("affine_mendelsohn over Z13 with k=4") {
  CHECK(roots_of_f(13, 1) == std::vector<long long>{4, 10});
  AbelianGroup z13 = make_abelian_group({13});
  CayleyTable q = affine_mendelsohn(z13, check_automorphism(z13, {{4}}));
  check_mendelsohn_medial(q);
  CHECK(q == linear(13, 10, 4));
}

TEST_CASE("field_mendelsohn") {
  // omega = 3 in GF(7), s = 1, so k = 3 and the table is 5x+3y
  CHECK(field_mendelsohn(7, 1) == linear(7, 5, 3));

  CayleyTable q25 = field_mendelsohn(5, 2);
  CHECK(q25.n == 25);
  check_mendelsohn_medial(q25);

  try {
    field_mendelsohn(5, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_not_one_mod_six);
  }
}

TEST_CASE("char2_mendelsohn(1) matches direct GF(4) arithmetic") {
  // indices 0,1,2,3 = 0, 1, w, w+1 with w^2 = w+1
  const int mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  CayleyTable q = char2_mendelsohn(1);
  REQUIRE(q.n == 4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      int expected = mul[3][x] ^ mul[2][y];  // (1+w)x + w y, addition is xor
      CHECK(q.at(x, y) == expected);
    }
}

TEST_CASE("the field multiplier is a primitive sixth root of unity") {
  for (auto [p, d] : std::vector<std::pair<long long, int>>{{7, 1}, {13, 1}, {5, 2}}) {
    FieldSpec f = make_field(p, d);
    FieldElement k = f.pow(f.omega, (f.q - 1) / 6);
    CHECK(f.pow(k, 6) == f.one());
    CHECK_FALSE(f.pow(k, 2) == f.one());
    CHECK_FALSE(f.pow(k, 3) == f.one());
    CHECK(f.add(f.sub(f.mul(k, k), k), f.one()) == f.zero());
  }
}

TEST_CASE("char2_mendelsohn larger orders") {
  for (int d : {2, 3}) {
    CayleyTable q = char2_mendelsohn(d);
    CHECK(q.n == (1 << (2 * d)));
    check_mendelsohn_medial(q);
  }
}

TEST_CASE("steiner_affine") {
  CHECK(steiner_affine(1) == linear(3, 2, 2));
  CHECK(quasigroup_to_sts(steiner_affine(2)).blocks.size() == 12);
  PropertyReport r = predicate_suite(steiner_affine(3));
  CHECK(r.totally_symmetric);
  CHECK(r.medial);
  CHECK(r.distributive);
}

TEST_CASE("spectrum membership follows the factorization criterion") {
  CHECK(spectrum_member(1));
  CHECK(spectrum_member(4));
  CHECK(spectrum_member(7));
  CHECK(spectrum_member(12));
  CHECK_FALSE(spectrum_member(8));
  CHECK_FALSE(spectrum_member(10));
  auto off = spectrum_offender(10);
  REQUIRE(off.has_value());
  CHECK(*off == std::pair<long long, int>{2, 1});
  CHECK(spectrum_offender(15)->first == 5);
}

TEST_CASE("spectrum membership equals Loeschian representability up to 300") {
  for (long long v = 1; v <= 300; ++v) {
    bool loeschian = false;
    for (long long x = 0; x * x <= v && !loeschian; ++x)
      for (long long y = x; x * x + x * y + y * y <= v; ++y)
        if ((x || y) && x * x + x * y + y * y == v) loeschian = true;
    CHECK(spectrum_member(v) == loeschian);
  }
}

TEST_CASE("spectrum_construct") {
  CayleyTable q21 = spectrum_construct(21);
  CHECK(q21.n == 21);
  check_mendelsohn_medial(q21);
  CHECK(q21 == direct_product(steiner_affine(1), field_mendelsohn(7, 1)));

  CayleyTable q36 = spectrum_construct(36);
  CHECK(q36.n == 36);
  check_mendelsohn_medial(q36);
  CHECK(q36 == direct_product(char2_mendelsohn(1), steiner_affine(2)));

  try {
    spectrum_construct(10);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_in_spectrum);
  }
}

TEST_CASE("projective systems") {
  CHECK(projective_sts(2).blocks.size() == 1);
  UnorderedTripleSystem fano = projective_sts(3);
  CHECK(fano.v == 7);
  CHECK(fano.blocks.size() == 7);
  UnorderedTripleSystem pg32 = projective_sts(4);
  CHECK(pg32.v == 15);
  CHECK(pg32.blocks.size() == 35);
  CHECK_FALSE(find_mitre(fano).has_value());
  CHECK_FALSE(find_mitre(pg32).has_value());
}

TEST_CASE("netto systems") {
  UnorderedTripleSystem n7 = netto_sts(7, 1);
  CHECK(n7.v == 7);
  // necessarily the Fano plane up to isomorphism
  auto iso = is_isomorphic(sts_to_quasigroup(n7), sts_to_quasigroup(projective_sts(3)));
  CHECK(iso.has_value());

  UnorderedTripleSystem n19 = netto_sts(19, 1);
  CHECK(n19.v == 19);
  CHECK_FALSE(find_mitre(n19).has_value());

  try {
    netto_sts(13, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::order_not_seven_mod_twelve);
  }
}

TEST_CASE("anti_double block structure") {
  UnorderedTripleSystem fano = projective_sts(3);
  OrientedTripleSystem m15 = anti_double(fano);
  CHECK(m15.v == 15);
  CHECK(m15.blocks.size() == 8 * 7 + 2 * 7);  // = v(v-1)/3
  CHECK(m15.blocks.size() == 15 * 14 / 3);
  CHECK(is_proper(m15));

  // blocks on even labels only recover the original system under a -> 2a
  std::set<std::array<int, 3>> evens;
  for (auto& b : m15.blocks)
    if (b[0] % 2 == 0 && b[1] % 2 == 0 && b[2] % 2 == 0) {
      std::array<int, 3> half{b[0] / 2, b[1] / 2, b[2] / 2};
      std::sort(half.begin(), half.end());
      evens.insert(half);
    }
  CHECK(evens == std::set<std::array<int, 3>>(fano.blocks.begin(), fano.blocks.end()));
}

TEST_CASE("anti_double anti-distributivity") {
  CayleyTable q15 = mts_to_quasigroup(anti_double(projective_sts(3)));
  CHECK(is_antidistributive(q15, true).antidistributive);

  // AG(2,3) has a mitre, so the doubled system is not anti-distributive
  OrientedTripleSystem m19 = anti_double(quasigroup_to_sts(steiner_affine(2)));
  CHECK(m19.v == 19);
  CHECK(is_proper(m19));
  CayleyTable q19 = mts_to_quasigroup(m19);
  auto r = is_antidistributive(q19, true);
  CHECK_FALSE(r.antidistributive);
  REQUIRE(r.witness.has_value());
  auto [x, y, z] = *r.witness;
  bool right = q19.at(q19.at(x, y), z) == q19.at(q19.at(x, z), q19.at(y, z));
  bool left = q19.at(x, q19.at(y, z)) == q19.at(q19.at(x, y), q19.at(x, z));
  CHECK((right || left));
}

TEST_CASE("anti-mitre inputs up to order 19 double to anti-distributive systems") {
  std::vector<UnorderedTripleSystem> inputs{projective_sts(3), projective_sts(4),
                                            netto_sts(19, 1)};
  for (const auto& s : inputs) {
    REQUIRE_FALSE(find_mitre(s).has_value());
    CayleyTable q = mts_to_quasigroup(anti_double(s));
    CHECK(is_antidistributive(q, true).antidistributive);
  }
}

TEST_CASE("anti_double accepts a custom orientation") {
  UnorderedTripleSystem fano = projective_sts(3);
  std::vector<std::array<int, 3>> flipped;
  for (auto& b : fano.blocks) flipped.push_back({b[0], b[2], b[1]});
  OrientedTripleSystem m = anti_double(fano, &flipped);
  CHECK(m.v == 15);
  CHECK(is_antidistributive(mts_to_quasigroup(m), true).antidistributive);

  std::vector<std::array<int, 3>> wrong = {{0, 1, 3}};
  CHECK_THROWS_AS(anti_double(fano, &wrong), Error);
}
