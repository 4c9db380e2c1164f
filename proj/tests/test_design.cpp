#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mendel/construct.hpp"
#include "mendel/design.hpp"

using namespace mendel;

namespace {

std::vector<std::array<int, 3>> fano_blocks() {
  return {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
}

}  // namespace

TEST_CASE("canonical rotation puts the least point first") {
  CHECK(canonical_rotation({2, 0, 1}) == std::array<int, 3>{0, 1, 2});
  CHECK(canonical_rotation({1, 2, 0}) == std::array<int, 3>{0, 1, 2});
  CHECK(canonical_rotation({0, 2, 1}) == std::array<int, 3>{0, 2, 1});
}

TEST_CASE("MTS validation") {
  // both orientations of one triple form the unique MTS(3)
  OrientedTripleSystem s = validate_mts(3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(s.blocks.size() == 2);

  CHECK_THROWS_AS(validate_mts(6, {}), Error);
  try {
    validate_mts(6, {});
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_order);
  }
  // with the override the order check is skipped and coverage fails instead
  CHECK_THROWS_AS(validate_mts(6, {}, true), Error);

  // missing pairs
  CHECK_THROWS_AS(validate_mts(4, {{0, 1, 2}, {0, 2, 1}}, true), Error);
  // duplicated pair
  CHECK_THROWS_AS(validate_mts(3, {{0, 1, 2}, {0, 1, 2}}, true), Error);
}

TEST_CASE("STS validation") {
  UnorderedTripleSystem fano = validate_sts(7, fano_blocks());
  CHECK(fano.blocks.size() == 7);

  UnorderedTripleSystem ag = quasigroup_to_sts(steiner_affine(2));
  CHECK(ag.v == 9);
  CHECK(ag.blocks.size() == 12);

  auto dup = fano_blocks();
  dup[1] = {0, 1, 3};  // pair {0,1} now covered twice
  CHECK_THROWS_AS(validate_sts(7, dup), Error);

  CHECK_THROWS_AS(validate_sts(5, {}), Error);
}

TEST_CASE("MTS and quasigroup conversions are mutually inverse") {
  OrientedTripleSystem m3 = validate_mts(3, {{0, 1, 2}, {0, 2, 1}});
  CayleyTable q3 = mts_to_quasigroup(m3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(q3.at(x, y) == (2 * x + 2 * y) % 3);
  CHECK(quasigroup_to_mts(q3) == m3);

  CayleyTable q7 = field_mendelsohn(7, 1);
  OrientedTripleSystem m7 = quasigroup_to_mts(q7);
  CHECK(m7.blocks.size() == 14);
  CHECK(mts_to_quasigroup(m7) == q7);

  // round trip the other way on the doubled Fano
  OrientedTripleSystem dbl = doubled_orientation(validate_sts(7, fano_blocks()));
  CHECK(quasigroup_to_mts(mts_to_quasigroup(dbl)) == dbl);
}

TEST_CASE("quasigroup_to_mts rejects non-Mendelsohn tables") {
  std::vector<uint8_t> group{0, 1, 2, 1, 2, 0, 2, 0, 1};  // Z3 addition
  CHECK_THROWS_AS(quasigroup_to_mts(make_cayley(3, group)), Error);
}

TEST_CASE("properness") {
  UnorderedTripleSystem fano = validate_sts(7, fano_blocks());
  CHECK_FALSE(is_proper(doubled_orientation(fano)));
  CHECK(is_proper(quasigroup_to_mts(field_mendelsohn(7, 1))));
  CHECK_FALSE(is_proper(validate_mts(3, {{0, 1, 2}, {0, 2, 1}})));
}

TEST_CASE("improper systems have commutative quasigroups") {
  UnorderedTripleSystem fano = validate_sts(7, fano_blocks());
  OrientedTripleSystem dbl = doubled_orientation(fano);
  PropertyReport r = predicate_suite(mts_to_quasigroup(dbl));
  CHECK(r.totally_symmetric);
  CHECK(mts_to_quasigroup(dbl) == sts_to_quasigroup(fano));
}

TEST_CASE("mitre search") {
  CHECK_FALSE(find_mitre(validate_sts(7, fano_blocks())).has_value());

  UnorderedTripleSystem ag = quasigroup_to_sts(steiner_affine(2));
  auto mitre = find_mitre(ag);
  REQUIRE(mitre.has_value());
  // all five witness blocks belong to the system and touch 7 distinct points
  std::set<std::array<int, 3>> have(ag.blocks.begin(), ag.blocks.end());
  std::set<int> points;
  for (auto& b : mitre->blocks) {
    CHECK(have.count(b) == 1);
    points.insert(b.begin(), b.end());
  }
  CHECK(points.size() == 7);
  // the witness triple satisfies the right distributive law
  CayleyTable q = sts_to_quasigroup(ag);
  auto [x, y, z] = mitre->triple;
  CHECK(q.at(q.at(x, y), z) == q.at(q.at(x, z), q.at(y, z)));
}

TEST_CASE("mitre search is deterministic across thread counts") {
  UnorderedTripleSystem ag = quasigroup_to_sts(steiner_affine(2));
  auto a = find_mitre(ag, 1);
  auto b = find_mitre(ag, 4);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->triple == b->triple);
}

TEST_CASE("mitre duality with anti-distributivity") {
  // anti-mitre <=> doubled quasigroup anti-distributive, on desk-scale systems
  UnorderedTripleSystem fano = validate_sts(7, fano_blocks());
  UnorderedTripleSystem ag = quasigroup_to_sts(steiner_affine(2));
  for (const auto& s : {fano, ag}) {
    bool antimitre = !find_mitre(s).has_value();
    bool antidist = is_antidistributive(sts_to_quasigroup(s), true).antidistributive;
    CHECK(antimitre == antidist);
  }
}
