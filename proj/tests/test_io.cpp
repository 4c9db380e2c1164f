#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mendel/construct.hpp"
#include "mendel/io.hpp"

using namespace mendel;

TEST_CASE("quasigroup round trip is byte exact") {
  CayleyTable q = field_mendelsohn(7, 1);
  std::string text = to_text(q);
  std::istringstream in(text);
  ParsedFile f = parse_file(in);
  REQUIRE(f.kind == FileKind::quasigroup);
  CHECK(*f.table == q);
  CHECK(to_text(*f.table) == text);
}

TEST_CASE("MTS round trip is byte exact") {
  OrientedTripleSystem s = quasigroup_to_mts(field_mendelsohn(7, 1));
  std::string text = to_text(s);
  std::istringstream in(text);
  ParsedFile f = parse_file(in);
  REQUIRE(f.kind == FileKind::mts);
  CHECK(*f.mts == s);
  CHECK(to_text(*f.mts) == text);
}

TEST_CASE("STS round trip is byte exact") {
  UnorderedTripleSystem s = projective_sts(4);
  std::string text = to_text(s);
  std::istringstream in(text);
  ParsedFile f = parse_file(in);
  REQUIRE(f.kind == FileKind::sts);
  CHECK(*f.sts == s);
  CHECK(to_text(*f.sts) == text);
}

TEST_CASE("loop round trip is byte exact") {
  LoopTable l = loop_from_group(make_abelian_group({9}));
  std::string text = to_text(l);
  std::istringstream in(text);
  ParsedFile f = parse_file(in);
  REQUIRE(f.kind == FileKind::loop);
  CHECK(*f.loop == l);
  CHECK(to_text(*f.loop) == text);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# a comment\n"
      "QG 3  # trailing comment\n"
      "\n"
      "0 2 1\n"
      "2 1 0\n"
      "1 0 2\n");
  ParsedFile f = parse_file(in);
  REQUIRE(f.kind == FileKind::quasigroup);
  CHECK(f.table->at(0, 1) == 2);
}

TEST_CASE("parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_file(in);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  };
  expect_parse_error("");
  expect_parse_error("QG 3\n0 2 1\n2 1 0\n");           // truncated
  expect_parse_error("QG 3\n0 2 1\n2 1 0\n1 0 x\n");    // bad token
  expect_parse_error("BLOCKS 7\n");                     // unknown tag
  expect_parse_error("MTS 3\n0 1\n");                   // short block line
  expect_parse_error("LOOP 2\n0 1\n1 0\n");             // missing identity
}

TEST_CASE("semantic validation surfaces module errors") {
  std::istringstream in("MTS 3\n0 1 2\n0 1 2\n");
  try {
    parse_file(in);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::pair_covered);
  }

  std::istringstream latin("QG 2\n0 0\n1 1\n");
  CHECK_THROWS_AS(parse_file(latin), Error);

  std::istringstream order("MTS 5\n");
  try {
    parse_file(order);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bad_order);
  }
}

TEST_CASE("save and load files") {
  UnorderedTripleSystem s = projective_sts(3);
  save_file("/tmp/mendel_io_test.sts", to_text(s));
  ParsedFile f = load_file("/tmp/mendel_io_test.sts");
  CHECK(*f.sts == s);
  CHECK_THROWS_AS(load_file("/tmp/mendel_io_does_not_exist"), Error);
}
