#include <doctest.h>

#include "support.hpp"
#include "tsemi/error.hpp"
#include "tsemi/io.hpp"

using namespace tsemi;
using namespace tsemi::test;

namespace {

  std::size_t error_line(std::string_view text) {
    try {
      parse(text);
    } catch (ParseError const& e) {
      return e.line();
    }
    return 0;
  }

}  // namespace

TEST_CASE("parse a minimal document") {
  auto doc = parse("states: 3\ngen: 1 3 3\ngen: 3 1 3\n");
  CHECK(doc.states == 3);
  CHECK(doc.generators == std::vector<std::vector<int>>{{1, 3, 3}, {3, 1, 3}});
  CHECK(doc.monoid);
  CHECK_FALSE(doc.extended);
  CHECK(to_semigroup(doc).size() == 4);
  doc.monoid = false;
  CHECK(to_semigroup(doc).size() == 3);
}

TEST_CASE("comments, blank lines, CRLF and flags") {
  auto doc = parse("# header\r\n\r\nstates: 2   # two\r\ngen: 2 1\r\nmonoid: false\r\nextended: true\r\n");
  CHECK(doc.states == 2);
  CHECK(doc.generators.size() == 1);
  CHECK_FALSE(doc.monoid);
  CHECK(doc.extended);
  CHECK(parse("states: 1\ngen: 1").generators.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse("gen: 1 2\n"), ParseError);
  CHECK(error_line("gen: 1 2\n") == 1);
  CHECK(error_line("states: 3\n\ngen: 1 x 3\n") == 3);
  CHECK(error_line("states: 3\ngen 1 2 3\n") == 2);
  CHECK(error_line("states: 3\ngen: 1 2 3\nfoo: 1\n") == 3);
  CHECK(error_line("states: 3\nstates: 3\n") == 2);
  CHECK(error_line("states: 3\ngen: 1 2 3\nmonoid: maybe\n") == 3);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("validation errors") {
  CHECK_THROWS_AS(parse("states: 3\ngen: 1 4 3\n"), ValidationError);
  CHECK(error_line("states: 3\ngen: 1 4 3\n") == 2);
  CHECK_THROWS_AS(parse("states: 3\ngen: 1 2\n"), ValidationError);
  CHECK_THROWS_AS(parse("states: 3\ngen: 0 1 2\n"), ValidationError);
  CHECK_THROWS_AS(parse("states: 0\n"), ValidationError);
  CHECK_THROWS_AS(parse("states: 3\n"), ValidationError);
}

TEST_CASE("serialize round trip") {
  InputDocument doc{5, {{2, 2, 1, 2, 4}, {3, 5, 2, 3, 2}, {3, 5, 4, 5, 4}}, true, true};
  CHECK(parse(serialize(doc)) == doc);
  doc.monoid = false;
  CHECK(parse(serialize(doc)) == doc);
}

TEST_CASE("fixture files") {
  std::string dir = TSEMI_FIXTURES_DIR;
  auto four = parse_file(dir + "/example4.txt");
  CHECK(four.generators.size() == 3);
  CHECK(to_semigroup(four).size() == 31);
  CHECK(to_semigroup(parse_file(dir + "/example1.txt")).elements() == example1().elements());
  CHECK(to_semigroup(parse_file(dir + "/example2.txt")).size() == 5);
  CHECK(to_semigroup(parse_file(dir + "/example3.txt")).elements() == example3().elements());
  CHECK_THROWS_AS(parse_file(dir + "/bad_range.txt"), ValidationError);
  try {
    parse_file(dir + "/missing.txt");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 0);
  }
  CHECK_THROWS_AS(to_semigroup(four, 5), ResourceLimitError);
}
