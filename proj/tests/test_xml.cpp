#include <doctest.h>

#include <sstream>

#include "sna/error.hpp"
#include "sna/xml.hpp"

using sna::xml::Parser;
using Event = sna::xml::Parser::Event;

namespace {

Parser make(std::istringstream& in, const std::string& text) {
  in.str(text);
  return Parser(in);
}

}  // namespace

TEST_SUITE_BEGIN("xml");

TEST_CASE("elements, attributes and text") {
  std::istringstream in;
  Parser p = make(in, "<?xml version=\"1.0\"?>\n<a x=\"1\" y='two'>hi<b/></a>");
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "a");
  REQUIRE(p.attributes().size() == 2);
  CHECK(p.find_attribute("x")->value == "1");
  CHECK(p.find_attribute("y")->value == "two");
  CHECK(p.find_attribute("z") == nullptr);
  REQUIRE(p.next() == Event::text);
  CHECK(p.text() == "hi");
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "b");
  CHECK(p.next() == Event::end_element);
  CHECK(p.next() == Event::end_element);
  CHECK(p.next() == Event::eof);
}

TEST_CASE("entities and character references") {
  std::istringstream in;
  Parser p = make(in, "<a v=\"&lt;&amp;&quot;&apos;&gt;\">&#65;&#x42;c</a>");
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.find_attribute("v")->value == "<&\"'>");
  REQUIRE(p.next() == Event::text);
  CHECK(p.text() == "ABc");
}

TEST_CASE("comments and CDATA") {
  std::istringstream in;
  Parser p = make(in, "<a><!-- no -->x<![CDATA[<raw>&amp;]]></a>");
  REQUIRE(p.next() == Event::start_element);
  REQUIRE(p.next() == Event::text);
  CHECK(p.text() == "x");
  REQUIRE(p.next() == Event::text);
  CHECK(p.text() == "<raw>&amp;");
  CHECK(p.next() == Event::end_element);
}

TEST_CASE("namespace prefixes are stripped from element names") {
  std::istringstream in;
  Parser p = make(in, "<g:graph xmlns:g=\"urn:x\"><g:node/></g:graph>");
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "graph");
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "node");
}

TEST_CASE("truncated input reports the line") {
  std::istringstream in;
  Parser p = make(in, "<a>\n<b>\n");
  auto next_tag = [&] {
    Event e;
    do {
      e = p.next();
    } while (e == Event::text);  // whitespace between tags
    return e;
  };
  CHECK(next_tag() == Event::start_element);
  CHECK(next_tag() == Event::start_element);
  try {
    while (p.next() != Event::eof) {
    }
    FAIL("expected ParseError");
  } catch (const sna::ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("not closed") != std::string::npos);
  }
}

TEST_CASE("malformed constructs are rejected") {
  auto expect_fail = [](const std::string& doc) {
    std::istringstream in(doc);
    Parser p(in);
    CHECK_THROWS_AS(
        [&] {
          while (p.next() != Event::eof) {
          }
        }(),
        sna::ParseError);
  };
  expect_fail("<a></b>");
  expect_fail("<a x=1></a>");
  expect_fail("<a>&bogus;</a>");
  expect_fail("<!DOCTYPE graphml><a/>");
  expect_fail("text outside");
  expect_fail("<a><b></a></b>");
}

TEST_CASE("skip_element consumes a whole subtree") {
  std::istringstream in;
  Parser p = make(in, "<a><skip><deep>t</deep></skip><keep/></a>");
  REQUIRE(p.next() == Event::start_element);
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "skip");
  p.skip_element();
  REQUIRE(p.next() == Event::start_element);
  CHECK(p.name() == "keep");
}

TEST_SUITE_END();
