#include <catch2/catch_amalgamated.hpp>

#include "rotamap/mapfile.hpp"

using namespace rotamap;

namespace {

bool code_is(const Error& e, errc c) { return e.code() == c; }

}  // namespace

TEST_CASE("parse_map_file") {
  SECTION("normalized shorthand") {
    const MapDocument doc = parse_map_file("# two vertices, one loop\n"
                                           "name demo\n"
                                           "P (1 8 7 5 3)(2 6 4)\n"
                                           "Q normalized\n");
    CHECK(doc.name == "demo");
    CHECK_FALSE(doc.degree.has_value());
    const CombMap m = resolve_map(doc);
    CHECK(m.degree() == 8);
    CHECK(m.face_rotation() == parse_cycles("(1 7 6 3 2 5 4)", 8));
  }
  SECTION("explicit rotations") {
    const CombMap m = resolve_map(parse_map_file("degree 12\n"
                                                 "P (1 8 11)(2 6 10)(3 5 12)(4 7 9)\n"
                                                 "Q (1 7 10)(2 5 11)(3 6 9)(4 8 12)\n"));
    CHECK(m.degree() == 12);
    CHECK(is_graphical(m));
  }
  SECTION("blank lines, comments, and CRLF are tolerated") {
    const MapDocument doc = parse_map_file("\n# heading\r\n\nP id\nQ id\ndegree 4\n");
    CHECK(resolve_map(doc) == CombMap(Perm::identity(4), Perm::identity(4)));
  }
  SECTION("degree reconciliation without a declared degree") {
    const CombMap m = resolve_map(parse_map_file("P (1 2)\nQ (3 4)\n"));
    CHECK(m.degree() == 4);
  }
  SECTION("declared degree wins and bounds labels") {
    CHECK_THROWS_MATCHES(resolve_map(parse_map_file("degree 4\nP (1 8)\nQ id\n")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, errc::label_range); }));
  }
  SECTION("normalized requires an even degree") {
    CHECK_THROWS_MATCHES(resolve_map(parse_map_file("P (1 2 3)\nQ normalized\n")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, errc::odd_degree); }));
  }
  SECTION("malformed documents") {
    for (const char* bad :
         {"P id\n",                      // no Q
          "Q id\n",                      // no P
          "P id\nQ id\nP id\n",          // duplicate
          "P id\nQ id\nvolume 3\n",      // unknown key
          "degree x\nP id\nQ id\n",      // bad degree
          "name\nP id\nQ id\n",          // empty name
          "P\nQ id\n"}) {                // empty P
      CHECK_THROWS_MATCHES(parse_map_file(bad), Error,
                           Catch::Matchers::Predicate<Error>(
                               [](const Error& e) { return code_is(e, errc::parse); }));
    }
    CHECK_THROWS_MATCHES(resolve_map(parse_map_file("P (1 2\nQ id\n")), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return code_is(e, errc::parse); }));
  }
  SECTION("degree-0 document") {
    const CombMap m = resolve_map(parse_map_file("degree 0\nP id\nQ id\n"));
    CHECK(m.degree() == 0);
    CHECK(census(m).component_count == 0);
  }
}

TEST_CASE("emit_map_file is canonical and round-trips") {
  const MapDocument doc = parse_map_file("name demo\nP (2 6 4)(1 8 7 5 3)\nQ normalized\n");
  const std::string out = emit_map_file(doc);
  CHECK(out == "name demo\ndegree 8\nP (1 8 7 5 3)(2 6 4)\nQ normalized\n");
  CHECK(emit_map_file(parse_map_file(out)) == out);

  const std::string explicit_q = emit_map_file(parse_map_file("P (1 2)\nQ (1 2)\n"));
  CHECK(explicit_q == "degree 2\nP (1 2)\nQ (1 2)\n");
  CHECK(emit_map_file(parse_map_file(explicit_q)) == explicit_q);
}
