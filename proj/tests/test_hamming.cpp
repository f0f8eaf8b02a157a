#include <catch_amalgamated.hpp>

#include <algorithm>

#include "qperc/hamming.hpp"

using namespace qperc;

TEST_CASE("shape basics and mixed-radix codes") {
  CubeShape s(2, 3);
  CHECK(s.n() == 2);
  CHECK(s.q() == 3);
  CHECK(s.volume() == 9);
  CHECK(s.degree() == 4);

  // first coordinate is the most significant digit
  CHECK(s.vertex_from_string("12") == 5);
  CHECK(s.digit(5, 0) == 1);
  CHECK(s.digit(5, 1) == 2);
  CHECK(s.vertex_to_string(5) == "12");
  CHECK(s.with_digit(5, 0, 2) == 8);

  CubeShape point(0, 5);
  CHECK(point.volume() == 1);
  CHECK(point.degree() == 0);
  CHECK(point.vertex_to_string(0).empty());
}

TEST_CASE("shape validation and the vertex-count guard") {
  CHECK_THROWS_AS(CubeShape(-1, 3), error);
  CHECK_THROWS_AS(CubeShape(2, 1), error);
  CHECK_THROWS_AS(CubeShape(2, 0), error);

  CHECK_NOTHROW(CubeShape(17, 3));  // 3^17 fits under 2^27
  CHECK_THROWS_AS(CubeShape(18, 3), guard_error);
  CHECK_NOTHROW(CubeShape(27, 2));
  CHECK_THROWS_AS(CubeShape(28, 2), guard_error);
  CHECK_NOTHROW(CubeShape(18, 3, std::uint64_t{1} << 40));  // explicit override
}

TEST_CASE("wide alphabets use comma-separated text") {
  CubeShape s(2, 12);
  CHECK_FALSE(s.compact_text());
  const Vertex v = s.vertex_from_string("11,3");
  CHECK(v == 11 * 12 + 3);
  CHECK(s.vertex_to_string(v) == "11,3");
}

TEST_CASE("vertex parsing rejects malformed words") {
  CubeShape s(2, 3);
  CHECK_THROWS_AS(s.vertex_from_string("1"), error);    // wrong length
  CHECK_THROWS_AS(s.vertex_from_string("123"), error);  // wrong length
  CHECK_THROWS_AS(s.vertex_from_string("13"), error);   // digit out of range
  CHECK_THROWS_AS(s.vertex_from_string("1*"), error);   // star is not a vertex
  CHECK_THROWS_AS(s.vertex_from_string("ab"), error);
}

TEST_CASE("neighbors are coordinate-major with ascending symbols") {
  CubeShape s(2, 3);
  const auto nb = neighbors(s.vertex_from_string("00"), s);
  std::vector<std::string> words;
  for (Vertex v : nb) words.push_back(s.vertex_to_string(v));
  CHECK(words == std::vector<std::string>{"10", "20", "01", "02"});

  CHECK(hamming_distance(s.vertex_from_string("00"), s.vertex_from_string("11"), s) == 2);
  CHECK(hamming_distance(s.vertex_from_string("12"), s.vertex_from_string("12"), s) == 0);
}

TEST_CASE("patterns: parsing, membership, dimension") {
  CubeShape s(3, 3);
  const Pattern p = Pattern::parse(s, "1*0");
  CHECK(p.dim() == 1);
  CHECK(p.to_string() == "1*0");
  CHECK(p.contains(s.vertex_from_string("110")));
  CHECK_FALSE(p.contains(s.vertex_from_string("111")));

  const auto codes = Pattern::parse(s, "*0*").member_codes();
  // stars spin like an odometer, so codes come out ascending
  std::vector<Vertex> sorted = codes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(codes == sorted);
  CHECK(codes.size() == 9);

  CHECK(Pattern::from_vertex(s, s.vertex_from_string("120")).dim() == 0);
  CHECK(Pattern::all_stars(s).dim() == 3);
  CHECK_THROWS_AS(Pattern::parse(s, "1*"), error);   // wrong length
  CHECK_THROWS_AS(Pattern::parse(s, "1*3"), error);  // symbol out of range
}

TEST_CASE("pattern distance, join, and common stars") {
  CubeShape s(2, 3);
  const auto P = [&](const char* w) { return Pattern::parse(s, w); };

  CHECK(distance(P("10"), P("01")) == 2);
  CHECK(distance(P("*0"), P("02")) == 1);  // a star matches anything
  CHECK(distance(P("**"), P("12")) == 0);
  CHECK(join(P("10"), P("01")).to_string() == "**");
  CHECK(join(P("1*"), P("1*")).to_string() == "1*");
  CHECK(join(P("*0"), P("02")).to_string() == "**");
  CHECK(common_stars(P("*0"), P("*2")) == 1);
  CHECK(common_stars(P("*0"), P("0*")) == 0);

  CubeShape other(3, 3);
  CHECK_THROWS_AS(distance(P("10"), Pattern::parse(other, "100")), error);
}

TEST_CASE("coordinate-wise automorphisms") {
  CubeShape s(2, 3);
  // swap symbols 0 and 2 in the first coordinate only
  std::vector<std::vector<int>> maps{{2, 1, 0}, {0, 1, 2}};
  CHECK(s.vertex_to_string(relabel_symbols(s.vertex_from_string("01"), s, maps)) == "21");
  CHECK(s.vertex_to_string(relabel_symbols(s.vertex_from_string("11"), s, maps)) == "11");

  // reverse the coordinates
  std::vector<int> rev{1, 0};
  CHECK(s.vertex_to_string(permute_coords(s.vertex_from_string("12"), s, rev)) == "21");
}
