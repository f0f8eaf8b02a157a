#include <catch_amalgamated.hpp>

#include "qperc/engine.hpp"
#include "qperc/norms.hpp"
#include "qperc/vertex_set.hpp"

using namespace qperc;

TEST_CASE("gated digit counts") {
  CubeShape s(5, 3);
  // two gate blocks of width 2, one-digit suffix
  NormSpec spec(s, 2, 2, {1});
  CHECK(norm_digits({1, 0, 2, 0, 1}, spec) == 2);  // counts the first n-1 digits
  CHECK(norm_digits({1, 2, 2, 2, 1}, spec) == 4);
  CHECK(norm_digits({0, 0, 2, 0, 1}, spec) == 0);  // first block all zero
  CHECK(norm_digits({1, 0, 0, 0, 1}, spec) == 0);  // second block all zero
  CHECK(norm_digits({1, 0, 2, 0, 2}, spec) == 0);  // suffix mismatch

  // without a suffix the count runs over every digit
  NormSpec plain(s, 1, 1, {});
  CHECK(norm_digits({1, 1, 1, 1, 1}, plain) == 5);
  CHECK(norm_digits({1, 1, 0, 0, 0}, plain) == 2);
  CHECK(norm_digits({0, 1, 1, 1, 1}, plain) == 0);

  // code-based wrapper agrees
  CHECK(norm(s.vertex_from_string("10201"), spec) == 2);
}

TEST_CASE("an empty gate block can never fire") {
  CubeShape s(2, 3);
  NormSpec spec(s, 0, std::nullopt, {2});
  CHECK(norm_digits({1, 2}, spec) == 0);
  CHECK(norm_digits({0, 2}, spec) == 0);
}

TEST_CASE("norm specs validate their blocks") {
  CubeShape s(3, 3);
  CHECK_THROWS_AS(NormSpec(s, -1, std::nullopt, {}), error);
  CHECK_THROWS_AS(NormSpec(s, std::nullopt, 1, {}), error);  // second block needs a first
  CHECK_THROWS_AS(NormSpec(s, 2, 2, {}), error);             // wider than the word
  CHECK_THROWS_AS(NormSpec(s, 1, std::nullopt, {3}), error); // suffix digit out of range
  CHECK_NOTHROW(NormSpec(s, 1, std::nullopt, {0}));          // suffix zero is fine
}

TEST_CASE("seed-family configurations") {
  CubeShape s4(4, 3);
  const auto cfg = LemmaConfig::st3(s4, 1, 1, 1, 2);
  CHECK(cfg.k() == 1);
  CHECK(cfg.l() == 1);
  CHECK(cfg.a() == 1);
  CHECK(cfg.b() == 2);
  const auto [S, T] = initial_sets(cfg);
  CHECK(S.to_string() == "*000");
  CHECK(T.to_string() == "0*12");

  CubeShape s3(3, 3);
  const auto [S1, T1] = initial_sets(LemmaConfig::st1(s3, 2, 1));
  CHECK(S1.to_string() == "**0");
  CHECK(T1.to_string() == "00*");

  CHECK(cfg.key() == "st3 q=3 k=1 l=1 a=1 b=2");

  CHECK_THROWS_AS(LemmaConfig::st1(s4, 1, 1), error);        // n != k+l
  CHECK_THROWS_AS(LemmaConfig::st2(s3, 1, 1, 0), error);     // tail digit must be nonzero
  CHECK_THROWS_AS(LemmaConfig::st2(s3, 1, 1, 3), error);     // tail digit out of range
  CHECK_THROWS_AS(LemmaConfig::st1(s3, -1, 4), error);
}

TEST_CASE("one-digit-suffix family: the predicted sets at each step") {
  CubeShape s(2, 3);
  const auto cfg = LemmaConfig::st2(s, 1, 0, 2);
  const auto [S, T] = initial_sets(cfg);
  CHECK(S.to_string() == "*0");
  CHECK(T.to_string() == "02");

  VertexSet seed = members_set(S);
  seed |= members_set(T);
  const auto rec = run(seed, s);
  CHECK(rec.rounds == 2);

  // at t=1 the predicted set is exactly the infected set
  CHECK(predicted_lower(cfg, 1) == set_of(s, {"00", "01", "02", "10", "20", "12", "22"}));
  CHECK(infected_at(rec, 1) == predicted_lower(cfg, 1));
  CHECK(predicted_lower(cfg, 2).is_full());
  CHECK_THROWS_AS(predicted_lower(cfg, 0), error);

  const auto excl = LemmaConfig::st5(s, 1, 0, 2);
  CHECK(predicted_excluded(excl, 0) == set_of(s, {"12", "22"}));
  CHECK(predicted_excluded(excl, 1) == set_of(s, {"11", "21"}));
  CHECK_FALSE(infected_at(rec, 0).intersects(predicted_excluded(excl, 0)));
  CHECK_FALSE(infected_at(rec, 1).intersects(predicted_excluded(excl, 1)));
  CHECK_THROWS_AS(predicted_excluded(excl, 2), error);
}

TEST_CASE("two-digit-suffix family: early steps are listed explicitly") {
  CubeShape s(2, 3);
  const auto cfg = LemmaConfig::st3(s, 0, 0, 1, 2);
  const auto [S, T] = initial_sets(cfg);
  CHECK(S.to_string() == "00");
  CHECK(T.to_string() == "12");

  VertexSet seed = members_set(S);
  seed |= members_set(T);
  const auto rec = run(seed, s);
  CHECK(rec.rounds == 3);

  CHECK(predicted_lower(cfg, 1) == set_of(s, {"00", "02", "10", "12"}));
  CHECK(predicted_lower(cfg, 1) == infected_at(rec, 1));

  // the corner adjacent to neither seed stays healthy through step 2
  VertexSet all_but(s.volume());
  for (std::uint64_t v = 0; v < s.volume(); ++v) all_but.set(static_cast<Vertex>(v));
  all_but.reset(s.vertex_from_string("21"));
  CHECK(predicted_lower(cfg, 2) == all_but);
  CHECK(predicted_lower(cfg, 2) == infected_at(rec, 2));
  CHECK(predicted_lower(cfg, 3).is_full());
}

TEST_CASE("no-suffix exclusion family") {
  CubeShape s(2, 3);
  const auto cfg = LemmaConfig::st4(s, 1, 1);
  // at t=0 every vertex with both digits nonzero is still healthy
  CHECK(predicted_excluded(cfg, 0) == set_of(s, {"11", "12", "21", "22"}));
  CHECK_THROWS_AS(predicted_excluded(cfg, 1), error);  // k+l-2 = 0

  VertexSet seed = members_set(Pattern::parse(s, "*0"));
  seed |= members_set(Pattern::parse(s, "0*"));
  CHECK_FALSE(infected_at(run(seed, s), 0).intersects(predicted_excluded(cfg, 0)));
}

TEST_CASE("step ranges are enforced") {
  CubeShape s2(2, 3);
  CHECK_THROWS_AS(predicted_lower(LemmaConfig::st1(s2, 1, 1), -1), error);
  CHECK_THROWS_AS(predicted_excluded(LemmaConfig::st6(s2, 0, 0, 1, 1), 0), error);

  CubeShape s1(1, 3);
  // with no prefix at all, no step is admissible for the one-digit family
  CHECK_THROWS_AS(predicted_excluded(LemmaConfig::st5(s1, 0, 0, 1), 0), error);
  CHECK_THROWS_AS(predicted_excluded(LemmaConfig::st5(s1, 0, 0, 1), 1), error);
}

TEST_CASE("lower and exclusion directions cannot be swapped") {
  CubeShape s(2, 3);
  CHECK_THROWS_AS(predicted_lower(LemmaConfig::st4(s, 1, 1), 0), error);
  CHECK_THROWS_AS(predicted_excluded(LemmaConfig::st1(s, 1, 1), 0), error);
}
