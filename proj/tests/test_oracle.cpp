#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "qperc/engine.hpp"
#include "qperc/oracle.hpp"
#include "qperc/vertex_set.hpp"

using namespace qperc;

TEST_CASE("full enumeration of the 3-point line") {
  CubeShape s(1, 3);
  const auto rep = max_time_exhaustive(s);
  CHECK(rep.mode == "full-enumeration");
  CHECK(rep.max_time == 1);
  CHECK(rep.seeds_examined == 8);
  REQUIRE(rep.witnesses.size() == 3);  // exactly the three pairs
  CHECK(rep.witnesses[0] == std::vector<Vertex>{0, 1});
  CHECK(rep.witnesses[1] == std::vector<Vertex>{0, 2});
  CHECK(rep.witnesses[2] == std::vector<Vertex>{1, 2});
}

TEST_CASE("full enumeration of the 3x3 grid") {
  CubeShape s(2, 3);
  const auto rep = max_time_exhaustive(s);
  CHECK(rep.max_time == 3);
  CHECK(rep.seeds_examined == 512);
  REQUIRE_FALSE(rep.witnesses.empty());
  for (const auto& w : rep.witnesses) {
    VertexSet seed(s.volume());
    for (Vertex v : w) seed.set(v);
    const auto rec = run(seed, s);
    CHECK(rec.percolated);
    CHECK(rec.rounds == 3);
  }
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(max_time_exhaustive(CubeShape(3, 3)), guard_error);
  CHECK_THROWS_AS(max_time_exhaustive(CubeShape(2, 5)), guard_error);
}

TEST_CASE("size-capped scan") {
  CubeShape s(2, 3);
  const auto rep = max_time_capped(s, 2);
  CHECK(rep.mode == "size-capped");
  CHECK(rep.size_cap == 2);
  CHECK(rep.max_time == 3);
  CHECK(rep.seeds_examined == 46);       // the empty set, 9 singletons, 36 pairs
  CHECK(rep.witnesses.size() == 18);     // every pair at distance two
  for (const auto& w : rep.witnesses)
    CHECK(hamming_distance(w[0], w[1], s) == 2);

  // a cap too small to span reports no time at all
  const auto none = max_time_capped(s, 1);
  CHECK(none.max_time == std::nullopt);
  CHECK(none.witnesses.empty());

  CHECK_THROWS_AS(max_time_capped(s, 3, 100), guard_error);  // budget
  CHECK_THROWS_AS(max_time_capped(s, -1), error);
}

TEST_CASE("containment-minimal spanning seeds") {
  CubeShape s(2, 3);
  const auto sets = minimal_spanning_sets(s, 3);
  REQUIRE(sets.size() == 18);
  for (const auto& w : sets) {
    REQUIRE(w.size() == 2);
    CHECK(hamming_distance(w[0], w[1], s) == 2);
  }
  CHECK(sets.front() == std::vector<Vertex>{0, 4});

  CHECK(minimal_spanning_sets(s, 0).empty());
  CHECK(minimal_spanning_sets(s, 1).empty());
}

TEST_CASE("work budget from the environment") {
  unsetenv("PERC_BUDGET");
  CHECK(work_budget_from_env() == kDefaultWorkBudget);
  setenv("PERC_BUDGET", "12345", 1);
  CHECK(work_budget_from_env() == 12345);
  setenv("PERC_BUDGET", "junk", 1);
  CHECK_THROWS_AS(work_budget_from_env(), error);
  setenv("PERC_BUDGET", "-3", 1);
  CHECK_THROWS_AS(work_budget_from_env(), error);
  unsetenv("PERC_BUDGET");
}
