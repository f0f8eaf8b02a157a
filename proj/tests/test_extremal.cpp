#include <catch_amalgamated.hpp>

#include "qperc/engine.hpp"
#include "qperc/extremal.hpp"

using namespace qperc;

TEST_CASE("closed-form maximum time: frozen tables") {
  const std::vector<std::int64_t> q3{0, 1, 3, 5, 8, 12, 16, 21, 27, 33};
  const std::vector<std::int64_t> q4{0, 1, 3, 6, 9, 13, 18, 23, 29, 36};
  for (int n = 0; n <= 9; ++n) {
    CHECK(max_time_formula(3, n) == q3[n]);
    CHECK(max_time_formula(4, n) == q4[n]);
    CHECK(max_time_formula(7, n) == q4[n]);  // one branch for every q >= 4
  }
  CHECK(max_time_formula(3, 30) == 320);
  CHECK(max_time_formula(4, 30) == 330);

  CHECK_THROWS_AS(max_time_formula(2, 3), error);
  CHECK_THROWS_AS(max_time_formula(3, -1), error);
}

TEST_CASE("seed construction: bases") {
  const auto s0 = build_extremal_seed(3, 0);
  CHECK(s0.vertices.count() == 1);
  CHECK(run(s0.vertices, s0.shape).rounds == 0);

  const auto s1 = build_extremal_seed(3, 1);
  CHECK(s1.vertices == set_of(s1.shape, {"0", "2"}));
  CHECK(run(s1.vertices, s1.shape).rounds == 1);

  const auto s2 = build_extremal_seed(4, 2);
  CHECK(s2.vertices == set_of(s2.shape, {"00", "11"}));
  CHECK(run(s2.vertices, s2.shape).rounds == 3);
}

TEST_CASE("seed construction: first recursive step") {
  const auto s3 = build_extremal_seed(3, 3);
  CHECK(s3.vertices == set_of(s3.shape, {"000", "110", "222"}));
  const auto rec = run(s3.vertices, s3.shape);
  CHECK(rec.percolated);
  CHECK(rec.rounds == 5);
  CHECK_FALSE(s3.provenance.empty());

  const auto s4 = build_extremal_seed(3, 4);
  CHECK(s4.vertices == set_of(s4.shape, {"1000", "2000", "0110", "2222"}));
  CHECK(run(s4.vertices, s4.shape).rounds == 8);
}

TEST_CASE("relabelling moves a slowest vertex to the origin") {
  const auto s = build_extremal_seed(3, 2);
  const auto moved = relabel_zeros_last(s);
  const auto rec0 = run(s.vertices, s.shape);
  const auto rec1 = run(moved.vertices, moved.shape);
  CHECK(rec1.rounds == rec0.rounds);
  CHECK(rec1.percolated);
  CHECK(last_infected(rec1).test(0));  // the all-zeros vertex finishes last

  CHECK_THROWS_AS(last_infected(run(set_of(s.shape, {"00"}), s.shape)), error);
}

TEST_CASE("cylinder lift preserves the time") {
  const auto s = build_extremal_seed(3, 2);
  const auto up = lift_seed(s);
  CHECK(up.shape.n() == 3);
  CHECK(up.vertices == set_of(up.shape, {"000", "001", "002", "110", "111", "112"}));
  const auto rec = run(up.vertices, up.shape);
  CHECK(rec.percolated);
  CHECK(rec.rounds == 3);
}

TEST_CASE("last infected set of the antipodal pair") {
  CubeShape s(2, 3);
  const auto rec = run(set_of(s, {"00", "11"}), s);
  CHECK(last_infected(rec) == set_of(s, {"22"}));
}
