#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

#include "qperc/engine.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

using namespace qperc;

TEST_CASE("antipodal pair on the 3x3 grid: full timestamp table") {
  CubeShape s(2, 3);
  const auto rec = run(set_of(s, {"00", "11"}), s);
  REQUIRE(rec.percolated);
  CHECK(rec.rounds == 3);

  const std::map<std::string, int> expected{
      {"00", 0}, {"11", 0}, {"01", 1}, {"10", 1}, {"02", 2},
      {"20", 2}, {"12", 2}, {"21", 2}, {"22", 3}};
  for (const auto& [word, t] : expected)
    CHECK(rec.time_of[s.vertex_from_string(word)] == t);

  CHECK(infected_at(rec, 0) == set_of(s, {"00", "11"}));
  CHECK(infected_at(rec, 1) == set_of(s, {"00", "11", "01", "10"}));
  CHECK(infected_at(rec, 3).is_full());
  CHECK(infected_at(rec, 100).is_full());
  CHECK_THROWS_AS(infected_at(rec, -1), error);

  CHECK(percolation_time(set_of(s, {"00", "11"}), s) == 3);
}

TEST_CASE("seeds that do not percolate") {
  CubeShape s(1, 3);
  const auto rec = run(set_of(s, {"0"}), s);
  CHECK_FALSE(rec.percolated);
  CHECK(rec.rounds == 0);
  CHECK(closure(set_of(s, {"0"}), s) == set_of(s, {"0"}));
  CHECK(percolation_time(set_of(s, {"0"}), s) == std::nullopt);

  // two seeds as distant lines: everything between them fills in
  CubeShape g(2, 3);
  CHECK_FALSE(closure(set_of(g, {"00", "01"}), g).is_full());
  CHECK(closure(set_of(g, {"00", "01"}), g) == set_of(g, {"00", "01", "02"}));
}

TEST_CASE("empty and full seeds are fixed points") {
  CubeShape s(2, 3);
  const auto empty_rec = run(VertexSet(s.volume()), s);
  CHECK_FALSE(empty_rec.percolated);
  CHECK(empty_rec.rounds == 0);
  CHECK(infected_at(empty_rec, 5).empty());

  const auto full_rec = run(VertexSet::full(s.volume()), s);
  CHECK(full_rec.percolated);
  CHECK(full_rec.rounds == 0);
}

TEST_CASE("other thresholds") {
  CubeShape s(2, 3);
  // r=1 is breadth-first search from the seed
  const auto bfs = run(set_of(s, {"00"}), s, 1);
  CHECK(bfs.percolated);
  CHECK(bfs.rounds == 2);
  CHECK(bfs.time_of[s.vertex_from_string("22")] == 2);
  CHECK(bfs.time_of[s.vertex_from_string("20")] == 1);

  // r=3 stalls immediately on two seeds
  const auto stall = run(set_of(s, {"00", "11"}), s, 3);
  CHECK_FALSE(stall.percolated);
  CHECK(stall.rounds == 0);

  CHECK_THROWS_AS(run(set_of(s, {"00"}), s, 0), error);
  CHECK_THROWS_AS(run(set_of(s, {"00"}), s, 0xFFFF), error);
}

TEST_CASE("universe mismatch is rejected") {
  CubeShape s(2, 3);
  CHECK_THROWS_AS(run(VertexSet(8), s), error);
}

TEST_CASE("single-vertex cube") {
  CubeShape s(0, 4);
  const auto rec = run(VertexSet::full(1), s);
  CHECK(rec.percolated);
  CHECK(rec.rounds == 0);
}

namespace {

VertexSet random_subset(const CubeShape& s, std::mt19937& rng, double p) {
  std::bernoulli_distribution coin(p);
  VertexSet out(s.volume());
  for (std::uint64_t v = 0; v < s.volume(); ++v)
    if (coin(rng)) out.set(static_cast<Vertex>(v));
  return out;
}

const std::vector<CubeShape>& small_shapes() {
  static const std::vector<CubeShape> shapes{
      CubeShape(1, 3), CubeShape(2, 3), CubeShape(3, 3), CubeShape(4, 3),
      CubeShape(5, 3), CubeShape(1, 4), CubeShape(2, 4), CubeShape(3, 4),
      CubeShape(1, 5), CubeShape(2, 5)};
  return shapes;
}

}  // namespace

TEST_CASE("adding seeds never delays any vertex") {
  std::mt19937 rng(7001);
  std::uniform_real_distribution<double> dens(0.05, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& s = small_shapes()[trial % small_shapes().size()];
    const VertexSet a = random_subset(s, rng, dens(rng));
    VertexSet b = a;
    b |= random_subset(s, rng, 0.1);
    const auto ra = run(a, s), rb = run(b, s);
    for (std::uint64_t v = 0; v < s.volume(); ++v)
      REQUIRE(rb.time_of[v] <= ra.time_of[v]);  // never-infected is the max value
  }
}

TEST_CASE("timestamps are equivariant under cube automorphisms") {
  std::mt19937 rng(7002);
  std::uniform_real_distribution<double> dens(0.05, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& s = small_shapes()[trial % small_shapes().size()];
    const VertexSet seed = random_subset(s, rng, dens(rng));

    std::vector<std::vector<int>> maps(s.n());
    for (auto& m : maps) {
      m.resize(s.q());
      for (int i = 0; i < s.q(); ++i) m[i] = i;
      std::shuffle(m.begin(), m.end(), rng);
    }
    std::vector<int> source_of(s.n());
    for (int i = 0; i < s.n(); ++i) source_of[i] = i;
    std::shuffle(source_of.begin(), source_of.end(), rng);

    const auto phi = [&](Vertex v) {
      return permute_coords(relabel_symbols(v, s, maps), s, source_of);
    };
    VertexSet mapped(s.volume());
    seed.for_each([&](Vertex v) { mapped.set(phi(v)); });

    const auto r0 = run(seed, s), r1 = run(mapped, s);
    CHECK(r0.rounds == r1.rounds);
    CHECK(r0.percolated == r1.percolated);
    for (std::uint64_t v = 0; v < s.volume(); ++v)
      REQUIRE(r1.time_of[phi(static_cast<Vertex>(v))] == r0.time_of[v]);
  }
}

TEST_CASE("closure is idempotent and monotone") {
  std::mt19937 rng(7003);
  std::uniform_real_distribution<double> dens(0.05, 0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& s = small_shapes()[trial % small_shapes().size()];
    const VertexSet seed = random_subset(s, rng, dens(rng));
    const VertexSet cl = closure(seed, s);
    CHECK(cl.contains_all(seed));
    CHECK(closure(cl, s) == cl);
  }
}
