#pragma once
// Synchronous r-neighbour bootstrap percolation on Q_{n,q}.
//
//   A_0 = seed,  A_t = A_{t-1} u { v : |N(v) n A_{t-1}| >= r }.
//
// One run walks the frontier of newly infected vertices and bumps a
// saturating counter on each healthy neighbour; a vertex whose counter
// reaches r joins the next round.  Each infected vertex is visited exactly
// once, so a run costs O(q^n * n(q-1)) updates in the worst case.

#include <cstdint>
#include <optional>
#include <vector>

#include "qperc/error.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

inline constexpr std::uint16_t kNeverTime = 0xFFFF;

struct InfectionRecord {
  CubeShape shape;
  std::vector<std::uint16_t> time_of;  // kNeverTime = not infected
  int rounds = 0;                      // largest finite timestamp
  bool percolated = false;
};

inline InfectionRecord run(const VertexSet& seed, const CubeShape& shape, int r = 2) {
  if (seed.universe() != shape.volume())
    throw error("run: seed universe does not match the shape");
  if (r < 1) throw error("run: threshold must be >= 1, got " + std::to_string(r));
  if (r > 0xFFFE) throw error("run: threshold too large");

  const int n = shape.n(), q = shape.q();
  const std::uint64_t V = shape.volume();
  InfectionRecord rec{shape, std::vector<std::uint16_t>(V, kNeverTime), 0, false};
  std::vector<std::uint16_t> cnt(V, 0);
  const auto rr = static_cast<std::uint16_t>(r);

  std::vector<Vertex> frontier = seed.to_vector();
  std::uint64_t infected = frontier.size();
  for (Vertex v : frontier) rec.time_of[v] = 0;

  std::vector<Vertex> next;
  int t = 0;
  while (!frontier.empty()) {
    next.clear();
    for (Vertex v : frontier) {
      std::uint64_t pw = 1;
      for (int i = n - 1; i >= 0; --i) {
        const int d = static_cast<int>((v / pw) % static_cast<std::uint64_t>(q));
        const std::uint64_t base = v - static_cast<std::uint64_t>(d) * pw;
        for (int s = 0; s < q; ++s) {
          if (s == d) continue;
          const auto u = static_cast<Vertex>(base + static_cast<std::uint64_t>(s) * pw);
          if (rec.time_of[u] != kNeverTime) continue;
          if (cnt[u] < rr && ++cnt[u] == rr) next.push_back(u);
        }
        pw *= static_cast<std::uint64_t>(q);
      }
    }
    ++t;
    if (t > 0xFFFE) throw error("run: timestamp overflow");
    for (Vertex u : next) rec.time_of[u] = static_cast<std::uint16_t>(t);
    infected += next.size();
    frontier.swap(next);
  }
  rec.rounds = t == 0 ? 0 : t - 1;
  rec.percolated = infected == V;
  return rec;
}

// A_t as a set; t at or beyond the final round returns the closure.
inline VertexSet infected_at(const InfectionRecord& rec, int t) {
  if (t < 0) throw error("infected_at: negative step");
  VertexSet s(rec.shape.volume());
  for (std::uint64_t v = 0; v < rec.shape.volume(); ++v)
    if (rec.time_of[v] != kNeverTime && rec.time_of[v] <= t)
      s.set(static_cast<Vertex>(v));
  return s;
}

inline VertexSet closure(const VertexSet& seed, const CubeShape& shape, int r = 2) {
  const InfectionRecord rec = run(seed, shape, r);
  VertexSet s(shape.volume());
  for (std::uint64_t v = 0; v < shape.volume(); ++v)
    if (rec.time_of[v] != kNeverTime) s.set(static_cast<Vertex>(v));
  return s;
}

// Rounds until full infection under the 2-neighbour rule, or nullopt if the
// seed does not span.
inline std::optional<int> percolation_time(const VertexSet& seed, const CubeShape& shape) {
  const InfectionRecord rec = run(seed, shape, 2);
  if (!rec.percolated) return std::nullopt;
  return rec.rounds;
}

}  // namespace qperc
