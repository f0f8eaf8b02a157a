#pragma once
// Maximum 2-neighbour percolation time on Q_{n,q} for q >= 3: the closed
// form M_q(n) and seeds that attain it.
//
// The closed form follows the three-step recursion
//   q  = 3:  M(n) = M(n-3) + 2n - 1
//   q >= 4:  M(n) = M(n-3) + 2n
// over the base values M(0)=0, M(1)=1, M(2)=3, which resolves to
//   q  = 3:  M(n) = (n^2 + 2n)/3, plus 1/3 when n = 2 (mod 3)
//   q >= 4:  M(n) = (n^2 + 3n)/3, minus 1/3 when n != 0 (mod 3).
//
// The matching seed embeds the (n-3)-dimensional seed in [*]^{n-3}000 --
// relabelled so the all-zeros vertex is the last one infected there -- and
// adds the lone vertices [0]^{n-3}110 and [2]^n.  The cascade out of the
// filled subcube then takes 2n-1 extra rounds when q = 3 and 2n when q >= 4
// (extra symbols outside {0,1,2} delay the final stretch by one round).

#include <cstdint>
#include <string>
#include <vector>

#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

inline std::int64_t max_time_formula(int q, int n) {
  if (q < 3) throw error("max_time_formula: needs q >= 3, got q=" + std::to_string(q));
  if (n < 0) throw error("max_time_formula: needs n >= 0");
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (n == 2) return 3;
  const std::int64_t nn = n;
  if (q == 3) return n % 3 == 2 ? (nn * nn + 2 * nn + 1) / 3 : (nn * nn + 2 * nn) / 3;
  return n % 3 == 0 ? nn * nn / 3 + nn : (nn * nn + 3 * nn - 1) / 3;
}

struct ExtremalSeed {
  CubeShape shape;
  VertexSet vertices;
  std::vector<std::string> provenance;  // human-readable construction steps
};

inline VertexSet last_infected(const InfectionRecord& rec) {
  if (!rec.percolated) throw error("last_infected: the seed did not percolate");
  VertexSet out(rec.shape.volume());
  for (std::uint64_t v = 0; v < rec.shape.volume(); ++v)
    if (rec.time_of[v] == rec.rounds) out.set(static_cast<Vertex>(v));
  return out;
}

// Swap symbols per coordinate so that some maximal-timestamp vertex becomes
// all zeros.  Percolation time is preserved (the maps are automorphisms).
inline ExtremalSeed relabel_zeros_last(const ExtremalSeed& s) {
  const InfectionRecord rec = run(s.vertices, s.shape);
  if (!rec.percolated) throw error("relabel_zeros_last: the seed did not percolate");
  const Vertex w = last_infected(rec).to_vector().front();
  std::vector<std::vector<int>> maps(s.shape.n());
  for (int i = 0; i < s.shape.n(); ++i) {
    maps[i].resize(s.shape.q());
    for (int c = 0; c < s.shape.q(); ++c) maps[i][c] = c;
    std::swap(maps[i][0], maps[i][s.shape.digit(w, i)]);
  }
  ExtremalSeed out{s.shape, VertexSet(s.shape.volume()), s.provenance};
  s.vertices.for_each([&](Vertex v) { out.vertices.set(relabel_symbols(v, s.shape, maps)); });
  out.provenance.push_back("relabel symbols per coordinate: " + s.shape.vertex_to_string(w) +
                           " -> all zeros");
  return out;
}

inline ExtremalSeed build_extremal_seed(int q, int n,
                                        std::uint64_t max_vertices = kDefaultVertexGuard) {
  if (q < 3) throw error("build_extremal_seed: needs q >= 3, got q=" + std::to_string(q));
  if (n < 0) throw error("build_extremal_seed: needs n >= 0");
  CubeShape shape(n, q, max_vertices);

  if (n == 0)
    return {shape, VertexSet::full(1), {"base n=0: the unique vertex"}};
  if (n == 1)
    return {shape, set_of_codes(shape, {0, 2}), {"base n=1: {0, 2}"}};
  if (n == 2)
    return {shape, set_of(shape, {"00", "11"}), {"base n=2: {00, 11}"}};

  const ExtremalSeed sub = relabel_zeros_last(build_extremal_seed(q, n - 3, max_vertices));
  ExtremalSeed out{shape, VertexSet(shape.volume()), sub.provenance};
  // sub-seed in the first n-3 coordinates, suffix 000
  sub.vertices.for_each([&](Vertex v) {
    out.vertices.set(static_cast<Vertex>(static_cast<std::uint64_t>(v) * shape.pow(3)));
  });
  out.vertices.set(static_cast<Vertex>(shape.pow(2) + shape.pow(1)));  // [0]^{n-3}110
  std::uint64_t all_twos = 0;
  for (int i = 0; i < n; ++i) all_twos += 2 * shape.pow(i);
  out.vertices.set(static_cast<Vertex>(all_twos));  // [2]^n
  out.provenance.push_back("embed the dimension-" + std::to_string(n - 3) +
                           " seed into [*]^" + std::to_string(n - 3) + "000");
  out.provenance.push_back("add [0]^" + std::to_string(n - 3) + "110");
  out.provenance.push_back("add [2]^" + std::to_string(n));
  return out;
}

// Cylinder over the seed: every symbol in a fresh last coordinate.  The new
// seed percolates in exactly the same number of rounds one dimension up.
inline ExtremalSeed lift_seed(const ExtremalSeed& s,
                              std::uint64_t max_vertices = kDefaultVertexGuard) {
  CubeShape up(s.shape.n() + 1, s.shape.q(), max_vertices);
  ExtremalSeed out{up, VertexSet(up.volume()), s.provenance};
  s.vertices.for_each([&](Vertex v) {
    for (int c = 0; c < up.q(); ++c)
      out.vertices.set(static_cast<Vertex>(static_cast<std::uint64_t>(v) * up.q() +
                                           static_cast<std::uint64_t>(c)));
  });
  out.provenance.push_back("cylinder lift to dimension " + std::to_string(up.n()));
  return out;
}

}  // namespace qperc
