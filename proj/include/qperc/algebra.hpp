#pragma once
// Structure of closed sets under the 2-neighbour rule.
//
// A set is closed when no outside vertex sees two of its members.  Closed
// sets are exactly disjoint unions of subcubes that pairwise keep Hamming
// distance >= 3, which makes them decomposable by greedily growing a maximal
// pattern around any uncovered vertex.  Spanning structure is probed through
// internally spanned subcubes: Q^x is internally spanned by a seed A when
// the closure of A restricted to Q^x is all of Q^x.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

inline bool is_closed(const VertexSet& s, const CubeShape& shape) {
  if (s.universe() != shape.volume()) throw error("is_closed: universe mismatch");
  for (std::uint64_t c = 0; c < shape.volume(); ++c) {
    const auto v = static_cast<Vertex>(c);
    if (s.test(v)) continue;
    int inside = 0;
    for (Vertex u : neighbors(v, shape))
      if (s.test(u) && ++inside >= 2) return false;
  }
  return true;
}

struct ClosedDecomposition {
  std::vector<Pattern> components;
  // True iff the components cover the set exactly, disjointly, with pairwise
  // distance >= 3.  A false value is an implementation bug, not a property
  // of the input.
  bool valid = true;
};

inline ClosedDecomposition decompose_closed(const VertexSet& s, const CubeShape& shape) {
  if (!is_closed(s, shape)) throw error("decompose_closed: the set is not closed");
  ClosedDecomposition out;
  VertexSet uncovered = s;
  while (!uncovered.empty()) {
    const Vertex v0 = uncovered.to_vector().front();  // smallest uncovered vertex
    Pattern comp = Pattern::from_vertex(shape, v0);
    for (int i = 0; i < shape.n(); ++i) {
      std::vector<int> sym = comp.symbols();
      sym[i] = Pattern::kStar;
      Pattern widened(shape, std::move(sym));
      bool all_in = true;
      for (Vertex m : widened.member_codes()) all_in = all_in && s.test(m);
      if (all_in) comp = std::move(widened);
    }
    for (Vertex m : comp.member_codes()) {
      if (!uncovered.test(m)) out.valid = false;  // overlap with an earlier component
      uncovered.reset(m);
    }
    out.components.push_back(std::move(comp));
  }
  for (std::size_t i = 0; i < out.components.size() && out.valid; ++i)
    for (std::size_t j = i + 1; j < out.components.size(); ++j)
      if (distance(out.components[i], out.components[j]) < 3) {
        out.valid = false;
        break;
      }
  return out;
}

inline bool is_internally_spanned(const VertexSet& seed, const Pattern& sub) {
  const CubeShape& shape = sub.shape();
  if (seed.universe() != shape.volume())
    throw error("is_internally_spanned: universe mismatch");
  const VertexSet members = members_set(sub);
  return closure(seed & members, shape) == members;
}

inline std::uint64_t subcube_count(const CubeShape& shape) {
  // Every pattern is a subcube, so this is (q+1)^n, saturating on overflow.
  std::uint64_t c = 1;
  for (int i = 0; i < shape.n(); ++i) {
    if (c > ~std::uint64_t{0} / static_cast<std::uint64_t>(shape.q() + 1))
      return ~std::uint64_t{0};
    c *= static_cast<std::uint64_t>(shape.q() + 1);
  }
  return c;
}

// Visit every pattern of the shape; symbols cycle 0..q-1 then * per
// coordinate, rightmost coordinate fastest.
template <class F>
inline void for_each_subcube(const CubeShape& shape, F&& f) {
  std::vector<int> sym(shape.n(), 0);
  const int q = shape.q();
  for (;;) {
    f(Pattern(shape, sym));
    int i = shape.n() - 1;
    while (i >= 0) {
      if (sym[i] == Pattern::kStar) {
        sym[i] = 0;
        --i;
      } else if (sym[i] == q - 1) {
        sym[i] = Pattern::kStar;
        break;
      } else {
        ++sym[i];
        break;
      }
    }
    if (i < 0) break;
  }
}

inline constexpr std::uint64_t kDefaultSubcubeGuard = 100000;

// Dimensions l for which some Q_l is internally spanned by the seed.  The
// seed must span the whole cube.
inline std::set<int> spanned_dims(const VertexSet& seed, const CubeShape& shape,
                                  std::uint64_t max_subcubes = kDefaultSubcubeGuard) {
  if (!closure(seed, shape).is_full())
    throw error("spanned_dims: the seed does not span the cube");
  if (subcube_count(shape) > max_subcubes)
    throw guard_error("spanned_dims: " + std::to_string(subcube_count(shape)) +
                      " subcubes exceed the guard of " + std::to_string(max_subcubes));
  std::set<int> dims;
  for_each_subcube(shape, [&](const Pattern& p) {
    const int d = p.dim();
    if (dims.count(d)) return;
    if (is_internally_spanned(seed, p)) dims.insert(d);
  });
  return dims;
}

// A nested chain of internally spanned subcubes from a single seed vertex up
// to the whole cube.  chain[j+1] is the closure of chain[j] with mergers[j],
// an internally spanned subcube of dimension <= dim(chain[j]); consequently
// dim(chain[j+1]) <= 2 dim(chain[j]) + 2.
struct SpanWitness {
  std::vector<Pattern> chain;
  std::vector<Pattern> mergers;
};

inline std::optional<SpanWitness> find_span_witness(
    const VertexSet& seed, const CubeShape& shape,
    std::uint64_t max_subcubes = kDefaultSubcubeGuard) {
  if (!closure(seed, shape).is_full())
    throw error("find_span_witness: the seed does not span the cube");
  if (subcube_count(shape) > max_subcubes)
    throw guard_error("find_span_witness: " + std::to_string(subcube_count(shape)) +
                      " subcubes exceed the guard of " + std::to_string(max_subcubes));

  // All internally spanned subcubes, smallest dimension first.
  std::vector<Pattern> spanned;
  for_each_subcube(shape, [&](const Pattern& p) {
    if (is_internally_spanned(seed, p)) spanned.push_back(p);
  });
  std::stable_sort(spanned.begin(), spanned.end(),
                   [](const Pattern& a, const Pattern& b) { return a.dim() < b.dim(); });

  const Pattern goal = Pattern::all_stars(shape);
  std::set<std::vector<int>> dead;  // tops that cannot reach the goal

  // Depth-first: grow the top by joining internally spanned subcubes of no
  // larger dimension; joins strictly increase dimension, so this terminates.
  std::vector<std::pair<Pattern, Pattern>> steps;  // (next top, merger)
  auto dfs = [&](auto&& self, const Pattern& top) -> bool {
    if (top == goal) return true;
    if (dead.count(top.symbols())) return false;
    for (const Pattern& m : spanned) {
      if (m.dim() > top.dim()) break;
      if (distance(top, m) > 2) continue;
      const Pattern next = join(top, m);
      if (next == top) continue;
      if (!is_internally_spanned(seed, next)) continue;
      if (self(self, next)) {
        steps.emplace_back(next, m);
        return true;
      }
    }
    dead.insert(top.symbols());
    return false;
  };

  for (const Pattern& start : spanned) {
    if (start.dim() > 0) break;
    steps.clear();
    if (dfs(dfs, start)) {
      SpanWitness w;
      w.chain.push_back(start);
      for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        w.chain.push_back(it->first);
        w.mergers.push_back(it->second);
      }
      return w;
    }
  }
  return std::nullopt;
}

// Exact number of rounds for Q^x u Q^y to fill Q^{x v y} when the patterns
// sit at distance d <= 2 and neither one already has the join's dimension:
// with m = dim(x v y) and p common stars, it takes m - p - 1 + d rounds.
inline int two_cube_time(const Pattern& x, const Pattern& y) {
  check_same_shape(x, y, "two_cube_time");
  const int d = distance(x, y);
  if (d > 2)
    throw error("two_cube_time: patterns at distance " + std::to_string(d) +
                "; the closure does not merge them");
  const Pattern z = join(x, y);
  const int m = z.dim();
  if (x.dim() >= m || y.dim() >= m)
    throw error("two_cube_time: degenerate pair (one pattern already spans the join)");
  const int p = common_stars(x, y);
  return m - p - 1 + d;
}

}  // namespace qperc
