#pragma once
// Brute-force ground truth for maximum percolation time, independent of the
// closed form and the constructions: enumerate seeds, run the process, keep
// the slowest spanning ones.
//
// Full enumeration walks all 2^(q^n) subsets and is guarded accordingly;
// size-capped enumeration walks subsets up to a given size and reports a
// lower bound only.  Seeds are visited by size ascending, then
// lexicographically by sorted vertex codes, so reports are reproducible
// run to run.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

inline constexpr std::uint64_t kDefaultWorkBudget = 100000000;  // vertex updates

// PERC_BUDGET overrides the default work budget.
inline std::uint64_t work_budget_from_env() {
  if (const char* env = std::getenv("PERC_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    // strtoull would happily wrap a negative sign, so insist on digits
    if (env[0] >= '0' && env[0] <= '9' && end && *end == '\0' && v > 0) return v;
    throw error("PERC_BUDGET is not a positive integer: " + std::string(env));
  }
  return kDefaultWorkBudget;
}

struct OracleReport {
  CubeShape shape;
  std::string mode;             // "full-enumeration" or "size-capped"
  std::optional<int> size_cap;  // present in size-capped mode
  std::optional<int> max_time;  // empty when no spanning seed was found
  std::vector<std::vector<Vertex>> witnesses;
  std::uint64_t seeds_examined = 0;
};

namespace detail {

// Visit subsets of {0..V-1} by size ascending, then lexicographically.
// Stop early if f returns false.
template <class F>
inline void for_each_subset_by_size(std::uint64_t V, int max_size, F&& f) {
  std::vector<Vertex> combo;
  for (int size = 0; size <= max_size; ++size) {
    combo.resize(size);
    for (int i = 0; i < size; ++i) combo[i] = static_cast<Vertex>(i);
    if (size == 0) {
      if (!f(combo)) return;
      continue;
    }
    if (static_cast<std::uint64_t>(size) > V) break;
    for (;;) {
      if (!f(combo)) return;
      int i = size - 1;
      while (i >= 0 && combo[i] == V - static_cast<std::uint64_t>(size - i)) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < size; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
}

inline long double subsets_up_to(std::uint64_t V, int cap) {
  long double total = 0, c = 1;  // C(V, 0)
  for (int s = 0; s <= cap && static_cast<std::uint64_t>(s) <= V; ++s) {
    total += c;
    c = c * static_cast<long double>(V - static_cast<std::uint64_t>(s)) /
        static_cast<long double>(s + 1);
  }
  return total;
}

// Spanning seeds can never beat half the dimension: |S| >= n/2 + 1.  A
// violation here is an engine bug, so it is surfaced loudly.
inline void check_spanning_size(std::size_t size, const CubeShape& shape) {
  if (2 * size < static_cast<std::size_t>(shape.n()) + 2)
    throw error("oracle: a spanning seed of size " + std::to_string(size) +
                " undercuts the n/2+1 bound; the engine is broken");
}

}  // namespace detail

inline OracleReport max_time_exhaustive(const CubeShape& shape) {
  const std::uint64_t V = shape.volume();
  if (V > 16)
    throw guard_error("max_time_exhaustive: 2^" + std::to_string(V) +
                      " subsets is past the guard (q^n <= 16); use the size-capped mode");

  OracleReport rep{shape, "full-enumeration", std::nullopt, std::nullopt, {}, 0};
  std::optional<int> minimal_max;  // the same maximum, restricted to minimal seeds
  VertexSet seed(V);
  detail::for_each_subset_by_size(V, static_cast<int>(V), [&](const std::vector<Vertex>& combo) {
    ++rep.seeds_examined;
    seed.clear();
    for (Vertex v : combo) seed.set(v);
    const InfectionRecord rec = run(seed, shape);
    if (!rec.percolated) return true;
    detail::check_spanning_size(combo.size(), shape);
    if (!rep.max_time || rec.rounds > *rep.max_time) {
      rep.max_time = rec.rounds;
      rep.witnesses.clear();
    }
    if (rec.rounds == *rep.max_time) rep.witnesses.push_back(combo);

    // Larger seeds are never slower, so the maximum restricted to
    // containment-minimal spanning seeds must agree with the full maximum.
    bool minimal = true;
    for (std::size_t drop = 0; drop < combo.size() && minimal; ++drop) {
      VertexSet sub(V);
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (j != drop) sub.set(combo[j]);
      minimal = !closure(sub, shape).is_full();
    }
    if (minimal && (!minimal_max || rec.rounds > *minimal_max)) minimal_max = rec.rounds;
    return true;
  });
  if (rep.max_time != minimal_max)
    throw error("max_time_exhaustive: full and minimal-seed enumeration disagree; "
                "the engine is broken");
  return rep;
}

inline OracleReport max_time_capped(const CubeShape& shape, int size_cap,
                                    std::uint64_t budget = kDefaultWorkBudget) {
  if (size_cap < 0) throw error("max_time_capped: negative size cap");
  const std::uint64_t V = shape.volume();
  const long double est = detail::subsets_up_to(V, size_cap) *
                          static_cast<long double>(V) *
                          static_cast<long double>(shape.degree());
  if (est > static_cast<long double>(budget))
    throw guard_error("max_time_capped: estimated " + std::to_string(est) +
                      " vertex updates exceed the budget of " + std::to_string(budget));

  OracleReport rep{shape, "size-capped", size_cap, std::nullopt, {}, 0};
  VertexSet seed(V);
  detail::for_each_subset_by_size(V, size_cap, [&](const std::vector<Vertex>& combo) {
    ++rep.seeds_examined;
    if (combo.empty()) return true;
    seed.clear();
    for (Vertex v : combo) seed.set(v);
    const InfectionRecord rec = run(seed, shape);
    if (!rec.percolated) return true;
    detail::check_spanning_size(combo.size(), shape);
    if (!rep.max_time || rec.rounds > *rep.max_time) {
      rep.max_time = rec.rounds;
      rep.witnesses.clear();
    }
    if (rec.rounds == *rep.max_time) rep.witnesses.push_back(combo);
    return true;
  });
  return rep;
}

// Spanning seeds of size <= cap from which no vertex can be dropped.
inline std::vector<std::vector<Vertex>> minimal_spanning_sets(
    const CubeShape& shape, int size_cap, std::uint64_t budget = kDefaultWorkBudget) {
  if (size_cap < 0) throw error("minimal_spanning_sets: negative size cap");
  const std::uint64_t V = shape.volume();
  const long double est = detail::subsets_up_to(V, size_cap) *
                          static_cast<long double>(V) *
                          static_cast<long double>(shape.degree()) *
                          static_cast<long double>(size_cap + 1);
  if (est > static_cast<long double>(budget))
    throw guard_error("minimal_spanning_sets: estimated " + std::to_string(est) +
                      " vertex updates exceed the budget of " + std::to_string(budget));

  std::vector<std::vector<Vertex>> out;
  VertexSet seed(V);
  detail::for_each_subset_by_size(V, size_cap, [&](const std::vector<Vertex>& combo) {
    if (combo.empty()) return true;
    seed.clear();
    for (Vertex v : combo) seed.set(v);
    if (!closure(seed, shape).is_full()) return true;
    detail::check_spanning_size(combo.size(), shape);
    for (std::size_t drop = 0; drop < combo.size(); ++drop) {
      VertexSet sub(V);
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (j != drop) sub.set(combo[j]);
      if (closure(sub, shape).is_full()) return true;  // not minimal
    }
    out.push_back(combo);
    return true;
  });
  return out;
}

}  // namespace qperc
