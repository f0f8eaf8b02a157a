#pragma once
// Verification suites: each one sweeps a family of configurations, compares a
// claimed set or value against the engine, and reports one pass/fail item per
// configuration.  Suites are named after the statements they check (st1..st6,
// lemma3, lemma4, lemma5, lemma6, lemma13) plus formula / monotonicity /
// oracle cross-checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qperc/algebra.hpp"
#include "qperc/engine.hpp"
#include "qperc/error.hpp"
#include "qperc/extremal.hpp"
#include "qperc/hamming.hpp"
#include "qperc/norms.hpp"
#include "qperc/oracle.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

struct CheckItem {
  std::string key;
  bool pass = true;
  std::string detail;  // counts on pass, counterexample on fail
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckItem> items;

  int passed() const {
    int c = 0;
    for (const auto& it : items) c += it.pass;
    return c;
  }
  int failed() const { return static_cast<int>(items.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

struct VerifyOptions {
  int q = 3;
  int max_n = 4;                 // largest dimension for sweeps over n
  int max_k = 2, max_l = 2;      // prefix/middle block sweep bounds
  std::optional<int> k, l;       // exact block sizes (override the sweep)
  int trials = 200;              // randomized-scan sample count
  std::uint32_t rng_seed = 20270331u;
  std::uint64_t max_vertices = kDefaultVertexGuard;
};

namespace detail {

inline std::optional<Vertex> first_not_in(const VertexSet& sub, const VertexSet& super) {
  for (Vertex v : sub.to_vector())
    if (!super.test(v)) return v;
  return std::nullopt;
}

inline std::optional<Vertex> first_common(const VertexSet& a, const VertexSet& b) {
  for (Vertex v : a.to_vector())
    if (b.test(v)) return v;
  return std::nullopt;
}

// Steps t at which the family's statement applies.
inline std::pair<int, int> step_window(const LemmaConfig& cfg, int rounds) {
  const int kl = cfg.k() + cfg.l();
  switch (cfg.id()) {
    case LemmaId::ST1: return {0, rounds + 2};
    case LemmaId::ST2: return {1, rounds + 2};
    case LemmaId::ST3: return {1, rounds + 3};
    case LemmaId::ST4: return {0, kl - 2};
    case LemmaId::ST5: return {kl >= 1 ? 0 : 1, kl};  // empty when k+l == 0
    case LemmaId::ST6: return {1, rounds + 3};
  }
  throw error("step_window: bad id");
}

inline bool is_lower_family(LemmaId id) {
  return id == LemmaId::ST1 || id == LemmaId::ST2 || id == LemmaId::ST3;
}

}  // namespace detail

// One seed-family configuration: simulate from S ∪ T, then for every
// admissible step compare the predicted set against the true infected set.
inline CheckItem check_st_config(const LemmaConfig& cfg) {
  CheckItem item{cfg.key(), true, ""};
  const auto [S, T] = initial_sets(cfg);
  VertexSet seed = members_set(S);
  seed |= members_set(T);
  const auto rec = run(seed, cfg.shape());
  const auto [lo, hi] = detail::step_window(cfg, rec.rounds);
  if (lo > hi) {
    item.detail = "no admissible step";
    return item;
  }

  const bool lower = detail::is_lower_family(cfg.id());
  std::uint64_t predicted_total = 0;
  for (int t = lo; t <= hi; ++t) {
    const VertexSet at = infected_at(rec, t);
    if (lower) {
      const VertexSet pred = predicted_lower(cfg, t);
      predicted_total += pred.count();
      if (const auto bad = detail::first_not_in(pred, at)) {
        item.pass = false;
        item.detail = "t=" + std::to_string(t) + ": predicted vertex " +
                      cfg.shape().vertex_to_string(*bad) + " is not infected";
        return item;
      }
    } else {
      const VertexSet pred = predicted_excluded(cfg, t);
      predicted_total += pred.count();
      if (const auto bad = detail::first_common(pred, at)) {
        item.pass = false;
        item.detail = "t=" + std::to_string(t) + ": excluded vertex " +
                      cfg.shape().vertex_to_string(*bad) + " is already infected";
        return item;
      }
    }
  }
  item.detail = "rounds=" + std::to_string(rec.rounds) + ", t=" + std::to_string(lo) +
                ".." + std::to_string(hi) + ", " + std::to_string(predicted_total) +
                " predicted memberships";
  return item;
}

inline SuiteReport verify_st(LemmaId id, const VerifyOptions& opt) {
  SuiteReport rep{to_string(id), {}};
  const int q = opt.q;
  const int tail = (id == LemmaId::ST1 || id == LemmaId::ST4)   ? 0
                   : (id == LemmaId::ST2 || id == LemmaId::ST5) ? 1
                                                                : 2;
  const int k_lo = opt.k.value_or(0), k_hi = opt.k.value_or(opt.max_k);
  const int l_lo = opt.l.value_or(0), l_hi = opt.l.value_or(opt.max_l);
  for (int k = k_lo; k <= k_hi; ++k) {
    for (int l = l_lo; l <= l_hi; ++l) {
      CubeShape shape(k + l + tail, q, opt.max_vertices);
      switch (id) {
        case LemmaId::ST1:
          rep.items.push_back(check_st_config(LemmaConfig::st1(shape, k, l)));
          break;
        case LemmaId::ST4:
          rep.items.push_back(check_st_config(LemmaConfig::st4(shape, k, l)));
          break;
        case LemmaId::ST2:
        case LemmaId::ST5:
          for (int i = 1; i < q; ++i)
            rep.items.push_back(check_st_config(
                id == LemmaId::ST2 ? LemmaConfig::st2(shape, k, l, i)
                                   : LemmaConfig::st5(shape, k, l, i)));
          break;
        case LemmaId::ST3:
        case LemmaId::ST6:
          for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
              rep.items.push_back(check_st_config(
                  id == LemmaId::ST3 ? LemmaConfig::st3(shape, k, l, a, b)
                                     : LemmaConfig::st6(shape, k, l, a, b)));
          break;
      }
    }
  }
  return rep;
}

// Shared enumeration for the two-subcube statements: closure of a pair at
// distance <= 2 is the join; when neither pattern fills the join, the
// percolation time is dim(join) - common_stars - 1 + distance.  The
// dimension identity m = k + l - p + d is checked for every pair.
struct TwoCubeStats {
  std::uint64_t pairs = 0;          // all unordered pairs
  std::uint64_t close_pairs = 0;    // pairs at distance <= 2
  std::uint64_t timed_pairs = 0;    // close pairs meeting the time hypothesis
};

inline CheckItem check_two_cubes(const CubeShape& shape, bool check_closure,
                                 bool check_time, TwoCubeStats* stats = nullptr) {
  std::string what = check_closure && check_time ? "closure+time"
                     : check_closure             ? "closure"
                                                 : "time";
  CheckItem item{"two-subcube " + what + " q=" + std::to_string(shape.q()) +
                     " n=" + std::to_string(shape.n()),
                 true, ""};
  std::vector<Pattern> pats;
  pats.reserve(subcube_count(shape));
  for_each_subcube(shape, [&](const Pattern& p) { pats.push_back(p); });

  TwoCubeStats st;
  for (std::size_t i = 0; i < pats.size() && item.pass; ++i) {
    const VertexSet mi = members_set(pats[i]);
    for (std::size_t j = i; j < pats.size(); ++j) {
      const Pattern &x = pats[i], &y = pats[j];
      ++st.pairs;
      const int d = distance(x, y);
      const int p = common_stars(x, y);
      const Pattern jn = join(x, y);
      const int m = jn.dim();
      if (m != x.dim() + y.dim() - p + d) {
        item.pass = false;
        item.detail = "dim identity fails for " + x.to_string() + ", " + y.to_string();
        break;
      }
      if (d > 2) continue;
      ++st.close_pairs;
      VertexSet seed = mi;
      seed |= members_set(y);
      const auto rec = run(seed, shape);
      const VertexSet stable = infected_at(rec, rec.rounds);
      if (check_closure && !(stable == members_set(jn))) {
        item.pass = false;
        item.detail = "closure of " + x.to_string() + " + " + y.to_string() +
                      " is not " + jn.to_string();
        break;
      }
      if (check_time && x.dim() < m && y.dim() < m) {
        ++st.timed_pairs;
        const int want = two_cube_time(x, y);
        if (rec.rounds != want || !(stable == members_set(jn))) {
          item.pass = false;
          item.detail = "pair " + x.to_string() + ", " + y.to_string() + ": engine " +
                        std::to_string(rec.rounds) + " rounds, formula " +
                        std::to_string(want);
          break;
        }
      }
    }
  }
  if (stats) *stats = st;
  if (item.pass)
    item.detail = std::to_string(st.pairs) + " pairs, " + std::to_string(st.close_pairs) +
                  " within distance 2, " + std::to_string(st.timed_pairs) + " timed";
  return item;
}

inline SuiteReport verify_two_cubes(const std::string& suite, bool check_closure,
                                    bool check_time, const VerifyOptions& opt) {
  SuiteReport rep{suite, {}};
  for (int n = 1; n <= opt.max_n; ++n)
    rep.items.push_back(check_two_cubes(CubeShape(n, opt.q, opt.max_vertices),
                                        check_closure, check_time));
  return rep;
}

inline SuiteReport verify_lemma3(const VerifyOptions& opt) {
  return verify_two_cubes("lemma3", true, false, opt);
}

inline SuiteReport verify_lemma13(const VerifyOptions& opt) {
  return verify_two_cubes("lemma13", false, true, opt);
}

// Exhaustive structure scan over every subset of a small cube: the closed-set
// test must agree with the engine, closed sets must decompose into subcubes
// pairwise at distance >= 3, and spanning seeds obey 2|S| >= n + 2.
inline SuiteReport verify_lemma4(const VerifyOptions& opt) {
  SuiteReport rep{"lemma4", {}};
  const int n = std::min(opt.max_n, 2);
  CubeShape shape(n, opt.q, opt.max_vertices);
  const std::uint64_t V = shape.volume();
  if (V > 16)
    throw guard_error("lemma4 suite enumerates 2^" + std::to_string(V) +
                      " subsets; needs q^n <= 16");

  const std::string tag = " q=" + std::to_string(opt.q) + " n=" + std::to_string(n);
  CheckItem closed_item{"lemma4 closed-decomposition" + tag, true, ""};
  CheckItem span_item{"lemma4 spanning-bound" + tag, true, ""};
  std::uint64_t n_closed = 0, n_spanning = 0;
  std::size_t min_span = static_cast<std::size_t>(V) + 1;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask) {
    VertexSet s(V);
    for (std::uint64_t v = 0; v < V; ++v)
      if (mask >> v & 1) s.set(static_cast<Vertex>(v));
    const VertexSet cl = closure(s, shape);
    const bool closed = is_closed(s, shape);
    if (closed != (cl == s)) {
      closed_item.pass = false;
      closed_item.detail = "is_closed disagrees with the engine on mask " +
                           std::to_string(mask);
      break;
    }
    if (closed) {
      ++n_closed;
      const auto d = decompose_closed(s, shape);
      VertexSet u(V);
      for (const auto& c : d.components) u |= members_set(c);
      if (!d.valid || !(u == s)) {
        closed_item.pass = false;
        closed_item.detail = "decomposition of mask " + std::to_string(mask) +
                             " does not reassemble the set";
        break;
      }
    }
    if (cl.is_full() && !s.empty()) {
      ++n_spanning;
      min_span = std::min(min_span, static_cast<std::size_t>(s.count()));
      if (2 * s.count() < static_cast<std::uint64_t>(n) + 2) {
        span_item.pass = false;
        span_item.detail = "spanning seed of size " + std::to_string(s.count()) +
                           " beats the bound (mask " + std::to_string(mask) + ")";
      }
    }
  }
  if (closed_item.pass)
    closed_item.detail = std::to_string(std::uint64_t{1} << V) + " subsets, " +
                         std::to_string(n_closed) + " closed, all decomposed";
  if (span_item.pass)
    span_item.detail = std::to_string(n_spanning) + " spanning seeds, smallest " +
                       std::to_string(min_span) + " (bound " +
                       std::to_string((n + 2 + 1) / 2) + ")";
  rep.items.push_back(closed_item);
  rep.items.push_back(span_item);
  return rep;
}

namespace detail {

// Draw random seeds until one percolates, raising the density as needed.
inline VertexSet random_percolating_seed(const CubeShape& shape, std::mt19937& rng) {
  for (int attempt = 0;; ++attempt) {
    const double p = std::min(1.0, 0.2 + 0.05 * attempt);
    std::bernoulli_distribution coin(p);
    VertexSet s(shape.volume());
    for (std::uint64_t v = 0; v < shape.volume(); ++v)
      if (coin(rng)) s.set(static_cast<Vertex>(v));
    if (closure(s, shape).is_full()) return s;
  }
}

}  // namespace detail

// Randomized scan: every percolating seed internally spans, for each k <= n,
// some subcube of dimension l with k <= l <= 2k.
inline SuiteReport verify_lemma5(const VerifyOptions& opt) {
  SuiteReport rep{"lemma5", {}};
  std::mt19937 rng(opt.rng_seed);
  for (int n : {3, 4}) {
    CubeShape shape(n, opt.q, opt.max_vertices);
    CheckItem item{"lemma5 q=" + std::to_string(opt.q) + " n=" + std::to_string(n) +
                       " trials=" + std::to_string(opt.trials),
                   true, ""};
    for (int trial = 0; trial < opt.trials && item.pass; ++trial) {
      const VertexSet seed = detail::random_percolating_seed(shape, rng);
      const std::set<int> dims = spanned_dims(seed, shape);
      for (int k = 0; k <= n; ++k) {
        bool found = false;
        for (int l = k; l <= std::min(2 * k, n); ++l) found = found || dims.count(l);
        if (!found) {
          item.pass = false;
          std::ostringstream os;
          os << "trial " << trial << ": no internally spanned dimension in [" << k
             << ", " << std::min(2 * k, n) << "]; seed dims {";
          for (int d : dims) os << " " << d;
          os << " }";
          item.detail = os.str();
          break;
        }
      }
    }
    if (item.pass)
      item.detail = std::to_string(opt.trials) + " percolating seeds, window k..2k hit";
    rep.items.push_back(item);
  }
  return rep;
}

namespace detail {

inline bool witness_is_valid(const SpanWitness& w, const VertexSet& seed,
                             const CubeShape& shape, std::string& why) {
  if (w.chain.empty() || w.chain.size() != w.mergers.size() + 1) {
    why = "malformed chain";
    return false;
  }
  if (w.chain.front().dim() != 0) {
    why = "chain does not start at a vertex";
    return false;
  }
  if (!(w.chain.back() == Pattern::all_stars(shape))) {
    why = "chain does not end at the full cube";
    return false;
  }
  for (const auto& p : w.chain)
    if (!is_internally_spanned(seed, p)) {
      why = "chain element " + p.to_string() + " is not internally spanned";
      return false;
    }
  for (std::size_t s = 0; s < w.mergers.size(); ++s) {
    const Pattern &cur = w.chain[s], &mg = w.mergers[s], &nxt = w.chain[s + 1];
    if (!is_internally_spanned(seed, mg)) {
      why = "merger " + mg.to_string() + " is not internally spanned";
      return false;
    }
    if (mg.dim() > cur.dim() || distance(cur, mg) > 2 || !(join(cur, mg) == nxt)) {
      why = "step " + std::to_string(s) + " breaks the merge rules";
      return false;
    }
    if (nxt.dim() > 2 * cur.dim() + 2) {
      why = "dimension jumps from " + std::to_string(cur.dim()) + " to " +
            std::to_string(nxt.dim());
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Exhaustive witness search: every percolating seed of a small cube admits a
// chain of internally spanned subcubes growing by merges, with dimensions at
// most doubling plus two at each step.
inline SuiteReport verify_lemma6(const VerifyOptions& opt) {
  SuiteReport rep{"lemma6", {}};
  const int n = std::min(opt.max_n, 2);
  CubeShape shape(n, opt.q, opt.max_vertices);
  const std::uint64_t V = shape.volume();
  if (V > 16)
    throw guard_error("lemma6 suite enumerates 2^" + std::to_string(V) +
                      " subsets; needs q^n <= 16");
  CheckItem item{"lemma6 q=" + std::to_string(opt.q) + " n=" + std::to_string(n), true, ""};
  std::uint64_t n_spanning = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << V) && item.pass; ++mask) {
    VertexSet s(V);
    for (std::uint64_t v = 0; v < V; ++v)
      if (mask >> v & 1) s.set(static_cast<Vertex>(v));
    if (!closure(s, shape).is_full()) continue;
    ++n_spanning;
    const auto w = find_span_witness(s, shape);
    std::string why;
    if (!w) {
      item.pass = false;
      item.detail = "no witness chain for mask " + std::to_string(mask);
    } else if (!detail::witness_is_valid(*w, s, shape, why)) {
      item.pass = false;
      item.detail = "mask " + std::to_string(mask) + ": " + why;
    }
  }
  if (item.pass)
    item.detail = std::to_string(n_spanning) + " spanning seeds, all witnessed";
  rep.items.push_back(item);
  return rep;
}

// Closed form: base values, agreement with the simulated construction, the
// difference recursions, and integrality of every branch.
inline SuiteReport verify_formula(const VerifyOptions& opt) {
  SuiteReport rep{"formula", {}};
  const int q = opt.q;
  const std::string qs = " q=" + std::to_string(q);

  CheckItem base{"formula base" + qs, true, ""};
  if (max_time_formula(q, 0) != 0 || max_time_formula(q, 1) != 1 ||
      max_time_formula(q, 2) != 3) {
    base.pass = false;
    base.detail = "base values are not 0, 1, 3";
  } else {
    base.detail = "n=0,1,2 -> 0,1,3";
  }
  rep.items.push_back(base);

  for (int n = 3; n <= opt.max_n; ++n) {
    CheckItem item{"formula construction" + qs + " n=" + std::to_string(n), true, ""};
    const auto seed = build_extremal_seed(q, n, opt.max_vertices);
    const auto rec = run(seed.vertices, seed.shape);
    const auto want = max_time_formula(q, n);
    if (!rec.percolated || rec.rounds != want) {
      item.pass = false;
      item.detail = "construction gives " + std::to_string(rec.rounds) +
                    " rounds, closed form says " + std::to_string(want);
    } else {
      item.detail = std::to_string(seed.vertices.count()) + " seed vertices, " +
                    std::to_string(want) + " rounds";
    }
    rep.items.push_back(item);
  }

  CheckItem recur{"formula recursion" + qs, true, ""};
  for (int n = 3; n <= 30; ++n) {
    const auto diff = max_time_formula(q, n) - max_time_formula(q, n - 3);
    const auto want = q == 3 ? 2 * n - 1 : 2 * n;
    if (diff != want) {
      recur.pass = false;
      recur.detail = "difference over three dimensions at n=" + std::to_string(n) +
                     " is " + std::to_string(diff) + ", expected " + std::to_string(want);
      break;
    }
  }
  if (recur.pass) recur.detail = "n=3..30";
  rep.items.push_back(recur);

  CheckItem integral{"formula integrality" + qs, true, ""};
  for (std::int64_t n = 0; n <= 30; ++n) {
    const std::int64_t num = q == 3 ? (n % 3 == 2 ? n * n + 2 * n + 1 : n * n + 2 * n)
                                    : (n % 3 == 0 ? n * n : n * n + 3 * n - 1);
    if (n >= 3 && num % 3 != 0) {
      integral.pass = false;
      integral.detail = "branch numerator at n=" + std::to_string(n) +
                        " is not divisible by 3";
      break;
    }
  }
  if (integral.pass) integral.detail = "n=0..30";
  rep.items.push_back(integral);
  return rep;
}

// The closed form grows strictly, and the cylinder lift preserves the
// percolation time, which realizes the growth constructively.
inline SuiteReport verify_monotonicity(const VerifyOptions& opt) {
  SuiteReport rep{"monotonicity", {}};
  const int q = opt.q;
  const std::string qs = " q=" + std::to_string(q);

  CheckItem mono{"monotonicity formula" + qs, true, ""};
  for (int n = 1; n <= 30; ++n) {
    if (max_time_formula(q, n) <= max_time_formula(q, n - 1)) {
      mono.pass = false;
      mono.detail = "not strictly increasing at n=" + std::to_string(n);
      break;
    }
  }
  if (mono.pass) mono.detail = "strictly increasing for n=1..30";
  rep.items.push_back(mono);

  for (int n = 0; n <= std::min(opt.max_n, 4); ++n) {
    CheckItem item{"monotonicity lift" + qs + " n=" + std::to_string(n), true, ""};
    const auto seed = build_extremal_seed(q, n, opt.max_vertices);
    const auto lifted = lift_seed(seed, opt.max_vertices);
    const auto rec0 = run(seed.vertices, seed.shape);
    const auto rec1 = run(lifted.vertices, lifted.shape);
    if (!rec1.percolated || rec1.rounds != rec0.rounds) {
      item.pass = false;
      item.detail = "lift changes the time from " + std::to_string(rec0.rounds) +
                    " to " + std::to_string(rec1.rounds);
    } else {
      item.detail = "time " + std::to_string(rec0.rounds) + " preserved";
    }
    rep.items.push_back(item);
  }
  return rep;
}

namespace detail {

inline bool reverify_witness(const std::vector<Vertex>& w, const CubeShape& shape,
                             int want_time) {
  VertexSet s(shape.volume());
  for (Vertex v : w) s.set(v);
  const auto rec = run(s, shape);
  return rec.percolated && rec.rounds == want_time;
}

}  // namespace detail

// Cross-checks between the exhaustive/capped searches, the closed form, and
// the construction, at scales where full enumeration is possible.
inline SuiteReport verify_oracle(const VerifyOptions& opt) {
  SuiteReport rep{"oracle", {}};
  const int q = opt.q;
  const std::string qs = " q=" + std::to_string(q);

  for (int n = 1; n <= 2; ++n) {
    CubeShape shape(n, q, opt.max_vertices);
    if (shape.volume() > 16) continue;  // past the exhaustive guard
    CheckItem item{"oracle exhaustive" + qs + " n=" + std::to_string(n), true, ""};
    const auto rep_ex = max_time_exhaustive(shape);
    const auto want = max_time_formula(q, n);
    const auto built = build_extremal_seed(q, n, opt.max_vertices);
    const auto built_rec = run(built.vertices, built.shape);
    if (!rep_ex.max_time || *rep_ex.max_time != want) {
      item.pass = false;
      item.detail = "exhaustive max disagrees with the closed form";
    } else if (built_rec.rounds != want) {
      item.pass = false;
      item.detail = "construction does not reach the exhaustive max";
    } else {
      for (const auto& w : rep_ex.witnesses)
        if (!detail::reverify_witness(w, shape, want)) {
          item.pass = false;
          item.detail = "a reported witness does not re-verify";
          break;
        }
    }
    if (item.pass)
      item.detail = "max " + std::to_string(want) + ", " +
                    std::to_string(rep_ex.witnesses.size()) + " witnesses re-verified";
    rep.items.push_back(item);
  }

  {
    CubeShape shape(2, q, opt.max_vertices);
    CheckItem item{"oracle capped" + qs + " n=2 cap=2", true, ""};
    const auto rep_cap = max_time_capped(shape, 2);
    if (rep_cap.mode != "size-capped" || !rep_cap.max_time || *rep_cap.max_time != 3) {
      item.pass = false;
      item.detail = "pair scan does not find time 3";
    } else {
      item.detail = "lower bound 3 found among pairs";
    }
    rep.items.push_back(item);
  }

  {
    CubeShape shape(2, q, opt.max_vertices);
    CheckItem item{"oracle minimal" + qs + " n=2 cap=3", true, ""};
    const auto sets = minimal_spanning_sets(shape, 3);
    const std::uint64_t want =
        static_cast<std::uint64_t>(q) * q * (q - 1) * (q - 1) / 2;
    bool ok = sets.size() == want;
    for (const auto& w : sets) {
      VertexSet s(shape.volume());
      for (Vertex v : w) s.set(v);
      ok = ok && closure(s, shape).is_full();
      for (Vertex v : w) {
        VertexSet drop = s;
        drop.reset(v);
        ok = ok && !closure(drop, shape).is_full();
      }
    }
    if (!ok) {
      item.pass = false;
      item.detail = "expected exactly the " + std::to_string(want) +
                    " distance-2 pairs, got " + std::to_string(sets.size()) + " sets";
    } else {
      item.detail = std::to_string(sets.size()) + " minimal sets, all re-verified";
    }
    rep.items.push_back(item);
  }
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"st1", "st2", "st3", "st4", "st5", "st6", "lemma3", "lemma4", "lemma5",
          "lemma6", "lemma13", "formula", "monotonicity", "oracle"};
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "st1") return verify_st(LemmaId::ST1, opt);
  if (name == "st2") return verify_st(LemmaId::ST2, opt);
  if (name == "st3") return verify_st(LemmaId::ST3, opt);
  if (name == "st4") return verify_st(LemmaId::ST4, opt);
  if (name == "st5") return verify_st(LemmaId::ST5, opt);
  if (name == "st6") return verify_st(LemmaId::ST6, opt);
  if (name == "lemma3") return verify_lemma3(opt);
  if (name == "lemma4") return verify_lemma4(opt);
  if (name == "lemma5") return verify_lemma5(opt);
  if (name == "lemma6") return verify_lemma6(opt);
  if (name == "lemma13") return verify_lemma13(opt);
  if (name == "formula") return verify_formula(opt);
  if (name == "monotonicity") return verify_monotonicity(opt);
  if (name == "oracle") return verify_oracle(opt);
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const auto& s : suite_names()) {
      SuiteReport one = run_suite(s, opt);
      all.items.insert(all.items.end(), one.items.begin(), one.items.end());
    }
    return all;
  }
  throw error("unknown suite: " + name);
}

}  // namespace qperc
