#pragma once
// Gated nonzero-digit counts ("norms") and the two-block seed families they
// describe.
//
// The norm of x counts nonzero digits, gated by up to three conditions: a
// nonzero digit among the first n1 positions, a nonzero digit among the next
// n2 positions, and an exact match of the last d digits against a required
// suffix.  If any gate fails the norm is 0.  With a suffix present the count
// runs over the first n-d digits only; without one it runs over all n.
//
// The families pair a prefix cube S with a tail cube T:
//
//   ST1/ST4  n = k+l    S = [*]^k [0]^l      T = [0]^k [*]^l
//   ST2/ST5  n = k+l+1  S = [*]^k [0]^{l+1}  T = [0]^k [*]^l i      (i != 0)
//   ST3/ST6  n = k+l+2  S = [*]^k [0]^{l+2}  T = [0]^k [*]^l a b    (a,b != 0)
//
// ST1-ST3 describe vertices certainly infected by step t when the process
// starts from S u T; ST4-ST6 describe vertices certainly still healthy at
// step t.  Norm level sets express both directions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qperc/error.hpp"
#include "qperc/hamming.hpp"
#include "qperc/vertex_set.hpp"

namespace qperc {

class NormSpec {
 public:
  NormSpec(CubeShape shape, std::optional<int> n1, std::optional<int> n2,
           std::vector<int> suffix)
      : shape_(std::move(shape)), n1_(n1), n2_(n2), suffix_(std::move(suffix)) {
    if (n2_ && !n1_) throw error("NormSpec: second block requires a first block");
    if ((n1_ && *n1_ < 0) || (n2_ && *n2_ < 0))
      throw error("NormSpec: block lengths must be >= 0");
    const int used = n1_.value_or(0) + n2_.value_or(0) + static_cast<int>(suffix_.size());
    if (used > shape_.n())
      throw error("NormSpec: blocks and suffix need " + std::to_string(used) +
                  " digits but n=" + std::to_string(shape_.n()));
    for (int a : suffix_)
      if (a < 0 || a >= shape_.q())
        throw error("NormSpec: suffix digit " + std::to_string(a) + " out of range");
  }

  const CubeShape& shape() const { return shape_; }
  const std::optional<int>& n1() const { return n1_; }
  const std::optional<int>& n2() const { return n2_; }
  const std::vector<int>& suffix() const { return suffix_; }

 private:
  CubeShape shape_;
  std::optional<int> n1_, n2_;
  std::vector<int> suffix_;
};

// Norm evaluated on pre-extracted digits x_1..x_n.
inline int norm_digits(const std::vector<int>& x, const NormSpec& s) {
  const int n = s.shape().n();
  const int d = static_cast<int>(s.suffix().size());
  for (int j = 0; j < d; ++j)
    if (x[n - d + j] != s.suffix()[j]) return 0;
  if (s.n1()) {
    bool nz = false;
    for (int i = 0; i < *s.n1(); ++i) nz = nz || x[i] != 0;
    if (!nz) return 0;
  }
  if (s.n2()) {
    bool nz = false;
    for (int i = *s.n1(); i < *s.n1() + *s.n2(); ++i) nz = nz || x[i] != 0;
    if (!nz) return 0;
  }
  const int limit = d > 0 ? n - d : n;
  int c = 0;
  for (int i = 0; i < limit; ++i) c += x[i] != 0;
  return c;
}

inline int norm(Vertex v, const NormSpec& s) {
  std::vector<int> x;
  s.shape().digits(v, x);
  return norm_digits(x, s);
}

// ---- seed families ----

enum class LemmaId { ST1, ST2, ST3, ST4, ST5, ST6 };

inline std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::ST1: return "st1";
    case LemmaId::ST2: return "st2";
    case LemmaId::ST3: return "st3";
    case LemmaId::ST4: return "st4";
    case LemmaId::ST5: return "st5";
    case LemmaId::ST6: return "st6";
  }
  return "?";
}

class LemmaConfig {
 public:
  static LemmaConfig st1(CubeShape shape, int k, int l) {
    return LemmaConfig(LemmaId::ST1, std::move(shape), k, l, -1, -1);
  }
  static LemmaConfig st2(CubeShape shape, int k, int l, int i) {
    return LemmaConfig(LemmaId::ST2, std::move(shape), k, l, i, -1);
  }
  static LemmaConfig st3(CubeShape shape, int k, int l, int a, int b) {
    return LemmaConfig(LemmaId::ST3, std::move(shape), k, l, a, b);
  }
  static LemmaConfig st4(CubeShape shape, int k, int l) {
    return LemmaConfig(LemmaId::ST4, std::move(shape), k, l, -1, -1);
  }
  static LemmaConfig st5(CubeShape shape, int k, int l, int i) {
    return LemmaConfig(LemmaId::ST5, std::move(shape), k, l, i, -1);
  }
  static LemmaConfig st6(CubeShape shape, int k, int l, int a, int b) {
    return LemmaConfig(LemmaId::ST6, std::move(shape), k, l, a, b);
  }

  LemmaId id() const { return id_; }
  const CubeShape& shape() const { return shape_; }
  int k() const { return k_; }
  int l() const { return l_; }
  // ST2/ST5 tail digit.
  int i() const { return a_; }
  // ST3/ST6 tail digits.
  int a() const { return a_; }
  int b() const { return b_; }

  // 0 for ST1/ST4, 1 for ST2/ST5, 2 for ST3/ST6.
  int tail_len() const {
    switch (id_) {
      case LemmaId::ST1: case LemmaId::ST4: return 0;
      case LemmaId::ST2: case LemmaId::ST5: return 1;
      default: return 2;
    }
  }

  std::string key() const {
    std::string s = to_string(id_) + " q=" + std::to_string(shape_.q()) +
                    " k=" + std::to_string(k_) + " l=" + std::to_string(l_);
    if (tail_len() == 1) s += " i=" + std::to_string(a_);
    if (tail_len() == 2) s += " a=" + std::to_string(a_) + " b=" + std::to_string(b_);
    return s;
  }

 private:
  LemmaConfig(LemmaId id, CubeShape shape, int k, int l, int a, int b)
      : id_(id), shape_(std::move(shape)), k_(k), l_(l), a_(a), b_(b) {
    if (k < 0 || l < 0) throw error("LemmaConfig: k and l must be >= 0");
    const int need = k + l + tail_len();
    if (shape_.n() != need)
      throw error("LemmaConfig: " + to_string(id) + " needs n=k+l+" +
                  std::to_string(tail_len()) + "=" + std::to_string(need) + ", shape has n=" +
                  std::to_string(shape_.n()));
    if (tail_len() >= 1 && (a_ < 1 || a_ >= shape_.q()))
      throw error("LemmaConfig: tail digit " + std::to_string(a_) +
                  " must be nonzero and < q");
    if (tail_len() == 2 && (b_ < 1 || b_ >= shape_.q()))
      throw error("LemmaConfig: tail digit " + std::to_string(b_) +
                  " must be nonzero and < q");
  }

  LemmaId id_;
  CubeShape shape_;
  int k_, l_, a_, b_;
};

// The pair (S, T) the family starts from.
inline std::pair<Pattern, Pattern> initial_sets(const LemmaConfig& cfg) {
  const int n = cfg.shape().n(), k = cfg.k(), l = cfg.l(), d = cfg.tail_len();
  std::vector<int> s(n, 0), t(n, 0);
  for (int i = 0; i < k; ++i) s[i] = Pattern::kStar;
  for (int i = k; i < k + l; ++i) t[i] = Pattern::kStar;
  if (d >= 1) t[n - d] = cfg.a();
  if (d == 2) t[n - 1] = cfg.b();
  return {Pattern(cfg.shape(), std::move(s)), Pattern(cfg.shape(), std::move(t))};
}

namespace detail {

[[noreturn]] inline void range_error(const LemmaConfig& cfg, int t, const std::string& range) {
  throw error(cfg.key() + ": step " + std::to_string(t) + " outside the stated range " + range);
}

}  // namespace detail

// Vertices certainly infected by step t (ST1-ST3 only).
inline VertexSet predicted_lower(const LemmaConfig& cfg, int t) {
  const CubeShape& shape = cfg.shape();
  const int n = shape.n();
  VertexSet out(shape.volume());
  std::vector<int> x;

  switch (cfg.id()) {
    case LemmaId::ST1: {
      // ||x|| <= t+1
      if (t < 0) detail::range_error(cfg, t, "t >= 0");
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        int c = 0;
        for (int i = 0; i < n; ++i) c += x[i] != 0;
        if (c <= t + 1) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    case LemmaId::ST2: {
      // Line [0]^{k+l} * plus level sets of the one-digit-suffix norms:
      // bound t when the last digit is 0 or i, bound t-1 otherwise.
      if (t < 1) detail::range_error(cfg, t, "t >= 1");
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        bool zero_prefix = true;
        for (int i = 0; i < n - 1; ++i) zero_prefix = zero_prefix && x[i] == 0;
        if (zero_prefix) {
          out.set(static_cast<Vertex>(v));
          continue;
        }
        int c = 0;
        for (int i = 0; i < n - 1; ++i) c += x[i] != 0;
        const int j = x[n - 1];
        const int bound = (j == 0 || j == cfg.i()) ? t : t - 1;
        if (c >= 1 && c <= bound) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    case LemmaId::ST3: {
      // Explicit seeds for the first three steps over the all-zero prefix,
      // then level sets of the two-digit-suffix norms.  The bound for a
      // suffix (s1, s2) depends on how it relates to (a, b):
      //   (0,b), (a,0)                          -> t-1
      //   (0,*), (*,0), (a,*!=0), (*!=0,b)      -> t-2
      //   otherwise                             -> t-3
      if (t < 1) detail::range_error(cfg, t, "t >= 1");
      const int a = cfg.a(), b = cfg.b();
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        const int s1 = x[n - 2], s2 = x[n - 1];
        bool zero_prefix = true;
        for (int i = 0; i < n - 2; ++i) zero_prefix = zero_prefix && x[i] == 0;
        if (zero_prefix) {
          const bool in =
              (t >= 3) ||
              (t == 2 && (s1 == 0 || s1 == a || s2 == 0 || s2 == b)) ||
              (t == 1 && ((s1 == 0 && s2 == b) || (s1 == a && s2 == 0) ||
                          (s1 == a && s2 == b) || (s1 == 0 && s2 == 0)));
          if (in) out.set(static_cast<Vertex>(v));
          continue;
        }
        if (t < 2) continue;
        int bound = t - 3;
        if ((s1 == 0 && s2 == b) || (s1 == a && s2 == 0)) {
          bound = t - 1;
        } else if (s1 == 0 || s2 == 0 || (s1 == a && s2 != 0) || (s1 != 0 && s2 == b)) {
          bound = t - 2;
        }
        int c = 0;
        for (int i = 0; i < n - 2; ++i) c += x[i] != 0;
        if (c >= 1 && c <= bound) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    default:
      throw error(cfg.key() + ": this family states an exclusion, not a lower set");
  }
}

// Vertices certainly still healthy at step t (ST4-ST6 only).
inline VertexSet predicted_excluded(const LemmaConfig& cfg, int t) {
  const CubeShape& shape = cfg.shape();
  const int n = shape.n(), k = cfg.k(), l = cfg.l();
  VertexSet out(shape.volume());
  std::vector<int> x;

  const auto gate_k = [&](const std::vector<int>& xs) {
    bool nz = false;
    for (int i = 0; i < k; ++i) nz = nz || xs[i] != 0;
    return nz;
  };

  switch (cfg.id()) {
    case LemmaId::ST4: {
      // ||x||_{k,l} >= t+2 while 0 <= t <= k+l-2.
      if (t < 0 || t > k + l - 2)
        detail::range_error(cfg, t, "0 <= t <= k+l-2");
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        if (!gate_k(x)) continue;
        bool nz2 = false;
        for (int i = k; i < k + l; ++i) nz2 = nz2 || x[i] != 0;
        if (!nz2) continue;
        int c = 0;
        for (int i = 0; i < n; ++i) c += x[i] != 0;
        if (c >= t + 2) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    case LemmaId::ST5: {
      // ||x||_k^i >= t+1 while 0 <= t <= k+l-1, and for every tail digit
      // j outside {0, i}: ||x||_k^j >= t while 1 <= t <= k+l.
      const bool branch_i = t >= 0 && t <= k + l - 1;
      const bool branch_j = t >= 1 && t <= k + l;
      if (!branch_i && !branch_j)
        detail::range_error(cfg, t, "0 <= t <= k+l-1 or 1 <= t <= k+l");
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        const int j = x[n - 1];
        if (j == 0 || !gate_k(x)) continue;
        int c = 0;
        for (int i = 0; i < n - 1; ++i) c += x[i] != 0;
        const bool in = (j == cfg.i()) ? (branch_i && c >= t + 1) : (branch_j && c >= t);
        if (in) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    case LemmaId::ST6: {
      // Branches keyed by the last two digits (s1, s2) against (a, b):
      //   t >= 1:  (0,b), (a,0)                        threshold t
      //   t >= 2:  (0,*), (*,0), (a,*!=0), (*!=0,b)    threshold t-1
      //   t >= 3:  other (s1!=0, s2!=0)                threshold t-2
      if (t < 1) detail::range_error(cfg, t, "t >= 1");
      const int a = cfg.a(), b = cfg.b();
      for (std::uint64_t v = 0; v < shape.volume(); ++v) {
        shape.digits(static_cast<Vertex>(v), x);
        if (!gate_k(x)) continue;
        const int s1 = x[n - 2], s2 = x[n - 1];
        if (s1 == 0 && s2 == 0) continue;
        int threshold = -1;  // -1 = branch not active
        if ((s1 == 0 && s2 == b) || (s1 == a && s2 == 0)) {
          threshold = t;
        } else if (s1 == 0 || s2 == 0 || (s1 == a && s2 != 0) || (s1 != 0 && s2 == b)) {
          if (t >= 2) threshold = t - 1;
        } else {
          if (t >= 3) threshold = t - 2;
        }
        if (threshold < 0) continue;
        int c = 0;
        for (int i = 0; i < n - 2; ++i) c += x[i] != 0;
        if (c >= threshold && c >= 1) out.set(static_cast<Vertex>(v));
      }
      return out;
    }

    default:
      throw error(cfg.key() + ": this family states a lower set, not an exclusion");
  }
}

}  // namespace qperc
