#pragma once
// Shapes, vertices and subcube patterns of the q-ary Hamming cube Q_{n,q}.
//
// A vertex is a word x_1..x_n over {0..q-1}; two vertices are adjacent iff
// they differ in exactly one coordinate.  Vertices are stored as mixed-radix
// codes with x_1 most significant, so sets of vertices can live in dense
// bitmaps indexed by code.  A pattern is a word over {0..q-1, *}; its members
// form a subcube of dimension equal to the number of stars.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qperc/error.hpp"

namespace qperc {

using Vertex = std::uint32_t;

// Default ceiling on q^n.  2^27 codes keep per-vertex arrays in the
// hundreds-of-MB range at worst; everything in this library is meant to run
// at desk scale well below that.
inline constexpr std::uint64_t kDefaultVertexGuard = std::uint64_t{1} << 27;

class CubeShape {
 public:
  CubeShape(int n, int q, std::uint64_t max_vertices = kDefaultVertexGuard)
      : n_(n), q_(q) {
    if (n < 0) throw error("CubeShape: n must be >= 0, got " + std::to_string(n));
    if (q < 2) throw error("CubeShape: q must be >= 2, got " + std::to_string(q));
    pow_.resize(static_cast<std::size_t>(n) + 1);
    pow_[0] = 1;
    for (int i = 1; i <= n; ++i) {
      if (pow_[i - 1] > max_vertices / static_cast<std::uint64_t>(q))
        throw guard_error("CubeShape: " + std::to_string(q) + "^" + std::to_string(n) +
                          " exceeds the vertex guard of " + std::to_string(max_vertices));
      pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(q);
    }
  }

  int n() const { return n_; }
  int q() const { return q_; }
  std::uint64_t volume() const { return pow_[n_]; }
  // q^i for 0 <= i <= n
  std::uint64_t pow(int i) const { return pow_[i]; }
  int degree() const { return n_ * (q_ - 1); }

  // Digit x_{i+1} of a code, i.e. i = 0 addresses the most significant digit.
  int digit(Vertex v, int i) const {
    return static_cast<int>((v / pow_[n_ - 1 - i]) % static_cast<std::uint64_t>(q_));
  }

  Vertex with_digit(Vertex v, int i, int s) const {
    const std::uint64_t pw = pow_[n_ - 1 - i];
    return static_cast<Vertex>(v - static_cast<std::uint64_t>(digit(v, i)) * pw +
                               static_cast<std::uint64_t>(s) * pw);
  }

  void digits(Vertex v, std::vector<int>& out) const {
    out.resize(n_);
    std::uint64_t rest = v;
    for (int i = n_ - 1; i >= 0; --i) {
      out[i] = static_cast<int>(rest % static_cast<std::uint64_t>(q_));
      rest /= static_cast<std::uint64_t>(q_);
    }
  }

  // Vertices print as their digit word: compact ("1203") when q <= 10,
  // comma-separated ("11,0,3") otherwise.
  bool compact_text() const { return q_ <= 10; }

  std::string vertex_to_string(Vertex v) const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      const int d = digit(v, i);
      if (compact_text()) {
        out.push_back(static_cast<char>('0' + d));
      } else {
        if (i > 0) out.push_back(',');
        out += std::to_string(d);
      }
    }
    return out;
  }

  Vertex vertex_from_string(std::string_view text) const;

  friend bool operator==(const CubeShape& a, const CubeShape& b) {
    return a.n_ == b.n_ && a.q_ == b.q_;
  }
  friend bool operator!=(const CubeShape& a, const CubeShape& b) { return !(a == b); }

 private:
  int n_;
  int q_;
  std::vector<std::uint64_t> pow_;
};

// All n(q-1) neighbours of v: coordinate-major (x_1 first), symbols ascending.
inline std::vector<Vertex> neighbors(Vertex v, const CubeShape& shape) {
  const int n = shape.n(), q = shape.q();
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(shape.degree()));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t pw = shape.pow(n - 1 - i);
    const int d = shape.digit(v, i);
    const std::uint64_t base = v - static_cast<std::uint64_t>(d) * pw;
    for (int s = 0; s < q; ++s) {
      if (s == d) continue;
      out.push_back(static_cast<Vertex>(base + static_cast<std::uint64_t>(s) * pw));
    }
  }
  return out;
}

inline int hamming_distance(Vertex a, Vertex b, const CubeShape& shape) {
  int d = 0;
  for (int i = 0; i < shape.n(); ++i) d += shape.digit(a, i) != shape.digit(b, i);
  return d;
}

class Pattern {
 public:
  static constexpr int kStar = -1;

  Pattern(CubeShape shape, std::vector<int> symbols)
      : shape_(std::move(shape)), sym_(std::move(symbols)) {
    if (static_cast<int>(sym_.size()) != shape_.n())
      throw error("Pattern: expected " + std::to_string(shape_.n()) + " symbols, got " +
                  std::to_string(sym_.size()));
    for (int s : sym_)
      if (s != kStar && (s < 0 || s >= shape_.q()))
        throw error("Pattern: symbol " + std::to_string(s) + " out of range for q=" +
                    std::to_string(shape_.q()));
  }

  static Pattern from_vertex(const CubeShape& shape, Vertex v) {
    std::vector<int> sym(shape.n());
    for (int i = 0; i < shape.n(); ++i) sym[i] = shape.digit(v, i);
    return Pattern(shape, std::move(sym));
  }

  static Pattern all_stars(const CubeShape& shape) {
    return Pattern(shape, std::vector<int>(shape.n(), kStar));
  }

  static Pattern parse(const CubeShape& shape, std::string_view text);

  const CubeShape& shape() const { return shape_; }
  int symbol(int i) const { return sym_[i]; }
  bool is_star(int i) const { return sym_[i] == kStar; }
  const std::vector<int>& symbols() const { return sym_; }

  int dim() const {
    int d = 0;
    for (int s : sym_) d += s == kStar;
    return d;
  }

  bool contains(Vertex v) const {
    for (int i = 0; i < shape_.n(); ++i)
      if (sym_[i] != kStar && shape_.digit(v, i) != sym_[i]) return false;
    return true;
  }

  // Member codes in lexicographic order of the star assignment (leftmost
  // star most significant).
  std::vector<Vertex> member_codes() const {
    const int n = shape_.n(), q = shape_.q();
    std::vector<int> stars;
    std::uint64_t base = 0;
    for (int i = 0; i < n; ++i) {
      if (sym_[i] == kStar)
        stars.push_back(i);
      else
        base += static_cast<std::uint64_t>(sym_[i]) * shape_.pow(n - 1 - i);
    }
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(shape_.pow(static_cast<int>(stars.size()))));
    std::vector<int> odo(stars.size(), 0);
    for (;;) {
      std::uint64_t code = base;
      for (std::size_t j = 0; j < stars.size(); ++j)
        code += static_cast<std::uint64_t>(odo[j]) * shape_.pow(n - 1 - stars[j]);
      out.push_back(static_cast<Vertex>(code));
      int j = static_cast<int>(stars.size()) - 1;
      while (j >= 0 && odo[j] == q - 1) odo[j--] = 0;
      if (j < 0) break;
      ++odo[j];
    }
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (int i = 0; i < shape_.n(); ++i) {
      if (!shape_.compact_text() && i > 0) out.push_back(',');
      if (sym_[i] == kStar) {
        out.push_back('*');
      } else if (shape_.compact_text()) {
        out.push_back(static_cast<char>('0' + sym_[i]));
      } else {
        out += std::to_string(sym_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.shape_ == b.shape_ && a.sym_ == b.sym_;
  }
  friend bool operator!=(const Pattern& a, const Pattern& b) { return !(a == b); }

 private:
  CubeShape shape_;
  std::vector<int> sym_;
};

// Distance contributed by one coordinate: 0 if either symbol is * or they
// are equal, 1 otherwise.
inline int coord_distance(int a, int b) {
  if (a == Pattern::kStar || b == Pattern::kStar) return 0;
  return a == b ? 0 : 1;
}

inline void check_same_shape(const Pattern& x, const Pattern& y, const char* op) {
  if (x.shape() != y.shape())
    throw error(std::string(op) + ": patterns live in different shapes");
}

inline int distance(const Pattern& x, const Pattern& y) {
  check_same_shape(x, y, "distance");
  int d = 0;
  for (int i = 0; i < x.shape().n(); ++i) d += coord_distance(x.symbol(i), y.symbol(i));
  return d;
}

// Smallest subcube containing both: keep coordinates where the symbols agree
// (star included), star out everything else.
inline Pattern join(const Pattern& x, const Pattern& y) {
  check_same_shape(x, y, "join");
  std::vector<int> sym(x.shape().n());
  for (int i = 0; i < x.shape().n(); ++i)
    sym[i] = x.symbol(i) == y.symbol(i) ? x.symbol(i) : Pattern::kStar;
  return Pattern(x.shape(), std::move(sym));
}

inline int common_stars(const Pattern& x, const Pattern& y) {
  check_same_shape(x, y, "common_stars");
  int p = 0;
  for (int i = 0; i < x.shape().n(); ++i)
    p += x.is_star(i) && y.is_star(i);
  return p;
}

// ---- text parsing ----

namespace detail {

inline int parse_symbol_token(std::string_view tok, const CubeShape& shape, bool allow_star) {
  if (tok.empty()) throw error("parse: empty symbol token");
  if (tok == "*") {
    if (!allow_star) throw error("parse: '*' is not a vertex digit");
    return Pattern::kStar;
  }
  int value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') throw error("parse: bad character '" + std::string(1, c) + "'");
    value = value * 10 + (c - '0');
    if (value >= shape.q() * 10) break;  // avoid pointless overflow on junk input
  }
  if (value >= shape.q())
    throw error("parse: digit " + std::string(tok) + " out of range for q=" +
                std::to_string(shape.q()));
  return value;
}

inline std::vector<int> parse_word(const CubeShape& shape, std::string_view text,
                                   bool allow_star) {
  std::vector<int> sym;
  if (shape.compact_text()) {
    for (char c : text) {
      if (c == '*') {
        if (!allow_star) throw error("parse: '*' is not a vertex digit");
        sym.push_back(Pattern::kStar);
      } else if (c >= '0' && c <= '9') {
        if (c - '0' >= shape.q())
          throw error("parse: digit '" + std::string(1, c) + "' out of range for q=" +
                      std::to_string(shape.q()));
        sym.push_back(c - '0');
      } else {
        throw error("parse: bad character '" + std::string(1, c) + "'");
      }
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
      sym.push_back(parse_symbol_token(tok, shape, allow_star));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (static_cast<int>(sym.size()) != shape.n())
    throw error("parse: expected " + std::to_string(shape.n()) + " symbols, got " +
                std::to_string(sym.size()));
  return sym;
}

}  // namespace detail

inline Pattern Pattern::parse(const CubeShape& shape, std::string_view text) {
  return Pattern(shape, detail::parse_word(shape, text, /*allow_star=*/true));
}

inline Vertex CubeShape::vertex_from_string(std::string_view text) const {
  const std::vector<int> sym = detail::parse_word(*this, text, /*allow_star=*/false);
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i)
    code += static_cast<std::uint64_t>(sym[i]) * pow_[n_ - 1 - i];
  return static_cast<Vertex>(code);
}

// ---- relabelings (graph automorphisms of Q_{n,q}) ----

// symbol_maps[i] is a size-q bijection applied to coordinate i.
inline Vertex relabel_symbols(Vertex v, const CubeShape& shape,
                              const std::vector<std::vector<int>>& symbol_maps) {
  std::uint64_t code = 0;
  for (int i = 0; i < shape.n(); ++i)
    code += static_cast<std::uint64_t>(symbol_maps[i][shape.digit(v, i)]) *
            shape.pow(shape.n() - 1 - i);
  return static_cast<Vertex>(code);
}

// New coordinate i reads old coordinate source_of[i].
inline Vertex permute_coords(Vertex v, const CubeShape& shape,
                             const std::vector<int>& source_of) {
  std::uint64_t code = 0;
  for (int i = 0; i < shape.n(); ++i)
    code += static_cast<std::uint64_t>(shape.digit(v, source_of[i])) *
            shape.pow(shape.n() - 1 - i);
  return static_cast<Vertex>(code);
}

}  // namespace qperc
