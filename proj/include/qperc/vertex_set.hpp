#pragma once
// Dense bitmap over the codes of one cube, plus the usual set algebra.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qperc/error.hpp"
#include "qperc/hamming.hpp"

namespace qperc {

class VertexSet {
 public:
  explicit VertexSet(std::uint64_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::uint64_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.mask_tail();
    return s;
  }

  std::uint64_t universe() const { return universe_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { for (auto& w : words_) w = 0; }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  VertexSet& operator|=(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& subtract(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool contains_all(const VertexSet& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & words_[i]) return true;
    return false;
  }

  // Ascending code order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

 private:
  void check(const VertexSet& o) const {
    if (universe_ != o.universe_) throw error("VertexSet: universe mismatch");
  }
  void mask_tail() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::uint64_t universe_;
  std::vector<std::uint64_t> words_;
};

inline VertexSet members_set(const Pattern& p) {
  VertexSet s(p.shape().volume());
  for (Vertex v : p.member_codes()) s.set(v);
  return s;
}

inline VertexSet set_of_codes(const CubeShape& shape, std::initializer_list<Vertex> codes) {
  VertexSet s(shape.volume());
  for (Vertex v : codes) {
    if (v >= shape.volume()) throw error("set_of_codes: code out of range");
    s.set(v);
  }
  return s;
}

inline VertexSet set_of(const CubeShape& shape, const std::vector<std::string>& words) {
  VertexSet s(shape.volume());
  for (const auto& w : words) s.set(shape.vertex_from_string(w));
  return s;
}

}  // namespace qperc
