#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace veinott {

using Element = std::uint32_t;

/// Hard capacity of an ElementSet, and therefore of any Lattice.
inline constexpr std::size_t kMaxElements = 256;

/// Fixed-width bit vector over the element indices of one lattice.
///
/// Ordering compares the sets as unsigned integers (bit i has weight 2^i),
/// which is the canonical order used for every deterministic listing.
class ElementSet {
  static constexpr std::size_t kWords = kMaxElements / 64;

 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }

  static ElementSet singleton(Element e) {
    ElementSet s;
    s.insert(e);
    return s;
  }

  /// {0, ..., n-1}
  static ElementSet first_n(std::size_t n) {
    check_index(n == 0 ? 0 : n - 1);
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  bool contains(Element e) const {
    return e < kMaxElements && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  void insert(Element e) {
    check_index(e);
    words_[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  void erase(Element e) {
    check_index(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Smallest member; undefined on the empty set.
  Element first() const { return next_from(0); }

  /// Smallest member >= from, or kMaxElements if none.
  Element next_from(std::size_t from) const {
    std::size_t w = from >> 6;
    if (w >= kWords) return kMaxElements;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (cur != 0) return static_cast<Element>((w << 6) + std::countr_zero(cur));
      if (++w == kWords) return kMaxElements;
      cur = words_[w];
    }
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(w ^ (w >> 29));
    return h;
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Element>((w << 6) + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  template <typename Pred>
  bool all_of(Pred&& p) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        if (!p(static_cast<Element>((w << 6) + std::countr_zero(bits)))) return false;
        bits &= bits - 1;
      }
    }
    return true;
  }

 private:
  static void check_index(std::size_t e) {
    if (e >= kMaxElements) throw std::out_of_range("element index exceeds ElementSet capacity");
  }

  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace veinott
