#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace wofc {

// Set of small nonnegative indices backed by a 64-bit mask. The tag type
// keeps vertex sets and generator-index sets from mixing up.
template <class Tag>
class SmallSet {
 public:
  constexpr SmallSet() = default;

  static constexpr SmallSet from_bits(std::uint64_t bits) {
    SmallSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr SmallSet single(int i) { return from_bits(std::uint64_t{1} << i); }
  // {0, 1, ..., n-1}
  static constexpr SmallSet first_n(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(SmallSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(SmallSet o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(SmallSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr SmallSet& insert(int i) {
    bits_ |= std::uint64_t{1} << i;
    return *this;
  }
  constexpr SmallSet& erase(int i) {
    bits_ &= ~(std::uint64_t{1} << i);
    return *this;
  }
  constexpr SmallSet with(int i) const { return SmallSet(*this).insert(i); }
  constexpr SmallSet without(int i) const { return SmallSet(*this).erase(i); }

  friend constexpr SmallSet operator|(SmallSet a, SmallSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr SmallSet operator&(SmallSet a, SmallSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr SmallSet operator-(SmallSet a, SmallSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr SmallSet& operator|=(SmallSet o) { bits_ |= o.bits_; return *this; }
  constexpr SmallSet& operator&=(SmallSet o) { bits_ &= o.bits_; return *this; }
  constexpr SmallSet& operator-=(SmallSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(SmallSet, SmallSet) = default;

  // smallest member, -1 when empty
  constexpr int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }

  // iterates members in ascending order
  class iterator {
   public:
    using value_type = int;
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    friend class SmallSet;
    explicit iterator(std::uint64_t r) : rest_(r) {}
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> indices() const {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(count()));
    for (int i : *this) v.push_back(i);
    return v;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct GenTag {};
using VertexSet = SmallSet<VertexTag>;  // vertex / variable indices
using GenSet = SmallSet<GenTag>;        // facet / generator indices

// Lexicographic order on the ascending index sequences; a proper prefix
// precedes its extensions.
template <class Tag>
constexpr bool lex_less(SmallSet<Tag> a, SmallSet<Tag> b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia != *ib) return *ia < *ib;
    ++ia;
    ++ib;
  }
  return ib != b.end();
}

// Order by cardinality, ties broken lexicographically.
template <class Tag>
constexpr bool size_lex_less(SmallSet<Tag> a, SmallSet<Tag> b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return lex_less(a, b);
}

struct SizeLexLess {
  template <class Tag>
  bool operator()(SmallSet<Tag> a, SmallSet<Tag> b) const {
    return size_lex_less(a, b);
  }
};

// Visits every nonempty subset of {0..n-1} in (size, lex) order; the visitor
// returns false to stop early. Used by the exhaustive definition checks.
template <class F>
bool for_each_subset_size_lex(int n, F&& visit) {
  std::vector<int> c;
  for (int k = 1; k <= n; ++k) {
    c.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t bits = 0;
      for (int i : c) bits |= std::uint64_t{1} << i;
      if (!visit(bits)) return false;
      // advance to the next k-combination in lex order
      int i = k - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return true;
}

}  // namespace wofc
