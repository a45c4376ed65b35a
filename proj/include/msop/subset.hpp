#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace msop {

/// A subset of a ground set {0, ..., n-1} with n <= Subset::kCapacity.
///
/// Stored as a fixed-width bitset so copies never allocate; the first word is
/// the fast path used by the brute-force oracles (n <= 64). Iteration always
/// yields elements in increasing order, which is the canonical sorted form
/// handed to oracles.
class Subset {
 public:
  static constexpr int kWords = 4;
  static constexpr int kCapacity = 64 * kWords;

  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);

  static Subset from_mask(std::uint64_t mask) {
    Subset s;
    s.words_[0] = mask;
    return s;
  }
  static Subset from_elements(std::span<const int> elements);
  /// {0, ..., n-1}.
  static Subset full(int n);

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const Subset& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }
  bool is_strict_subset_of(const Subset& other) const {
    return is_subset_of(other) && *this != other;
  }
  bool intersects(const Subset& other) const {
    for (int i = 0; i < kWords; ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  Subset operator|(const Subset& o) const {
    Subset r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }
  Subset operator&(const Subset& o) const {
    Subset r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  /// Set difference.
  Subset operator-(const Subset& o) const {
    Subset r;
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }
  Subset& operator|=(const Subset& o) { return *this = *this | o; }

  /// Low 64 bits; exact whenever every element is < 64.
  std::uint64_t mask() const { return words_[0]; }
  /// Largest element + 1 (0 for the empty set).
  int bound() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(64 * i + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> elements() const;
  /// "{0,2,5}".
  std::string str() const;

  friend bool operator==(const Subset&, const Subset&) = default;

  /// Lexicographic order of the sorted element lists ({0,5} < {1}).
  static bool lex_less(const Subset& a, const Subset& b);

  std::size_t hash() const;

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Orders by cardinality first, then lexicographically.
inline bool smaller_then_lex(const Subset& a, const Subset& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return Subset::lex_less(a, b);
}

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace msop
