#include "msop/subset.hpp"

#include <stdexcept>

namespace msop {

namespace {

void check_element(int v) {
  if (v < 0 || v >= Subset::kCapacity) {
    throw std::out_of_range("element " + std::to_string(v) + " outside subset capacity");
  }
}

}  // namespace

Subset::Subset(std::initializer_list<int> elements) {
  for (int v : elements) {
    check_element(v);
    insert(v);
  }
}

Subset Subset::from_elements(std::span<const int> elements) {
  Subset s;
  for (int v : elements) {
    check_element(v);
    s.insert(v);
  }
  return s;
}

Subset Subset::full(int n) {
  if (n < 0 || n > kCapacity) throw std::out_of_range("ground set too large");
  Subset s;
  for (int i = 0; i < kWords; ++i) {
    const int lo = 64 * i;
    if (n >= lo + 64) {
      s.words_[i] = ~std::uint64_t{0};
    } else if (n > lo) {
      s.words_[i] = (std::uint64_t{1} << (n - lo)) - 1;
    }
  }
  return s;
}

int Subset::bound() const {
  for (int i = kWords - 1; i >= 0; --i) {
    if (words_[i] != 0) return 64 * i + 64 - std::countl_zero(words_[i]);
  }
  return 0;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string Subset::str() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v);
  });
  return s + "}";
}

bool Subset::lex_less(const Subset& a, const Subset& b) {
  // Below the smallest element of the symmetric difference both lists agree.
  // The set holding that element is larger iff the other one still has an
  // element after the common prefix (which is then necessarily bigger).
  const Subset diff = (a - b) | (b - a);
  if (diff.empty()) return false;
  int first = -1;
  for (int i = 0; i < kWords && first < 0; ++i) {
    if (diff.words_[i] != 0) first = 64 * i + std::countr_zero(diff.words_[i]);
  }
  auto has_above = [first](const Subset& s) {
    for (int i = first >> 6; i < kWords; ++i) {
      std::uint64_t w = s.words_[i];
      if (i == (first >> 6)) {
        const int bit = first & 63;
        w = bit == 63 ? 0 : w & ~((std::uint64_t{2} << bit) - 1);
      }
      if (w != 0) return true;
    }
    return false;
  };
  if (a.contains(first)) return has_above(b);
  return !has_above(a);
}

std::size_t Subset::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace msop
