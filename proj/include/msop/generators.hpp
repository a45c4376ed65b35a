#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "msop/formats.hpp"

namespace msop {

/// Platform-independent draws on top of mt19937_64 (the standard
/// distributions are implementation-defined, which would break byte-identical
/// generator output across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [lo, hi].
  int uniform(int lo, int hi);
  /// True with probability num / den.
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<int>(i) - 1))]);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  int n = 6;
  /// Secondary size: hyperedges (mssc kinds), vertices beyond a spanning
  /// tree (xsearch); -1 picks a default from n.
  int m = -1;
  std::uint64_t seed = 1;
};

/// mssc, pipelined, or-pipelined, inforest, multitree, bipartite-or, rof,
/// xsearch, generic, supermodular.
const std::vector<std::string>& generator_kinds();

/// Deterministic in (kind, params). Throws Error(kBadParams) on an unknown
/// kind or sizes out of range.
TypedInstance gen_instance(const std::string& kind, const GenParams& params);

}  // namespace msop
