#pragma once

#include <vector>

#include "msop/core.hpp"

namespace msop {

/// An instance given extensionally: f and g listed on all 2^n subsets
/// (indexed by bitmask), plus an optional explicit family.
struct TableInstance {
  static constexpr int kMaxElements = 16;

  int n = 0;
  std::vector<Rational> f;
  std::vector<Rational> g;
  /// Indexed by bitmask; empty means every subset is feasible.
  std::vector<char> member;
  StructureFlags flags;

  bool free_family() const { return member.empty(); }
};

/// Throws Error(kValidationError) on wrong table sizes, nonzero values at the
/// empty set, decreasing values, or a family missing the empty/ground set.
void validate(const TableInstance& table);

MsopInstance to_msop(const TableInstance& table);

/// Evaluates every oracle of a small instance (n <= kMaxElements).
TableInstance tabulate(const MsopInstance& instance);

}  // namespace msop
