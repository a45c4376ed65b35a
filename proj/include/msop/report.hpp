#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msop/problem.hpp"

namespace msop {

struct RatioReport {
  std::string instance;
  std::string kind;
  std::string solver;
  bool backward = false;
  Rational alpha;
  Rational bound;
  Chain chain;
  std::vector<Density> certificate;
  Rational greedy_cost;
  /// Cost of a permutation consistent with the greedy chain, when the
  /// instance has a permutation space.
  std::optional<Permutation> permutation;
  std::optional<Rational> permutation_cost;
  std::optional<Rational> native_cost;
  /// "chain", "permutation" or "none" (instance above every oracle cap).
  std::string reference = "none";
  std::optional<Rational> exact_cost;
  /// greedy_cost / exact_cost; absent without a reference, or when the
  /// optimum is 0 and greedy is not.
  std::optional<Rational> ratio;
  std::optional<bool> contained;
  bool bound_ok = true;
  double wall_ms = 0;

  /// The bound held and the histogram check (if run) passed.
  bool ok() const { return bound_ok && contained.value_or(true); }
};

/// Greedy (forward, or backward through the dual) plus the exact optimum and
/// the histogram containment check, as far as the oracle caps allow.
RatioReport check_ratio(const Problem& problem, const ExactCaps& caps, bool backward = false);

/// One `key=value` per line; the wall time is left out unless asked for.
std::string to_key_value(const RatioReport& report, bool with_time = true);
std::string to_json(const RatioReport& report, bool with_time = true);

}  // namespace msop
