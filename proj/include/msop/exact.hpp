#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msop/core.hpp"

namespace msop {

/// Size limits for the exhaustive oracles. Exceeding a limit raises
/// Error(kTooLarge); the oracles never fall back to sampling.
struct ExactCaps {
  int permutation = 9;
  int chain = 7;
  int density = 20;

  /// Defaults overridden by MSOP_EXACT_CAPS, e.g. "perm=10,chain=8,density=22".
  static ExactCaps from_env();
  /// Same syntax as the environment variable; throws Error(kBadParams).
  static ExactCaps parse(std::string_view text);
  static ExactCaps parse(std::string_view text, ExactCaps base);
};

struct ExactPermutation {
  Permutation permutation;
  Rational cost;
};

struct ExactChain {
  Chain chain;
  Rational cost;
};

/// Minimum of the permutation objective over permutations whose every initial
/// set is feasible (dynamic programming over the subset lattice). Among optima
/// the lexicographically smallest permutation is returned.
ExactPermutation exact_opt_permutation(const MsopInstance& instance, const ExactCaps& caps = {});

/// Minimum of the chain objective over all chains of feasible sets, of any
/// length (shortest path over the lattice of feasible sets).
ExactChain exact_opt_chain(const MsopInstance& instance, const ExactCaps& caps = {});

/// Maximum marginal density over feasible strict supersets of `base`. +inf
/// beats every finite value; ties go to the smallest cardinality, then the
/// lexicographically smallest set.
DensityResult exact_max_density(const MsopInstance& instance, const Subset& base,
                                const ExactCaps& caps = {});

/// exact_max_density as a DensitySolver with fixed caps.
DensitySolver exact_density_solver(const ExactCaps& caps = {});

struct HistogramColumn {
  Rational left;
  Rational right;
  Rational height;
};

struct HistogramPoint {
  Rational x;
  Rational greedy_height;  // after shrinking
  Rational opt_height;
};

struct HistogramReport {
  std::vector<HistogramColumn> opt_columns;
  /// Before shrinking: [g(S_{i-1}), g(S_i)] with height phi_i.
  std::vector<HistogramColumn> greedy_columns;
  Rational alpha;
  bool contained = false;
  std::optional<HistogramPoint> first_violation;
  Rational opt_area;
  Rational greedy_area;
};

/// Builds the optimum-chain and greedy-chain histograms, maps the greedy one
/// through (x, y) -> ((g(V) + x) / 2, y / (2 alpha)) and checks that it lies
/// under the optimum histogram on every elementary interval between column
/// boundaries. Throws Error(kMissingCertificate) when the greedy chain carries
/// no per-step densities.
HistogramReport histogram_containment_check(const MsopInstance& instance, const GreedyChain& greedy,
                                            const Chain& opt_chain, const Rational& alpha);

}  // namespace msop
