#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "msop/error.hpp"
#include "msop/rational.hpp"
#include "msop/subset.hpp"

namespace msop {

using SetPredicate = std::function<bool(const Subset&)>;
using SetFunction = std::function<Rational(const Subset&)>;

/// Declared structure of an instance. Trusted by the solvers; see
/// spot_check_flags() for a sampling audit.
struct StructureFlags {
  bool free_family = false;  // every subset is feasible
  bool union_closed = false;
  bool intersection_closed = false;
  bool f_subadditive = false;
  bool f_modular = false;
  bool f_supermodular = false;
  bool g_submodular = false;
  bool g_modular = false;
  bool g_supermodular = false;

  std::vector<std::string> names() const;
};

/// Ground set {0..n-1}, a feasibility oracle, a cost oracle f and a weight
/// oracle g. The family always contains the empty set and the ground set,
/// regardless of what the oracle says about them.
class MsopInstance {
 public:
  MsopInstance(int n, SetPredicate family, SetFunction cost, SetFunction weight,
               StructureFlags flags);

  int size() const { return n_; }
  const Subset& ground() const { return ground_; }
  const StructureFlags& flags() const { return flags_; }

  bool in_family(const Subset& s) const;
  Rational cost(const Subset& s) const { return (*cost_)(s); }
  Rational weight(const Subset& s) const { return (*weight_)(s); }

 private:
  int n_;
  Subset ground_;
  std::shared_ptr<const SetPredicate> family_;
  std::shared_ptr<const SetFunction> cost_;
  std::shared_ptr<const SetFunction> weight_;
  StructureFlags flags_;
};

/// Strictly increasing sequence of feasible sets from the empty set to the
/// ground set.
struct Chain {
  std::vector<Subset> sets;

  int steps() const { return static_cast<int>(sets.size()) - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
  std::string str() const;
};

struct Permutation {
  std::vector<int> order;

  int size() const { return static_cast<int>(order.size()); }
  friend bool operator==(const Permutation&, const Permutation&) = default;
  std::string str() const;
};

struct DensityResult {
  Subset base;
  Subset candidate;
  Density density;
  /// Approximation factor the producing solver vouches for.
  Rational alpha = 1;
};

/// Maps (instance, base) to a feasible strict superset of the base together
/// with its marginal density.
using DensitySolver = std::function<DensityResult(const MsopInstance&, const Subset&)>;

struct GreedyChain {
  Chain chain;
  /// rho_i = density of step i with respect to the previous set.
  std::vector<Density> step_densities;
  Rational alpha = 1;
};

/// Throws Error(kInvalidChain) unless the chain starts at the empty set, ends
/// at the ground set, is strictly increasing, and every set is feasible.
void validate_chain(const MsopInstance& instance, const Chain& chain);

/// Throws Error(kInvalidArgument) unless `p` is a bijection of {0..n-1}.
void validate_permutation(const Permutation& p, int n);

/// sum_j f(S_j) (g(S_j) - g(S_{j-1})).
Rational chain_cost(const MsopInstance& instance, const Chain& chain);

/// Marginal density of `candidate` over `base`; +inf when the cost does not
/// increase.
DensityResult marginal_density(const MsopInstance& instance, const Subset& base,
                               const Subset& candidate);

/// Forward greedy: starting from the empty set, repeatedly moves to the set
/// returned by `solver` until the ground set is reached. Consecutive
/// infinite-density steps are merged into one (the cost is flat across them,
/// so the chain cost is unchanged).
GreedyChain greedy_chain(const MsopInstance& instance, const DensitySolver& solver,
                         const Rational& alpha);

/// Chain of all initial sets of `p`, checked against the family.
Chain permutation_to_chain(const MsopInstance& instance, const Permutation& p);
/// Chain of all initial sets of `p` without a family check.
Chain permutation_to_chain(const Permutation& p);

/// First j elements of sigma, then the remaining elements in tau's order.
Permutation splice(const Permutation& sigma, const Permutation& tau, int j);

/// A set of feasible permutations, described by two oracles.
struct PermutationSpace {
  /// Some member of the space having `s` as an initial set, if any.
  std::function<std::optional<Permutation>(const Subset&)> extend;
  std::function<bool(const Permutation&)> contains;
};

/// Permutations whose every initial set lies in the instance's family.
/// extend() searches depth-first with memoised dead ends.
PermutationSpace prefix_closed_space(const MsopInstance& instance);

/// Any permutation of {0..n-1}; extend() lists the set first (in `priority`
/// order when given) and then the rest.
PermutationSpace free_space(int n, std::vector<int> priority = {});

/// A permutation of the space consistent with the chain, built by iterated
/// splicing. Throws Error(kNotWellFounded) if the splice leaves the space.
Permutation chain_to_permutation(const MsopInstance& instance, const Chain& chain,
                                 const PermutationSpace& space);

/// Generic singleton-extension solver: the best base + {v} over feasible
/// single-element extensions, ties to the smallest v. Exact (alpha = 1) for a
/// free family with modular f and submodular g.
DensityResult singleton_density(const MsopInstance& instance, const Subset& base);

/// Lists declared flags that a random sample of set pairs contradicts (also
/// checks f and g for monotonicity and f(0) = g(0) = 0).
std::vector<std::string> spot_check_flags(const MsopInstance& instance, std::mt19937_64& rng,
                                          int samples);

}  // namespace msop
