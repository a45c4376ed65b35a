#pragma once

#include <memory>

#include "msop/core.hpp"

namespace msop {

/// The dual of an instance: f#(S) = f(V) - f(V \ S), g#(S) = g(V) - g(V \ S),
/// and S feasible iff V \ S is. As an MSOP the roles swap: the dual problem
/// minimises with cost g# and weight f#.
class DualInstance {
 public:
  explicit DualInstance(MsopInstance primal);

  const MsopInstance& primal() const { return *primal_; }
  /// The dual MSOP (cost g#, weight f#, family of complements).
  const MsopInstance& problem() const { return problem_; }

  Rational f_sharp(const Subset& s) const;
  Rational g_sharp(const Subset& s) const;
  bool in_family(const Subset& s) const;

 private:
  std::shared_ptr<const MsopInstance> primal_;
  Rational f_total_;
  Rational g_total_;
  MsopInstance problem_;
};

DualInstance dualize(const MsopInstance& instance);

/// Complements every set of the chain and reverses it (an involution).
Chain dual_chain(const Chain& chain, int n);

struct BackwardGreedyChain {
  Chain chain;
  /// rho_{S_j}(S_{j-1}) for j = 1..k, in the primal's orientation.
  std::vector<Density> step_densities;
  Rational alpha = 1;
  /// The forward greedy chain of the dual problem it was derived from.
  GreedyChain dual;
};

/// Backward alpha-greedy chain, obtained as the dual of a forward greedy
/// chain of the dual problem. `dual_solver` is queried with the dual problem.
BackwardGreedyChain backward_greedy_chain(const MsopInstance& instance, const DensitySolver& dual_solver,
                                          const Rational& alpha);

}  // namespace msop
