#include "msop/dual.hpp"

#include <algorithm>

namespace msop {

namespace {

StructureFlags dual_flags(const StructureFlags& p) {
  StructureFlags d;
  d.free_family = p.free_family;
  d.union_closed = p.intersection_closed;
  d.intersection_closed = p.union_closed;
  // Dual cost is g#, dual weight is f#. Duality swaps sub- and supermodularity.
  d.f_modular = p.g_modular;
  d.f_supermodular = p.g_submodular;
  d.f_subadditive = p.g_modular || p.g_supermodular;
  d.g_modular = p.f_modular;
  d.g_submodular = p.f_supermodular;
  d.g_supermodular = p.f_modular;
  return d;
}

}  // namespace

DualInstance::DualInstance(MsopInstance primal)
    : primal_(std::make_shared<const MsopInstance>(std::move(primal))),
      f_total_(primal_->cost(primal_->ground())),
      g_total_(primal_->weight(primal_->ground())),
      problem_(
          primal_->size(),
          [p = primal_](const Subset& s) { return p->in_family(p->ground() - s); },
          [p = primal_, total = g_total_](const Subset& s) -> Rational { return total - p->weight(p->ground() - s); },
          [p = primal_, total = f_total_](const Subset& s) -> Rational { return total - p->cost(p->ground() - s); },
          dual_flags(primal_->flags())) {}

Rational DualInstance::f_sharp(const Subset& s) const { return f_total_ - primal_->cost(primal_->ground() - s); }

Rational DualInstance::g_sharp(const Subset& s) const {
  return g_total_ - primal_->weight(primal_->ground() - s);
}

bool DualInstance::in_family(const Subset& s) const { return problem_.in_family(s); }

DualInstance dualize(const MsopInstance& instance) { return DualInstance(instance); }

Chain dual_chain(const Chain& chain, int n) {
  const Subset ground = Subset::full(n);
  Chain out;
  out.sets.reserve(chain.sets.size());
  for (auto it = chain.sets.rbegin(); it != chain.sets.rend(); ++it) out.sets.push_back(ground - *it);
  return out;
}

BackwardGreedyChain backward_greedy_chain(const MsopInstance& instance, const DensitySolver& dual_solver,
                                          const Rational& alpha) {
  const DualInstance dual = dualize(instance);
  BackwardGreedyChain out;
  out.dual = greedy_chain(dual.problem(), dual_solver, alpha);
  out.alpha = alpha;
  out.chain = dual_chain(out.dual.chain, instance.size());
  // Dual step i (from the top of the primal chain downward) has density
  // delta f / delta g of the corresponding primal step; invert and reverse.
  out.step_densities.reserve(out.dual.step_densities.size());
  for (auto it = out.dual.step_densities.rbegin(); it != out.dual.step_densities.rend(); ++it) {
    out.step_densities.push_back(it->reciprocal());
  }
  return out;
}

}  // namespace msop
