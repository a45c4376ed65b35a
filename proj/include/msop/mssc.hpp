#pragma once

#include <utility>
#include <vector>

#include "msop/core.hpp"

namespace msop {

struct Hyperedge {
  Rational weight = 1;
  std::vector<int> elements;
};

/// Pipelined set cover: elements 0..n-1 with positive costs, weighted
/// hyperedges. Plain min sum set cover is the all-ones case. Optional OR
/// precedence arcs (i, j) between elements restrict the feasible orders.
struct MsscInstance {
  std::vector<Rational> costs;
  std::vector<Hyperedge> edges;
  std::vector<std::pair<int, int>> or_arcs;

  int size() const { return static_cast<int>(costs.size()); }
};

/// Throws Error(kValidationError): empty hyperedges, elements out of range,
/// nonpositive costs, negative weights, bad arcs.
void validate(const MsscInstance& instance);

/// Total weight of hyperedges meeting S.
Rational coverage_weight(const MsscInstance& instance, const Subset& s);

/// sum_e w_e C(e) with C(e) the prefix cost up to the first element of e.
Rational covering_cost(const MsscInstance& instance, const Permutation& order);

/// Covering time (1-based position of the first hit) of every hyperedge.
std::vector<int> covering_times(const MsscInstance& instance, const Permutation& order);

/// f = element costs (modular), g = coverage_weight (submodular). The family
/// is free when there are no arcs, otherwise the OR-initial sets of the arcs.
MsopInstance to_msop(const MsscInstance& instance);

/// base + {v} maximising (g(base + v) - g(base)) / c_v, ties to the smallest
/// id. Exact for the free family.
DensityResult singleton_greedy_density(const MsscInstance& instance, const Subset& base);

}  // namespace msop
