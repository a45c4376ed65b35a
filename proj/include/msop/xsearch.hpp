#pragma once

#include <vector>

#include "msop/core.hpp"

namespace msop {

struct SearchEdge {
  int u = 0;
  int v = 0;
  Rational cost;
};

/// Connected undirected graph searched from `root`; the target sits at
/// vertex v with probability prob[v].
struct SearchGraph {
  int root = 0;
  std::vector<Rational> prob;
  std::vector<SearchEdge> edges;

  int vertices() const { return static_cast<int>(prob.size()); }
};

/// Throws Error(kValidationError) on bad ids, loops, nonpositive costs,
/// negative probabilities or a total other than 1, and
/// Error(kDisconnectedInput) when some vertex cannot be reached.
void validate(const SearchGraph& graph);

/// Probability mass of the non-root vertices touched by the edge set S.
/// The root is found at time 0, so its mass only shifts every cost by the
/// same constant and is left out.
Rational found_probability(const SearchGraph& graph, const Subset& edges);

/// Edge sets that form a connected subgraph containing the root (and the
/// empty set).
bool connected_from_root(const SearchGraph& graph, const Subset& edges);

/// Ground set = edges, f = total edge cost, g = found_probability.
MsopInstance xsearch_to_msop(const SearchGraph& graph);

/// Expected time to find the target when the edges are searched in this
/// order: sum_v p_v (cost paid until v is first reached). Throws
/// Error(kInfeasibleOrder) if the order is not an expanding search.
Rational expected_search_cost(const SearchGraph& graph, const Permutation& order);

/// Expanding searches: each edge meets a vertex already reached.
PermutationSpace expanding_search_space(const SearchGraph& graph);

}  // namespace msop
