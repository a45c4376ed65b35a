#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "msop/core.hpp"

namespace msop {

struct Job {
  Rational processing;
  Rational weight;
};

enum class DagShape { kOuttree, kIntree, kInforest, kBipartite, kMultitree, kGeneral };

std::string_view shape_name(DagShape shape);

/// Each label is tested independently of the others.
struct ShapeLabels {
  bool outtree = false;    // every job has at most one predecessor
  bool intree = false;     // inforest with one weakly connected component
  bool inforest = false;   // every job has at most one successor
  bool bipartite = false;  // no job is both a predecessor and a successor
  bool multitree = false;  // at most one directed path between any two jobs
};

/// OR-precedence DAG. An arc (i, j) makes i one of the OR-predecessors of j:
/// j may start once any one of its predecessors has completed.
class OrDag {
 public:
  /// Throws Error(kValidationError) on bad ids, duplicate arcs, self loops or
  /// negative data, and Error(kCyclicInput) on a cycle.
  OrDag(std::vector<Job> jobs, std::vector<std::pair<int, int>> arcs);

  int size() const { return static_cast<int>(jobs_.size()); }
  const Job& job(int v) const { return jobs_[static_cast<std::size_t>(v)]; }
  const std::vector<Job>& jobs() const { return jobs_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& predecessors(int v) const { return preds_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& successors(int v) const { return succs_[static_cast<std::size_t>(v)]; }
  /// Topological order, smallest available id first.
  const std::vector<int>& topological_order() const { return topo_; }
  /// Job id in the DAG this one was derived from by residual(); the identity
  /// for a DAG built directly.
  const std::vector<int>& origin() const { return origin_; }

 private:
  friend OrDag residual(const OrDag& dag, const Subset& s);

  std::vector<Job> jobs_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> preds_;
  std::vector<std::vector<int>> succs_;
  std::vector<int> topo_;
  std::vector<int> origin_;
};

ShapeLabels shape_labels(const OrDag& dag);
/// The most specific label, in the order outtree, intree, inforest,
/// bipartite, multitree, general.
DagShape classify_dag(const OrDag& dag);

/// Every job of S that has predecessors has one of them in S.
bool or_initial_membership(const OrDag& dag, const Subset& s);

/// The DAG left after S has been scheduled: jobs outside S renumbered in
/// increasing order, arcs between them kept, except that a job with a
/// predecessor in S loses all its incoming arcs. Throws Error(kNotInitial).
OrDag residual(const OrDag& dag, const Subset& s);

/// Sum of w_j C_j. Throws Error(kInfeasibleOrder) if some job with
/// predecessors runs before all of them.
Rational schedule_cost(const OrDag& dag, const Permutation& order);

/// f = total processing time, g = total weight, family = OR-initial sets.
MsopInstance to_msop(const OrDag& dag);

/// Topological order of S followed by a topological order of the rest.
PermutationSpace or_permutation_space(const OrDag& dag);

struct Stem {
  std::vector<int> vertices;  // v_1 is a source of the residual DAG
};

/// Best stem of the residual DAG by marginal density,
/// (g(base + stem) - g(base)) / p(stem), returned as base + stem. Ties go to
/// the shortest stem, then the smallest start vertex. `g` must be the weight
/// oracle of the instance the result is used with. Throws Error(kNotInforest)
/// unless the residual is an inforest, Error(kNotInitial) and
/// Error(kEmptyRemainder) on bad bases.
DensityResult max_density_stem(const OrDag& dag, const SetFunction& g, const Subset& base);
/// Same search, also reporting the stem itself (original ids).
std::pair<DensityResult, Stem> max_density_stem_detail(const OrDag& dag, const SetFunction& g,
                                                       const Subset& base);

/// For every source of the residual DAG, the maximum-ratio w/p subtree of its
/// successor outtree rooted at the source, by parametric iteration on
/// lambda: maximise w(T) - lambda p(T) with a tree DP, move lambda to the
/// ratio reached, stop at the fixpoint. The best over sources (ties: fewer
/// jobs, then smaller source) is returned as base + subtree. Throws
/// Error(kNotMultitree) unless the residual is a multitree.
DensityResult max_density_outtree(const OrDag& dag, const Subset& base);

/// Stem solver with g = total job weight, as a DensitySolver.
DensitySolver stem_solver(const OrDag& dag);
DensitySolver outtree_solver(const OrDag& dag);

}  // namespace msop
