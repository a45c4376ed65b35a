#pragma once

#include <functional>
#include <optional>
#include <string>

#include "msop/exact.hpp"
#include "msop/formats.hpp"

namespace msop {

/// A typed instance lowered to the generic model, with the density solver
/// that the matching approximation result calls for.
struct Problem {
  explicit Problem(MsopInstance i) : instance(std::move(i)) {}

  std::string kind;    // refined kind, e.g. "orsched-inforest"
  std::string solver;  // solver name
  MsopInstance instance;
  DensitySolver density;
  Rational alpha = 1;  // certificate of `density`
  /// Bound on greedy cost over optimum: 4 alpha.
  Rational bound = 4;
  /// Solver for the dual instance, used by backward greedy.
  std::string dual_solver;
  DensitySolver dual_density;
  Rational dual_alpha = 1;
  /// Feasible permutations, when the family comes from one.
  std::optional<PermutationSpace> space;
  /// Objective in the instance's own terms (covering cost, schedule cost...).
  std::function<Rational(const Permutation&)> native_cost;
};

Problem make_problem(const TypedInstance& typed, const ExactCaps& caps = ExactCaps::from_env());

}  // namespace msop
