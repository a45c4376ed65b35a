#include "msop/mssc.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "msop/orsched.hpp"

namespace msop {

void validate(const MsscInstance& instance) {
  const int n = instance.size();
  if (n < 1) throw Error(ErrorCode::kValidationError, "instance needs at least one element");
  if (n > Subset::kCapacity) throw Error(ErrorCode::kValidationError, "too many elements");
  for (int v = 0; v < n; ++v) {
    if (sgn(instance.costs[static_cast<std::size_t>(v)]) <= 0) {
      throw Error(ErrorCode::kValidationError, "element " + std::to_string(v) + " must have positive cost");
    }
  }
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    const auto& edge = instance.edges[e];
    if (edge.elements.empty()) throw Error(ErrorCode::kValidationError, "hyperedge " + std::to_string(e) + " is empty");
    if (sgn(edge.weight) < 0) throw Error(ErrorCode::kValidationError, "hyperedge " + std::to_string(e) + " has negative weight");
    for (int v : edge.elements) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::kValidationError,
                    "hyperedge " + std::to_string(e) + " references element " + std::to_string(v) + " outside 0.." +
                        std::to_string(n - 1));
      }
    }
  }
  for (const auto& [i, j] : instance.or_arcs) {
    if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
      throw Error(ErrorCode::kValidationError, "bad arc " + std::to_string(i) + " " + std::to_string(j));
    }
  }
}

namespace {

struct CoverageData {
  std::vector<Subset> edge_sets;
  std::vector<Rational> weights;

  explicit CoverageData(const MsscInstance& instance) {
    for (const auto& e : instance.edges) {
      edge_sets.push_back(Subset::from_elements(e.elements));
      weights.push_back(e.weight);
    }
  }

  Rational operator()(const Subset& s) const {
    Rational total = 0;
    for (std::size_t e = 0; e < edge_sets.size(); ++e) {
      if (edge_sets[e].intersects(s)) total += weights[e];
    }
    return total;
  }
};

}  // namespace

Rational coverage_weight(const MsscInstance& instance, const Subset& s) { return CoverageData(instance)(s); }

std::vector<int> covering_times(const MsscInstance& instance, const Permutation& order) {
  validate_permutation(order, instance.size());
  std::vector<int> position(static_cast<std::size_t>(instance.size()));
  for (int j = 0; j < order.size(); ++j) position[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j)])] = j + 1;
  std::vector<int> times;
  for (const auto& e : instance.edges) {
    int first = instance.size();
    for (int v : e.elements) first = std::min(first, position[static_cast<std::size_t>(v)]);
    times.push_back(first);
  }
  return times;
}

Rational covering_cost(const MsscInstance& instance, const Permutation& order) {
  const std::vector<int> times = covering_times(instance, order);
  std::vector<Rational> prefix(static_cast<std::size_t>(instance.size()) + 1);
  prefix[0] = 0;
  for (int j = 0; j < order.size(); ++j) {
    prefix[static_cast<std::size_t>(j) + 1] =
        prefix[static_cast<std::size_t>(j)] + instance.costs[static_cast<std::size_t>(order.order[static_cast<std::size_t>(j)])];
  }
  Rational total = 0;
  for (std::size_t e = 0; e < instance.edges.size(); ++e) {
    total += instance.edges[e].weight * prefix[static_cast<std::size_t>(times[e])];
  }
  return total;
}

MsopInstance to_msop(const MsscInstance& instance) {
  validate(instance);
  auto coverage = std::make_shared<const CoverageData>(instance);
  auto costs = std::make_shared<const std::vector<Rational>>(instance.costs);
  SetFunction f = [costs](const Subset& s) {
    Rational total = 0;
    s.for_each([&](int v) { total += (*costs)[static_cast<std::size_t>(v)]; });
    return total;
  };
  SetFunction g = [coverage](const Subset& s) { return (*coverage)(s); };
  StructureFlags flags;
  flags.f_modular = true;
  flags.f_subadditive = true;
  flags.f_supermodular = true;
  flags.g_submodular = true;
  flags.union_closed = true;
  SetPredicate family;
  if (instance.or_arcs.empty()) {
    flags.free_family = true;
    flags.intersection_closed = true;
    family = [](const Subset&) { return true; };
  } else {
    std::vector<Job> jobs(static_cast<std::size_t>(instance.size()));
    for (int v = 0; v < instance.size(); ++v) jobs[static_cast<std::size_t>(v)] = Job{instance.costs[static_cast<std::size_t>(v)], 0};
    auto dag = std::make_shared<const OrDag>(std::move(jobs), instance.or_arcs);
    family = [dag](const Subset& s) { return or_initial_membership(*dag, s); };
  }
  return MsopInstance(instance.size(), std::move(family), std::move(f), std::move(g), flags);
}

DensityResult singleton_greedy_density(const MsscInstance& instance, const Subset& base) {
  const CoverageData coverage(instance);
  const Rational covered = coverage(base);
  std::optional<DensityResult> best;
  for (int v = 0; v < instance.size(); ++v) {
    if (base.contains(v)) continue;
    Subset q = base;
    q.insert(v);
    const Density d = Density::ratio(coverage(q) - covered, instance.costs[static_cast<std::size_t>(v)]);
    if (!best || d > best->density) best = DensityResult{base, q, d, 1};
  }
  if (!best) throw Error(ErrorCode::kEmptyRemainder, "base already contains every element");
  return *best;
}

}  // namespace msop
