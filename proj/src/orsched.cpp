#include "msop/orsched.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>

namespace msop {

std::string_view shape_name(DagShape shape) {
  switch (shape) {
    case DagShape::kOuttree: return "outtree";
    case DagShape::kIntree: return "intree";
    case DagShape::kInforest: return "inforest";
    case DagShape::kBipartite: return "bipartite";
    case DagShape::kMultitree: return "multitree";
    case DagShape::kGeneral: return "general";
  }
  return "general";
}

OrDag::OrDag(std::vector<Job> jobs, std::vector<std::pair<int, int>> arcs)
    : jobs_(std::move(jobs)), arcs_(std::move(arcs)) {
  const int n = size();
  if (n > Subset::kCapacity) throw Error(ErrorCode::kValidationError, "too many jobs");
  for (int v = 0; v < n; ++v) {
    if (sgn(job(v).processing) < 0 || sgn(job(v).weight) < 0) {
      throw Error(ErrorCode::kValidationError, "job " + std::to_string(v) + " has negative data");
    }
  }
  preds_.resize(static_cast<std::size_t>(n));
  succs_.resize(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> seen;
  for (const auto& [i, j] : arcs_) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw Error(ErrorCode::kValidationError,
                  "arc " + std::to_string(i) + " " + std::to_string(j) + " references a missing job");
    }
    if (i == j) throw Error(ErrorCode::kCyclicInput, "self loop at job " + std::to_string(i));
    if (!seen.insert({i, j}).second) {
      throw Error(ErrorCode::kValidationError, "duplicate arc " + std::to_string(i) + " " + std::to_string(j));
    }
    succs_[static_cast<std::size_t>(i)].push_back(j);
    preds_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& l : preds_) std::sort(l.begin(), l.end());
  for (auto& l : succs_) std::sort(l.begin(), l.end());

  std::vector<int> indegree(static_cast<std::size_t>(n));
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    indegree[static_cast<std::size_t>(v)] = static_cast<int>(predecessors(v).size());
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : successors(v)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(topo_.size()) != n) throw Error(ErrorCode::kCyclicInput, "precedence graph has a cycle");
  origin_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) origin_[static_cast<std::size_t>(v)] = v;
}

namespace {

bool is_multitree(const OrDag& dag) {
  const int n = dag.size();
  const auto& topo = dag.topological_order();
  std::vector<int> paths(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(paths.begin(), paths.end(), 0);
    paths[static_cast<std::size_t>(s)] = 1;
    for (int v : topo) {
      const int pv = paths[static_cast<std::size_t>(v)];
      if (pv == 0) continue;
      if (pv > 1) return false;
      for (int w : dag.successors(v)) {
        auto& pw = paths[static_cast<std::size_t>(w)];
        pw = std::min(2, pw + pv);
      }
    }
  }
  return true;
}

bool weakly_connected(const OrDag& dag) {
  const int n = dag.size();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto* list : {&dag.predecessors(v), &dag.successors(v)}) {
      for (int w : *list) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == n;
}

}  // namespace

ShapeLabels shape_labels(const OrDag& dag) {
  ShapeLabels l;
  l.outtree = true;
  l.inforest = true;
  l.bipartite = true;
  for (int v = 0; v < dag.size(); ++v) {
    const auto np = dag.predecessors(v).size();
    const auto ns = dag.successors(v).size();
    if (np > 1) l.outtree = false;
    if (ns > 1) l.inforest = false;
    if (np > 0 && ns > 0) l.bipartite = false;
  }
  l.intree = l.inforest && weakly_connected(dag);
  // Outtrees and inforests are multitrees; only test the rest.
  l.multitree = l.outtree || l.inforest || l.bipartite || is_multitree(dag);
  return l;
}

DagShape classify_dag(const OrDag& dag) {
  const ShapeLabels l = shape_labels(dag);
  if (l.outtree) return DagShape::kOuttree;
  if (l.intree) return DagShape::kIntree;
  if (l.inforest) return DagShape::kInforest;
  if (l.bipartite) return DagShape::kBipartite;
  if (l.multitree) return DagShape::kMultitree;
  return DagShape::kGeneral;
}

bool or_initial_membership(const OrDag& dag, const Subset& s) {
  if (s.bound() > dag.size()) return false;
  bool ok = true;
  s.for_each([&](int v) {
    if (!ok) return;
    const auto& preds = dag.predecessors(v);
    if (preds.empty()) return;
    ok = std::any_of(preds.begin(), preds.end(), [&](int u) { return s.contains(u); });
  });
  return ok;
}

OrDag residual(const OrDag& dag, const Subset& s) {
  if (!or_initial_membership(dag, s)) throw Error(ErrorCode::kNotInitial, s.str() + " is not OR-initial");
  const int n = dag.size();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<Job> jobs;
  std::vector<int> origin;
  for (int v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    index[static_cast<std::size_t>(v)] = static_cast<int>(jobs.size());
    jobs.push_back(dag.job(v));
    origin.push_back(v);
  }
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [i, j] : dag.arcs()) {
    if (s.contains(i) || s.contains(j)) continue;
    const auto& preds = dag.predecessors(j);
    const bool satisfied = std::any_of(preds.begin(), preds.end(), [&](int u) { return s.contains(u); });
    if (satisfied) continue;
    arcs.emplace_back(index[static_cast<std::size_t>(i)], index[static_cast<std::size_t>(j)]);
  }
  OrDag out(std::move(jobs), std::move(arcs));
  out.origin_ = std::move(origin);
  return out;
}

Rational schedule_cost(const OrDag& dag, const Permutation& order) {
  validate_permutation(order, dag.size());
  Subset done;
  Rational clock = 0;
  Rational total = 0;
  for (int v : order.order) {
    const auto& preds = dag.predecessors(v);
    if (!preds.empty() && !std::any_of(preds.begin(), preds.end(), [&](int u) { return done.contains(u); })) {
      throw Error(ErrorCode::kInfeasibleOrder, "job " + std::to_string(v) + " runs before all its predecessors");
    }
    clock += dag.job(v).processing;
    total += dag.job(v).weight * clock;
    done.insert(v);
  }
  return total;
}

MsopInstance to_msop(const OrDag& dag) {
  auto shared = std::make_shared<const OrDag>(dag);
  SetFunction f = [shared](const Subset& s) {
    Rational total = 0;
    s.for_each([&](int v) { total += shared->job(v).processing; });
    return total;
  };
  SetFunction g = [shared](const Subset& s) {
    Rational total = 0;
    s.for_each([&](int v) { total += shared->job(v).weight; });
    return total;
  };
  StructureFlags flags;
  flags.union_closed = true;
  flags.f_modular = flags.f_subadditive = flags.f_supermodular = true;
  flags.g_modular = flags.g_submodular = flags.g_supermodular = true;
  if (dag.arcs().empty()) {
    flags.free_family = true;
    flags.intersection_closed = true;
  }
  return MsopInstance(dag.size(), [shared](const Subset& s) { return or_initial_membership(*shared, s); },
                      std::move(f), std::move(g), flags);
}

PermutationSpace or_permutation_space(const OrDag& dag) {
  auto shared = std::make_shared<const OrDag>(dag);
  PermutationSpace space;
  space.extend = [shared](const Subset& s) -> std::optional<Permutation> {
    if (!or_initial_membership(*shared, s)) return std::nullopt;
    Permutation p;
    // Any topological order restricted to an OR-initial set is feasible.
    for (int v : shared->topological_order()) {
      if (s.contains(v)) p.order.push_back(v);
    }
    for (int v : shared->topological_order()) {
      if (!s.contains(v)) p.order.push_back(v);
    }
    return p;
  };
  space.contains = [shared](const Permutation& p) {
    try {
      schedule_cost(*shared, p);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  return space;
}

namespace {

void check_base(const OrDag& dag, const Subset& base) {
  if (!or_initial_membership(dag, base)) throw Error(ErrorCode::kNotInitial, base.str() + " is not OR-initial");
  if (base == Subset::full(dag.size())) throw Error(ErrorCode::kEmptyRemainder, "every job is already scheduled");
}

}  // namespace

std::pair<DensityResult, Stem> max_density_stem_detail(const OrDag& dag, const SetFunction& g,
                                                       const Subset& base) {
  check_base(dag, base);
  const OrDag rest = residual(dag, base);
  if (!shape_labels(rest).inforest) throw Error(ErrorCode::kNotInforest, "residual DAG is not an inforest");
  const Rational gb = g(base);
  std::optional<DensityResult> best;
  Stem best_stem;
  for (int s = 0; s < rest.size(); ++s) {
    if (!rest.predecessors(s).empty()) continue;
    Subset set = base;
    Rational p = 0;
    Stem stem;
    for (int v = s;;) {
      const int id = rest.origin()[static_cast<std::size_t>(v)];
      set.insert(id);
      stem.vertices.push_back(id);
      p += rest.job(v).processing;
      const Density d = Density::ratio(g(set) - gb, p);
      // Sources are visited in increasing id and stems grow by one job, so
      // a strict improvement test keeps the shortest stem, then smallest start.
      const bool better = !best || d > best->density ||
                          (d == best->density && stem.vertices.size() < best_stem.vertices.size());
      if (better) {
        best = DensityResult{base, set, d, 1};
        best_stem = stem;
      }
      const auto& next = rest.successors(v);
      if (next.empty()) break;
      v = next.front();
    }
  }
  return {*best, std::move(best_stem)};
}

DensityResult max_density_stem(const OrDag& dag, const SetFunction& g, const Subset& base) {
  return max_density_stem_detail(dag, g, base).first;
}

namespace {

struct SubtreeSearch {
  const OrDag& dag;
  std::vector<std::vector<int>> children;
  std::vector<int> order;  // preorder from the root
  std::vector<Rational> value;

  SubtreeSearch(const OrDag& d, int root) : dag(d), children(static_cast<std::size_t>(d.size())) {
    // In a multitree each job reachable from the root is reached by exactly
    // one path, so the reachable part is an outtree.
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : dag.successors(v)) {
        children[static_cast<std::size_t>(v)].push_back(w);
        stack.push_back(w);
      }
    }
    value.resize(static_cast<std::size_t>(d.size()));
  }

  // Best rooted subtree for w - lambda p, keeping a child only when it helps
  // strictly, which makes the answer inclusion-minimal.
  std::vector<int> solve(const Rational& lambda) {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      Rational val = dag.job(v).weight - lambda * dag.job(v).processing;
      for (int c : children[static_cast<std::size_t>(v)]) {
        if (sgn(value[static_cast<std::size_t>(c)]) > 0) val += value[static_cast<std::size_t>(c)];
      }
      value[static_cast<std::size_t>(v)] = std::move(val);
    }
    std::vector<int> picked;
    std::vector<int> stack{order.front()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      picked.push_back(v);
      for (int c : children[static_cast<std::size_t>(v)]) {
        if (sgn(value[static_cast<std::size_t>(c)]) > 0) stack.push_back(c);
      }
    }
    return picked;
  }
};

}  // namespace

DensityResult max_density_outtree(const OrDag& dag, const Subset& base) {
  check_base(dag, base);
  const OrDag rest = residual(dag, base);
  if (!shape_labels(rest).multitree) throw Error(ErrorCode::kNotMultitree, "residual DAG is not a multitree");
  std::optional<DensityResult> best;
  int best_size = 0;
  for (int s = 0; s < rest.size(); ++s) {
    if (!rest.predecessors(s).empty()) continue;
    std::vector<int> picked;
    Density d = Density::infinite();
    if (sgn(rest.job(s).processing) == 0) {
      picked = {s};
    } else {
      SubtreeSearch search(rest, s);
      Rational lambda = rest.job(s).weight / rest.job(s).processing;
      picked = search.solve(lambda);
      while (sgn(search.value[static_cast<std::size_t>(s)]) > 0) {
        Rational w = 0;
        Rational p = 0;
        for (int v : picked) {
          w += rest.job(v).weight;
          p += rest.job(v).processing;
        }
        lambda = w / p;
        picked = search.solve(lambda);
      }
      d = Density::finite(lambda);
    }
    Subset set = base;
    for (int v : picked) set.insert(rest.origin()[static_cast<std::size_t>(v)]);
    const int size = static_cast<int>(picked.size());
    if (!best || d > best->density || (d == best->density && size < best_size)) {
      best = DensityResult{base, set, d, 1};
      best_size = size;
    }
  }
  return *best;
}

DensitySolver stem_solver(const OrDag& dag) {
  auto shared = std::make_shared<const OrDag>(dag);
  return [shared](const MsopInstance& instance, const Subset& base) {
    return max_density_stem(*shared, [&instance](const Subset& s) { return instance.weight(s); }, base);
  };
}

DensitySolver outtree_solver(const OrDag& dag) {
  auto shared = std::make_shared<const OrDag>(dag);
  return [shared](const MsopInstance&, const Subset& base) { return max_density_outtree(*shared, base); };
}

}  // namespace msop
