#include "msop/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace msop {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidChain: return "InvalidChain";
    case ErrorCode::kNotASuperset: return "NotASuperset";
    case ErrorCode::kNotInFamily: return "NotInFamily";
    case ErrorCode::kSolverStall: return "SolverStall";
    case ErrorCode::kNonMonotone: return "NonMonotone";
    case ErrorCode::kInfeasibleInitialSet: return "InfeasibleInitialSet";
    case ErrorCode::kNotWellFounded: return "NotWellFounded";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNoFeasiblePermutation: return "NoFeasiblePermutation";
    case ErrorCode::kNoFeasibleSuperset: return "NoFeasibleSuperset";
    case ErrorCode::kMissingCertificate: return "MissingCertificate";
    case ErrorCode::kCyclicInput: return "CyclicInput";
    case ErrorCode::kNotInitial: return "NotInitial";
    case ErrorCode::kNotInforest: return "NotInforest";
    case ErrorCode::kNotMultitree: return "NotMultitree";
    case ErrorCode::kInfeasibleOrder: return "InfeasibleOrder";
    case ErrorCode::kEmptyRemainder: return "EmptyRemainder";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::vector<std::string> StructureFlags::names() const {
  std::vector<std::string> out;
  if (free_family) out.emplace_back("free_family");
  if (union_closed) out.emplace_back("union_closed");
  if (intersection_closed) out.emplace_back("intersection_closed");
  if (f_subadditive) out.emplace_back("f_subadditive");
  if (f_modular) out.emplace_back("f_modular");
  if (f_supermodular) out.emplace_back("f_supermodular");
  if (g_submodular) out.emplace_back("g_submodular");
  if (g_modular) out.emplace_back("g_modular");
  if (g_supermodular) out.emplace_back("g_supermodular");
  return out;
}

MsopInstance::MsopInstance(int n, SetPredicate family, SetFunction cost, SetFunction weight,
                           StructureFlags flags)
    : n_(n),
      ground_(Subset::full(n)),
      family_(std::make_shared<const SetPredicate>(std::move(family))),
      cost_(std::make_shared<const SetFunction>(std::move(cost))),
      weight_(std::make_shared<const SetFunction>(std::move(weight))),
      flags_(flags) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "ground set must be nonempty");
}

bool MsopInstance::in_family(const Subset& s) const {
  if (!s.is_subset_of(ground_)) return false;
  if (s.empty() || s == ground_) return true;
  return (*family_)(s);
}

std::string Chain::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ',';
    out += sets[i].str();
  }
  return out + ")";
}

std::string Permutation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(order[i]);
  }
  return out + ")";
}

void validate_chain(const MsopInstance& instance, const Chain& chain) {
  const auto& sets = chain.sets;
  if (sets.size() < 2) throw Error(ErrorCode::kInvalidChain, "a chain needs at least two sets");
  if (!sets.front().empty()) throw Error(ErrorCode::kInvalidChain, "chain must start at the empty set");
  if (sets.back() != instance.ground()) {
    throw Error(ErrorCode::kInvalidChain, "chain must end at the ground set");
  }
  for (std::size_t j = 1; j < sets.size(); ++j) {
    if (!sets[j - 1].is_strict_subset_of(sets[j])) {
      throw Error(ErrorCode::kInvalidChain,
                  "set " + std::to_string(j) + " does not strictly contain its predecessor");
    }
  }
  for (std::size_t j = 0; j < sets.size(); ++j) {
    if (!instance.in_family(sets[j])) {
      throw Error(ErrorCode::kInvalidChain, "set " + sets[j].str() + " is not in the family");
    }
  }
}

void validate_permutation(const Permutation& p, int n) {
  if (p.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "permutation has " + std::to_string(p.size()) +
                                                 " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : p.order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kInvalidArgument, "not a permutation: " + p.str());
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

namespace {

void check_zero_at_empty(const MsopInstance& instance) {
  if (sgn(instance.cost(Subset{})) != 0 || sgn(instance.weight(Subset{})) != 0) {
    throw Error(ErrorCode::kValidationError, "f and g must vanish on the empty set");
  }
}

}  // namespace

Rational chain_cost(const MsopInstance& instance, const Chain& chain) {
  validate_chain(instance, chain);
  Rational total = 0;
  Rational prev_f = instance.cost(chain.sets.front());
  Rational prev_g = instance.weight(chain.sets.front());
  if (sgn(prev_f) != 0 || sgn(prev_g) != 0) {
    throw Error(ErrorCode::kValidationError, "f and g must vanish on the empty set");
  }
  for (std::size_t j = 1; j < chain.sets.size(); ++j) {
    Rational f = instance.cost(chain.sets[j]);
    Rational g = instance.weight(chain.sets[j]);
    if (f < prev_f || g < prev_g) {
      throw Error(ErrorCode::kNonMonotone, "f or g decreases along the chain at " + chain.sets[j].str());
    }
    total += f * (g - prev_g);
    prev_f = std::move(f);
    prev_g = std::move(g);
  }
  return total;
}

DensityResult marginal_density(const MsopInstance& instance, const Subset& base,
                               const Subset& candidate) {
  if (!base.is_strict_subset_of(candidate)) {
    throw Error(ErrorCode::kNotASuperset, candidate.str() + " is not a strict superset of " + base.str());
  }
  if (!instance.in_family(base)) throw Error(ErrorCode::kNotInFamily, base.str());
  if (!instance.in_family(candidate)) throw Error(ErrorCode::kNotInFamily, candidate.str());
  const Rational df = instance.cost(candidate) - instance.cost(base);
  const Rational dg = instance.weight(candidate) - instance.weight(base);
  if (sgn(df) < 0 || sgn(dg) < 0) {
    throw Error(ErrorCode::kNonMonotone, "f or g decreases from " + base.str() + " to " + candidate.str());
  }
  DensityResult r;
  r.base = base;
  r.candidate = candidate;
  r.density = Density::ratio(dg, df);
  r.alpha = 1;
  return r;
}

GreedyChain greedy_chain(const MsopInstance& instance, const DensitySolver& solver,
                         const Rational& alpha) {
  if (alpha < 1) throw Error(ErrorCode::kInvalidArgument, "alpha must be at least 1");
  check_zero_at_empty(instance);
  GreedyChain out;
  out.alpha = alpha;
  out.chain.sets.push_back(Subset{});
  Subset current;
  bool last_infinite = false;
  while (current != instance.ground()) {
    const DensityResult r = solver(instance, current);
    if (r.base != current) {
      throw Error(ErrorCode::kInvalidArgument, "solver answered for base " + r.base.str() +
                                                   " instead of " + current.str());
    }
    if (r.candidate == current) throw Error(ErrorCode::kSolverStall, "solver returned the base " + current.str());
    if (r.alpha > alpha) {
      throw Error(ErrorCode::kInvalidArgument,
                  "solver certificate " + to_string(r.alpha) + " exceeds alpha " + to_string(alpha));
    }
    // Recomputed from the oracles; this also performs the monotonicity check.
    const DensityResult checked = marginal_density(instance, current, r.candidate);
    if (checked.density != r.density) {
      throw Error(ErrorCode::kInvalidArgument, "solver reported density " + r.density.str() +
                                                   " but the oracles give " + checked.density.str());
    }
    if (checked.density.is_infinite() && last_infinite) {
      out.chain.sets.back() = r.candidate;
    } else {
      out.chain.sets.push_back(r.candidate);
      out.step_densities.push_back(checked.density);
    }
    last_infinite = checked.density.is_infinite();
    current = r.candidate;
  }
  return out;
}

Chain permutation_to_chain(const Permutation& p) {
  Chain c;
  c.sets.reserve(p.order.size() + 1);
  Subset s;
  c.sets.push_back(s);
  for (int v : p.order) {
    s.insert(v);
    c.sets.push_back(s);
  }
  return c;
}

Chain permutation_to_chain(const MsopInstance& instance, const Permutation& p) {
  validate_permutation(p, instance.size());
  Chain c = permutation_to_chain(p);
  for (std::size_t j = 1; j < c.sets.size(); ++j) {
    if (!instance.in_family(c.sets[j])) {
      throw InfeasibleInitialSetError(static_cast<int>(j), "initial set " + c.sets[j].str() +
                                                               " of " + p.str() + " is infeasible");
    }
  }
  return c;
}

Permutation splice(const Permutation& sigma, const Permutation& tau, int j) {
  const int n = sigma.size();
  if (tau.size() != n) throw Error(ErrorCode::kInvalidArgument, "splice of permutations of different sizes");
  if (j < 1 || j > n) throw Error(ErrorCode::kInvalidArgument, "splice position out of range");
  Permutation out;
  out.order.assign(sigma.order.begin(), sigma.order.begin() + j);
  Subset taken = Subset::from_elements(out.order);
  for (int v : tau.order) {
    if (!taken.contains(v)) out.order.push_back(v);
  }
  return out;
}

PermutationSpace prefix_closed_space(const MsopInstance& instance) {
  PermutationSpace space;
  space.extend = [instance](const Subset& s) -> std::optional<Permutation> {
    if (!instance.in_family(s)) return std::nullopt;
    // Depth-first search for an order from `from` to `target` whose
    // intermediate sets are all feasible.
    auto order_between = [&instance](const Subset& from, const Subset& target,
                                     std::vector<int>& order) {
      std::unordered_set<Subset, SubsetHash> dead;
      std::function<bool(const Subset&)> dfs = [&](const Subset& p) {
        if (p == target) return true;
        if (dead.contains(p)) return false;
        const Subset rest = target - p;
        bool found = false;
        rest.for_each([&](int v) {
          if (found) return;
          Subset q = p;
          q.insert(v);
          if (instance.in_family(q)) {
            order.push_back(v);
            if (dfs(q)) {
              found = true;
            } else {
              order.pop_back();
            }
          }
        });
        if (!found) dead.insert(p);
        return found;
      };
      return dfs(from);
    };
    Permutation p;
    if (!order_between(Subset{}, s, p.order)) return std::nullopt;
    if (!order_between(s, instance.ground(), p.order)) return std::nullopt;
    return p;
  };
  space.contains = [instance](const Permutation& p) {
    if (p.size() != instance.size()) return false;
    try {
      permutation_to_chain(instance, p);
    } catch (const Error&) {
      return false;
    }
    return true;
  };
  return space;
}

PermutationSpace free_space(int n, std::vector<int> priority) {
  if (priority.empty()) {
    priority.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) priority[static_cast<std::size_t>(i)] = i;
  }
  validate_permutation(Permutation{priority}, n);
  PermutationSpace space;
  space.extend = [n, priority](const Subset& s) -> std::optional<Permutation> {
    if (!s.is_subset_of(Subset::full(n))) return std::nullopt;
    Permutation p;
    for (int v : priority) {
      if (s.contains(v)) p.order.push_back(v);
    }
    for (int v : priority) {
      if (!s.contains(v)) p.order.push_back(v);
    }
    return p;
  };
  space.contains = [n](const Permutation& p) {
    try {
      validate_permutation(p, n);
    } catch (const Error&) {
      return false;
    }
    return true;
  };
  return space;
}

Permutation chain_to_permutation(const MsopInstance& instance, const Chain& chain,
                                 const PermutationSpace& space) {
  validate_chain(instance, chain);
  const auto& sets = chain.sets;
  auto member_with_prefix = [&](std::size_t j) {
    auto sigma = space.extend(sets[j]);
    if (!sigma) {
      throw Error(ErrorCode::kNotWellFounded,
                  "no feasible permutation has " + sets[j].str() + " as an initial set");
    }
    return *sigma;
  };
  Permutation tau = member_with_prefix(1);
  for (std::size_t j = 2; j < sets.size(); ++j) {
    const Permutation sigma = member_with_prefix(j);
    tau = splice(tau, sigma, sets[j - 1].size());
    if (!space.contains(tau)) {
      throw Error(ErrorCode::kNotWellFounded,
                  "splicing at " + sets[j - 1].str() + " toward " + sets[j].str() + " gives " +
                      tau.str() + ", which is not feasible; chain " + chain.str() +
                      " is consistent with no permutation built this way");
    }
  }
  const Chain full = permutation_to_chain(tau);
  for (const Subset& s : sets) {
    if (full.sets[static_cast<std::size_t>(s.size())] != s) {
      throw Error(ErrorCode::kNotWellFounded, tau.str() + " is not consistent with " + chain.str());
    }
  }
  return tau;
}

DensityResult singleton_density(const MsopInstance& instance, const Subset& base) {
  std::optional<DensityResult> best;
  const Subset rest = instance.ground() - base;
  rest.for_each([&](int v) {
    Subset q = base;
    q.insert(v);
    if (!instance.in_family(q)) return;
    DensityResult r = marginal_density(instance, base, q);
    if (!best || r.density > best->density) best = std::move(r);
  });
  if (!best) {
    throw Error(ErrorCode::kNoFeasibleSuperset, "no feasible single-element extension of " + base.str());
  }
  return *best;
}

std::vector<std::string> spot_check_flags(const MsopInstance& instance, std::mt19937_64& rng,
                                          int samples) {
  const int n = instance.size();
  auto random_set = [&]() {
    Subset s;
    for (int v = 0; v < n; ++v) {
      if (rng() & 1u) s.insert(v);
    }
    return s;
  };
  const auto& fl = instance.flags();
  std::vector<std::string> violated;
  auto flag = [&](const char* name) {
    if (std::find(violated.begin(), violated.end(), name) == violated.end()) violated.emplace_back(name);
  };
  if (sgn(instance.cost(Subset{})) != 0) flag("f_zero_at_empty");
  if (sgn(instance.weight(Subset{})) != 0) flag("g_zero_at_empty");
  for (int i = 0; i < samples; ++i) {
    const Subset s = random_set();
    const Subset t = random_set();
    const Subset u = s | t;
    const Subset x = s & t;
    const Rational fs = instance.cost(s), ft = instance.cost(t), fu = instance.cost(u), fx = instance.cost(x);
    const Rational gs = instance.weight(s), gt = instance.weight(t), gu = instance.weight(u),
                   gx = instance.weight(x);
    if (fu < fs || fu < ft || fx > fs) flag("f_monotone");
    if (gu < gs || gu < gt || gx > gs) flag("g_monotone");
    const bool s_in = instance.in_family(s), t_in = instance.in_family(t);
    if (fl.free_family && (!s_in || !t_in)) flag("free_family");
    if (fl.union_closed && s_in && t_in && !instance.in_family(u)) flag("union_closed");
    if (fl.intersection_closed && s_in && t_in && !instance.in_family(x)) flag("intersection_closed");
    if (fl.f_subadditive) {
      const Subset d = t - s;
      if (instance.cost(s | d) > fs + instance.cost(d)) flag("f_subadditive");
    }
    if (fl.f_modular && fu + fx != fs + ft) flag("f_modular");
    if (fl.f_supermodular && fu + fx < fs + ft) flag("f_supermodular");
    if (fl.g_modular && gu + gx != gs + gt) flag("g_modular");
    if (fl.g_submodular && gu + gx > gs + gt) flag("g_submodular");
    if (fl.g_supermodular && gu + gx < gs + gt) flag("g_supermodular");
  }
  return violated;
}

}  // namespace msop
