// Independent brute-force references used by the test suites. Nothing here
// calls into the exact module; costs and densities are recomputed from the
// raw oracles.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "msop/generators.hpp"
#include "msop/problem.hpp"
#include "msop/rof.hpp"

namespace oracle {

using msop::Chain;
using msop::Density;
using msop::MsopInstance;
using msop::Permutation;
using msop::Rational;
using msop::Subset;

inline Rational direct_chain_cost(const MsopInstance& inst, const std::vector<Subset>& sets) {
  Rational total = 0;
  for (std::size_t j = 1; j < sets.size(); ++j) {
    total += inst.cost(sets[j]) * (inst.weight(sets[j]) - inst.weight(sets[j - 1]));
  }
  return total;
}

inline Rational permutation_cost(const MsopInstance& inst, const std::vector<int>& order) {
  // Completion-time form: element sigma_j finishes at f(S_j) and carries
  // weight g(S_j) - g(S_{j-1}).
  Subset prefix;
  Rational before = 0, total = 0;
  for (int v : order) {
    prefix.insert(v);
    const Rational now = inst.weight(prefix);
    total += inst.cost(prefix) * (now - before);
    before = now;
  }
  return total;
}

inline bool prefixes_feasible(const MsopInstance& inst, const std::vector<int>& order) {
  Subset prefix;
  for (int v : order) {
    prefix.insert(v);
    if (!inst.in_family(prefix)) return false;
  }
  return true;
}

/// Minimum over all n! orders with feasible prefixes.
inline std::optional<Rational> brute_opt_permutation(const MsopInstance& inst) {
  std::vector<int> order(static_cast<std::size_t>(inst.size()));
  std::iota(order.begin(), order.end(), 0);
  std::optional<Rational> best;
  do {
    if (!prefixes_feasible(inst, order)) continue;
    Rational c = permutation_cost(inst, order);
    if (!best || c < *best) best = c;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Minimum over every chain of feasible sets, by plain recursion.
inline Rational brute_opt_chain(const MsopInstance& inst) {
  const std::uint64_t full = (std::uint64_t{1} << inst.size()) - 1;
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 1; m <= full; ++m) {
    if (inst.in_family(Subset::from_mask(m))) members.push_back(m);
  }
  std::function<Rational(std::uint64_t)> best_from = [&](std::uint64_t cur) -> Rational {
    if (cur == full) return 0;
    std::optional<Rational> best;
    const Subset a = Subset::from_mask(cur);
    for (std::uint64_t m : members) {
      if ((m & cur) != cur || m == cur) continue;
      const Subset b = Subset::from_mask(m);
      Rational c = inst.cost(b) * (inst.weight(b) - inst.weight(a)) + best_from(m);
      if (!best || c < *best) best = c;
    }
    return *best;
  };
  return best_from(0);
}

/// max over feasible strict supersets T of base of rho_base(T).
inline Density brute_max_density(const MsopInstance& inst, const Subset& base) {
  const std::uint64_t full = (std::uint64_t{1} << inst.size()) - 1;
  std::optional<Density> best;
  const Rational fb = inst.cost(base), gb = inst.weight(base);
  for (std::uint64_t m = 0; m <= full; ++m) {
    const Subset t = Subset::from_mask(m);
    if (!base.is_strict_subset_of(t) || !inst.in_family(t)) continue;
    const Rational df = inst.cost(t) - fb;
    const Density d = sgn(df) == 0 ? Density::infinite() : Density::finite(Rational((inst.weight(t) - gb) / df));
    if (!best || d > *best) best = d;
  }
  return *best;
}

/// Uniformly random next feasible strict superset until the ground set.
inline Chain random_chain(const MsopInstance& inst, msop::Rng& rng) {
  const std::uint64_t full = (std::uint64_t{1} << inst.size()) - 1;
  Chain c;
  c.sets.push_back(Subset{});
  std::uint64_t cur = 0;
  while (cur != full) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m = cur + 1; m <= full; ++m) {
      if ((m & cur) == cur && inst.in_family(Subset::from_mask(m))) next.push_back(m);
    }
    cur = next[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(next.size()) - 1))];
    c.sets.push_back(Subset::from_mask(cur));
  }
  return c;
}

/// Keeps the endpoints and a random selection of the interior sets.
inline Chain random_subchain(const Chain& chain, msop::Rng& rng) {
  Chain out;
  out.sets.push_back(chain.sets.front());
  for (std::size_t j = 1; j + 1 < chain.sets.size(); ++j) {
    if (rng.chance(1, 2)) out.sets.push_back(chain.sets[j]);
  }
  out.sets.push_back(chain.sets.back());
  return out;
}

inline std::vector<int> random_order(int n, msop::Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return order;
}

// ---- read-once formulas, by enumeration of full assignments ----

/// Two-valued value of gate `g` on a full assignment (bit i = x_{i+1}).
inline bool eval_full(const msop::ReadOnceFormula& phi, int g, std::uint64_t a) {
  const msop::Gate& gate = phi.gates()[static_cast<std::size_t>(g)];
  if (gate.kind == msop::GateKind::kLeaf) return (a >> gate.var) & 1;
  const bool l = eval_full(phi, gate.left, a);
  const bool r = eval_full(phi, gate.right, a);
  return gate.kind == msop::GateKind::kAnd ? (l && r) : (l || r);
}

inline Rational assignment_probability(const msop::ReadOnceFormula& phi, const Subset& vars, std::uint64_t a) {
  Rational p = 1;
  vars.for_each([&](int i) { p *= ((a >> i) & 1) ? phi.test(i).p : Rational(1 - phi.test(i).p); });
  return p;
}

/// Value gate g is forced to by the tested values: 0, 1, or -1 if some
/// completions differ.
inline int forced_value(const msop::ReadOnceFormula& phi, int g, const Subset& tested, std::uint64_t a) {
  const Subset free = phi.leaves(g) - tested;
  const std::vector<int> f = free.elements();
  int seen = -1;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << f.size()); ++c) {
    std::uint64_t full = a;
    for (std::size_t k = 0; k < f.size(); ++k) {
      full = ((c >> k) & 1) ? (full | (std::uint64_t{1} << f[k])) : (full & ~(std::uint64_t{1} << f[k]));
    }
    const int v = eval_full(phi, g, full) ? 1 : 0;
    if (seen == -1) seen = v;
    else if (seen != v) return -1;
  }
  return seen;
}

/// P[gate g is forced to ell by the tests in S], enumerating values of S
/// restricted to the gate's variables.
inline Rational enumerate_gate_probability(const msop::ReadOnceFormula& phi, int g, const Subset& s, int ell) {
  const Subset tested = s & phi.leaves(g);
  const std::vector<int> t = tested.elements();
  Rational total = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << t.size()); ++c) {
    std::uint64_t a = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if ((c >> k) & 1) a |= std::uint64_t{1} << t[k];
    }
    if (forced_value(phi, g, tested, a) == ell) total += assignment_probability(phi, tested, a);
  }
  return total;
}

/// Expected cost of testing in `order` until the formula is determined.
inline Rational enumerate_order_cost(const msop::ReadOnceFormula& phi, const std::vector<int>& order) {
  const int n = phi.size();
  const Subset all = Subset::full(n);
  Rational total = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
    Subset tested;
    int spent = 0;
    for (int v : order) {
      if (forced_value(phi, phi.root(), tested, a) != -1) break;
      tested.insert(v);
      spent += phi.test(v).cost;
    }
    total += assignment_probability(phi, all, a) * spent;
  }
  return total;
}

}  // namespace oracle
