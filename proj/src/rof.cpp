#include "msop/rof.hpp"

#include <algorithm>
#include <memory>
#include <optional>

namespace msop {

ReadOnceFormula::ReadOnceFormula(std::vector<Test> tests, std::vector<Gate> gates, int root)
    : tests_(std::move(tests)) {
  const int n = size();
  if (n < 1) throw Error(ErrorCode::kValidationError, "formula needs at least one variable");
  if (n > Subset::kCapacity) throw Error(ErrorCode::kValidationError, "too many variables");
  for (int i = 0; i < n; ++i) {
    const Test& t = test(i);
    if (sgn(t.p) <= 0 || t.p >= 1) {
      throw Error(ErrorCode::kValidationError, "x" + std::to_string(i + 1) + " needs 0 < p < 1");
    }
    if (t.cost < 1) throw Error(ErrorCode::kValidationError, "x" + std::to_string(i + 1) + " needs a positive cost");
  }
  const int count = static_cast<int>(gates.size());
  if (root < 0 || root >= count) throw Error(ErrorCode::kValidationError, "root gate out of range");

  std::vector<int> new_index(static_cast<std::size_t>(count), -1);
  std::vector<char> visited(static_cast<std::size_t>(count), 0);
  std::vector<char> var_seen(static_cast<std::size_t>(n), 0);
  // Iterative post-order; (gate, children pushed).
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [g, expanded] = stack.back();
    stack.pop_back();
    const Gate& gate = gates[static_cast<std::size_t>(g)];
    if (!expanded) {
      if (visited[static_cast<std::size_t>(g)]) throw Error(ErrorCode::kValidationError, "gates do not form a tree");
      visited[static_cast<std::size_t>(g)] = 1;
      stack.push_back({g, true});
      if (gate.kind != GateKind::kLeaf) {
        for (int c : {gate.right, gate.left}) {
          if (c < 0 || c >= count) throw Error(ErrorCode::kValidationError, "gate child out of range");
          stack.push_back({c, false});
        }
      }
      continue;
    }
    Gate out = gate;
    Subset below;
    if (gate.kind == GateKind::kLeaf) {
      if (gate.var < 0 || gate.var >= n) throw Error(ErrorCode::kValidationError, "leaf names an unknown variable");
      if (var_seen[static_cast<std::size_t>(gate.var)]) {
        throw Error(ErrorCode::kValidationError, "x" + std::to_string(gate.var + 1) + " appears twice");
      }
      var_seen[static_cast<std::size_t>(gate.var)] = 1;
      below.insert(gate.var);
    } else {
      out.left = new_index[static_cast<std::size_t>(gate.left)];
      out.right = new_index[static_cast<std::size_t>(gate.right)];
      below = leaves_[static_cast<std::size_t>(out.left)] | leaves_[static_cast<std::size_t>(out.right)];
    }
    new_index[static_cast<std::size_t>(g)] = static_cast<int>(gates_.size());
    gates_.push_back(out);
    leaves_.push_back(below);
  }
  if (static_cast<int>(gates_.size()) != count) throw Error(ErrorCode::kValidationError, "unreachable gates");
  for (int i = 0; i < n; ++i) {
    if (!var_seen[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::kValidationError, "x" + std::to_string(i + 1) + " does not appear in the formula");
    }
  }
}

int ReadOnceFormula::total_cost() const {
  int total = 0;
  for (const auto& t : tests_) total += t.cost;
  return total;
}

std::string ReadOnceFormula::str() const {
  std::vector<std::string> text(gates_.size());
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    if (gate.kind == GateKind::kLeaf) {
      text[g] = "x" + std::to_string(gate.var + 1);
    } else {
      text[g] = std::string("(") + (gate.kind == GateKind::kAnd ? "and " : "or ") +
                text[static_cast<std::size_t>(gate.left)] + " " + text[static_cast<std::size_t>(gate.right)] + ")";
    }
  }
  return text.back();
}

Trit eval_partial(const ReadOnceFormula& formula, const PartialAssignment& b) {
  if (static_cast<int>(b.size()) != formula.size()) {
    throw Error(ErrorCode::kInvalidArgument, "assignment length does not match the formula");
  }
  std::vector<Trit> value(formula.gates().size());
  for (std::size_t g = 0; g < formula.gates().size(); ++g) {
    const Gate& gate = formula.gates()[g];
    if (gate.kind == GateKind::kLeaf) {
      value[g] = b[static_cast<std::size_t>(gate.var)];
      continue;
    }
    const Trit l = value[static_cast<std::size_t>(gate.left)];
    const Trit r = value[static_cast<std::size_t>(gate.right)];
    const Trit absorbing = gate.kind == GateKind::kAnd ? Trit::kFalse : Trit::kTrue;
    const Trit neutral = gate.kind == GateKind::kAnd ? Trit::kTrue : Trit::kFalse;
    if (l == absorbing || r == absorbing) {
      value[g] = absorbing;
    } else if (l == neutral && r == neutral) {
      value[g] = neutral;
    } else {
      value[g] = Trit::kUnknown;
    }
  }
  return value.back();
}

namespace {

void check_probability(const Rational& p) {
  if (sgn(p) < 0 || p > 1) throw Error(ErrorCode::kValidationError, "probability left [0, 1]: " + to_string(p));
}

// P[a] + P[b] - P[a] P[b] for independent events.
Rational either(const Rational& a, const Rational& b) { return a + b - a * b; }

}  // namespace

std::vector<Rational> gate_probabilities(const ReadOnceFormula& formula, const Subset& s, int ell) {
  if (ell != 0 && ell != 1) throw Error(ErrorCode::kInvalidArgument, "ell must be 0 or 1");
  const auto& gates = formula.gates();
  std::vector<Rational> prob(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    if (gate.kind == GateKind::kLeaf) {
      const Rational& p = formula.test(gate.var).p;
      prob[g] = s.contains(gate.var) ? (ell == 1 ? p : 1 - p) : Rational(0);
      continue;
    }
    const Rational& a = prob[static_cast<std::size_t>(gate.left)];
    const Rational& b = prob[static_cast<std::size_t>(gate.right)];
    // AND is 1 (OR is 0) only when both inputs are.
    const bool both = (gate.kind == GateKind::kAnd) == (ell == 1);
    prob[g] = both ? Rational(a * b) : either(a, b);
    check_probability(prob[g]);
  }
  return prob;
}

Rational g_determined(const ReadOnceFormula& formula, const Subset& s) {
  return gate_probabilities(formula, s, 1).back() + gate_probabilities(formula, s, 0).back();
}

Rational evaluate_order_cost(const ReadOnceFormula& formula, const Permutation& order) {
  validate_permutation(order, formula.size());
  Subset prefix;
  Rational before = 0;
  int spent = 0;
  Rational total = 0;
  for (int v : order.order) {
    prefix.insert(v);
    spent += formula.test(v).cost;
    const Rational now = g_determined(formula, prefix);
    total += spent * (now - before);
    before = now;
  }
  return total;
}

Rational stopping_form_cost(const ReadOnceFormula& formula, const Permutation& order) {
  validate_permutation(order, formula.size());
  Subset prefix;
  Rational total = 0;
  for (int v : order.order) {
    total += formula.test(v).cost * (1 - g_determined(formula, prefix));
    prefix.insert(v);
  }
  return total;
}

RpTables compute_rp(const ReadOnceFormula& formula, const Subset& s) {
  const auto& gates = formula.gates();
  RpTables out;
  out.tables.resize(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    auto& tab = out.tables[g];
    if (gate.kind == GateKind::kLeaf) {
      const int i = gate.var;
      const Rational& p = formula.test(i).p;
      const Rational p_ell[2] = {1 - p, p};
      for (int ell = 0; ell < 2; ++ell) {
        if (s.contains(i)) {
          tab[static_cast<std::size_t>(ell)][0] = RpEntry{p_ell[ell], Subset{}};
        } else {
          tab[static_cast<std::size_t>(ell)][0] = RpEntry{0, Subset{}};
          tab[static_cast<std::size_t>(ell)][formula.test(i).cost] = RpEntry{p_ell[ell], Subset{i}};
        }
      }
      continue;
    }
    const auto& left = out.tables[static_cast<std::size_t>(gate.left)];
    const auto& right = out.tables[static_cast<std::size_t>(gate.right)];
    for (int ell = 0; ell < 2; ++ell) {
      const bool both = (gate.kind == GateKind::kAnd) == (ell == 1);
      auto& dst = tab[static_cast<std::size_t>(ell)];
      // Splits are visited with j increasing, so the strict test keeps the
      // smallest j among maximisers.
      for (const auto& [j, a] : left[static_cast<std::size_t>(ell)]) {
        for (const auto& [k, b] : right[static_cast<std::size_t>(ell)]) {
          Rational p = both ? Rational(a.p * b.p) : either(a.p, b.p);
          check_probability(p);
          auto it = dst.find(j + k);
          if (it == dst.end()) {
            dst.emplace(j + k, RpEntry{std::move(p), a.r | b.r});
          } else if (p > it->second.p) {
            it->second = RpEntry{std::move(p), a.r | b.r};
          }
        }
      }
    }
  }
  return out;
}

Supplement find_supp_detail(const ReadOnceFormula& formula, const Subset& s) {
  if (s == Subset::full(formula.size())) throw Error(ErrorCode::kEmptyRemainder, "every test is already in S");
  const RpTables rp = compute_rp(formula, s);
  std::optional<Supplement> best[2];
  for (int ell = 0; ell < 2; ++ell) {
    const auto& table = rp.at(formula.root(), ell);
    const Rational& now = table.at(0).p;
    for (const auto& [t, entry] : table) {
      if (t == 0) continue;
      Rational sigma = (entry.p - now) / t;
      auto& b = best[ell];
      if (!b || sigma > b->sigma) b = Supplement{entry.r, ell, t, std::move(sigma)};
    }
  }
  if (best[0] && best[1]) return best[0]->sigma > best[1]->sigma ? *best[0] : *best[1];
  return best[1] ? *best[1] : *best[0];
}

Subset find_supp(const ReadOnceFormula& formula, const Subset& s) { return find_supp_detail(formula, s).r; }

MsopInstance to_msop(const ReadOnceFormula& formula) {
  auto shared = std::make_shared<const ReadOnceFormula>(formula);
  SetFunction f = [shared](const Subset& s) {
    Rational total = 0;
    s.for_each([&](int v) { total += shared->test(v).cost; });
    return total;
  };
  SetFunction g = [shared](const Subset& s) { return g_determined(*shared, s); };
  StructureFlags flags;
  flags.free_family = flags.union_closed = flags.intersection_closed = true;
  flags.f_modular = flags.f_subadditive = flags.f_supermodular = true;
  return MsopInstance(formula.size(), [](const Subset&) { return true; }, std::move(f), std::move(g), flags);
}

DensitySolver find_supp_solver(const ReadOnceFormula& formula) {
  auto shared = std::make_shared<const ReadOnceFormula>(formula);
  return [shared](const MsopInstance& instance, const Subset& base) {
    DensityResult r = marginal_density(instance, base, base | find_supp(*shared, base));
    r.alpha = 2;
    return r;
  };
}

RofGreedyResult rof_greedy(const ReadOnceFormula& formula) {
  const MsopInstance instance = to_msop(formula);
  RofGreedyResult out;
  out.chain = greedy_chain(instance, find_supp_solver(formula), 2);
  const auto& sets = out.chain.chain.sets;
  for (std::size_t j = 1; j < sets.size(); ++j) {
    std::vector<int> block = (sets[j] - sets[j - 1]).elements();
    // p_a / c_a > p_b / c_b, cross-multiplied.
    std::stable_sort(block.begin(), block.end(), [&](int a, int b) {
      return formula.test(a).p * formula.test(b).cost > formula.test(b).p * formula.test(a).cost;
    });
    out.order.order.insert(out.order.order.end(), block.begin(), block.end());
  }
  out.cost = evaluate_order_cost(formula, out.order);
  return out;
}

}  // namespace msop
