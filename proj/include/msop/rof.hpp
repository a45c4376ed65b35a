#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "msop/core.hpp"

namespace msop {

enum class GateKind { kLeaf, kAnd, kOr };

struct Gate {
  GateKind kind = GateKind::kLeaf;
  int var = -1;    // leaves only, 0-based
  int left = -1;   // internal gates only
  int right = -1;
};

struct Test {
  Rational p;    // probability that the variable is 1, strictly between 0 and 1
  int cost = 1;  // positive integer
};

/// Binary AND/OR tree with every variable at exactly one leaf.
class ReadOnceFormula {
 public:
  /// `gates` may be in any order; `root` indexes into it. Throws
  /// Error(kValidationError) unless the gates form a binary tree whose leaves
  /// carry each variable exactly once and every test is valid.
  ReadOnceFormula(std::vector<Test> tests, std::vector<Gate> gates, int root);

  int size() const { return static_cast<int>(tests_.size()); }
  const Test& test(int i) const { return tests_[static_cast<std::size_t>(i)]; }
  const std::vector<Test>& tests() const { return tests_; }
  /// Post-order: children before parents, root last.
  const std::vector<Gate>& gates() const { return gates_; }
  int root() const { return static_cast<int>(gates_.size()) - 1; }
  /// Variables below gate G.
  const Subset& leaves(int gate) const { return leaves_[static_cast<std::size_t>(gate)]; }
  int total_cost() const;

  /// Prefix form with 1-based variable names, e.g. "(and x1 (or x2 x3))".
  std::string str() const;

 private:
  std::vector<Test> tests_;
  std::vector<Gate> gates_;
  std::vector<Subset> leaves_;
};

enum class Trit { kFalse, kTrue, kUnknown };

using PartialAssignment = std::vector<Trit>;

/// Three-valued evaluation: AND is 0 when a child is 0 and 1 when both are 1,
/// OR dually, and * otherwise.
Trit eval_partial(const ReadOnceFormula& formula, const PartialAssignment& b);

/// Per gate (post-order index), the probability that the gate evaluates to
/// `ell` once the tests in S are known.
std::vector<Rational> gate_probabilities(const ReadOnceFormula& formula, const Subset& s, int ell);

/// P[formula is determined by the tests in S].
Rational g_determined(const ReadOnceFormula& formula, const Subset& s);

/// Chain cost of the order's initial sets with f = total test cost and
/// g = g_determined.
Rational evaluate_order_cost(const ReadOnceFormula& formula, const Permutation& order);
/// sum_j c_{sigma_j} P[undetermined after the first j-1 tests].
Rational stopping_form_cost(const ReadOnceFormula& formula, const Permutation& order);

struct RpEntry {
  Rational p;
  Subset r;
};

/// tables[gate][ell] maps each feasible cost t of a subset R of the gate's
/// untested variables to the largest P[gate = ell after testing S + R] over
/// such R of cost exactly t, and one R attaining it.
struct RpTables {
  std::vector<std::array<std::map<int, RpEntry>, 2>> tables;

  const std::map<int, RpEntry>& at(int gate, int ell) const {
    return tables[static_cast<std::size_t>(gate)][static_cast<std::size_t>(ell)];
  }
};

RpTables compute_rp(const ReadOnceFormula& formula, const Subset& s);

struct Supplement {
  Subset r;
  int ell = 1;
  int t = 0;
  Rational sigma;  // (p_{root,t,ell} - P[formula = ell given S]) / t
};

/// Best sigma_0 and sigma_1 supplement at the root (smallest t on ties);
/// R^0 wins only when its sigma is strictly larger. Throws
/// Error(kEmptyRemainder) when S is everything.
Supplement find_supp_detail(const ReadOnceFormula& formula, const Subset& s);
Subset find_supp(const ReadOnceFormula& formula, const Subset& s);

/// f = total cost, g = g_determined, free family.
MsopInstance to_msop(const ReadOnceFormula& formula);

/// find_supp as a density solver with certificate alpha = 2.
DensitySolver find_supp_solver(const ReadOnceFormula& formula);

struct RofGreedyResult {
  GreedyChain chain;
  Permutation order;
  Rational cost;
};

/// 2-greedy chain from find_supp, refined to a permutation by listing each
/// step's new tests in decreasing p_i / c_i (ties by index).
RofGreedyResult rof_greedy(const ReadOnceFormula& formula);

}  // namespace msop
