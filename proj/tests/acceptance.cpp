// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Seeds and sample counts are fixed here.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "msop/dual.hpp"
#include "msop/exact.hpp"
#include "msop/table.hpp"
#include "oracles.hpp"

using namespace msop;

namespace {

struct Criterion {
  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}
  int number;
  std::string title;
  long checked = 0;
  long failures = 0;
  Rational worst_ratio = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  void ratio(const Rational& got, const Rational& opt) {
    if (sgn(opt) > 0 && got / opt > worst_ratio) worst_ratio = got / opt;
  }
};

int failed_criteria = 0;

void report(const Criterion& c, double seconds) {
  std::ostringstream line;
  line << (c.failures == 0 ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ("
       << c.checked << " checks";
  if (sgn(c.worst_ratio) > 0) line << ", worst ratio " << to_string(c.worst_ratio) << " ~ " << c.worst_ratio.get_d();
  if (c.failures > 0) line << ", " << c.failures << " failures, first: " << c.first_failure;
  line << ", " << static_cast<long>(seconds) << " s)";
  std::cout << line.str() << std::endl;
  if (c.failures > 0) ++failed_criteria;
}

template <class Fn>
void run(Criterion c, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  report(c, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

std::string tag(const std::string& kind, int n, std::uint64_t seed) {
  return kind + " n=" + std::to_string(n) + " seed=" + std::to_string(seed);
}

MsopInstance tabulated(const MsopInstance& inst) { return to_msop(tabulate(inst)); }

// Greedy run on `p.instance` that also compares every step's density with
// the exhaustive maximum on the tabulated copy.
GreedyChain greedy_checking_steps(const Problem& p, const MsopInstance& table, Criterion& c, const std::string& id) {
  GreedyChain g = greedy_chain(p.instance, p.density, p.alpha);
  for (int j = 1; j <= g.chain.steps(); ++j) {
    const Subset& base = g.chain.sets[static_cast<std::size_t>(j - 1)];
    const Density best = exact_max_density(table, base).density;
    const Density got = p.density(p.instance, base).density;
    c.check(got == best, id + " step " + std::to_string(j) + " density " + got.str() + " vs exact " + best.str());
  }
  return g;
}

// Random order in which each job with predecessors follows one of them.
std::vector<int> random_or_order(const OrDag& dag, Rng& rng) {
  std::vector<int> order;
  std::vector<bool> done(static_cast<std::size_t>(dag.size()), false);
  while (static_cast<int>(order.size()) < dag.size()) {
    std::vector<int> ready;
    for (int v = 0; v < dag.size(); ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      const auto& preds = dag.predecessors(v);
      bool ok = preds.empty();
      for (int u : preds) ok = ok || done[static_cast<std::size_t>(u)];
      if (ok) ready.push_back(v);
    }
    const int v = ready[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ready.size()) - 1))];
    done[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
  }
  return order;
}

Rational direct_schedule_cost(const OrDag& dag, const std::vector<int>& order) {
  Rational t = 0, total = 0;
  for (int v : order) {
    t += dag.job(v).processing;
    total += dag.job(v).weight * t;
  }
  return total;
}

Rational direct_covering_cost(const MsscInstance& m, const std::vector<int>& order) {
  Rational total = 0;
  for (const Hyperedge& e : m.edges) {
    Rational spent = 0;
    for (int v : order) {
      spent += m.costs[static_cast<std::size_t>(v)];
      if (std::find(e.elements.begin(), e.elements.end(), v) != e.elements.end()) break;
    }
    total += e.weight * spent;
  }
  return total;
}

ReadOnceFormula formula(int n, std::uint64_t seed) {
  return std::get<ReadOnceFormula>(gen_instance("rof", {n, -1, seed}));
}

void generic_bound_and_histogram() {
  Criterion bound{1, "greedy <= 4 * optimum chain, union-closed families, subadditive f, n <= 7"};
  Criterion hist{2, "histogram containment and area identities on the same instances"};
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1001);
  try {
    for (int i = 0; i < 10000; ++i) {
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const TableInstance t = std::get<TableInstance>(gen_instance("generic", {n, -1, seed}));
      const MsopInstance inst = to_msop(t);
      const std::string id = tag("generic", n, seed);
      bound.check(t.flags.union_closed && t.flags.f_subadditive, id + " lacks the required structure");
      const GreedyChain g = greedy_chain(inst, exact_density_solver(), 1);
      const ExactChain opt = exact_opt_chain(inst);
      const Rational cost = chain_cost(inst, g.chain);
      bound.check(cost <= 4 * opt.cost, id + " greedy " + to_string(cost) + " opt " + to_string(opt.cost));
      bound.ratio(cost, opt.cost);
      const HistogramReport h = histogram_containment_check(inst, g, opt.chain, 1);
      hist.check(h.contained, id + " not contained");
      hist.check(h.opt_area == opt.cost, id + " opt area " + to_string(h.opt_area));
      hist.check(h.greedy_area == cost, id + " greedy area " + to_string(h.greedy_area));
    }
  } catch (const std::exception& e) {
    bound.check(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(bound, s);
  report(hist, s);
}

}  // namespace

int main() {
  generic_bound_and_histogram();

  run({3, "singleton greedy on set cover kinds, n <= 8: ratio <= 4, exact step densities"}, [](Criterion& c) {
    Rng rng(1003);
    for (int i = 0; i < 10000; ++i) {
      const std::string kind = i % 2 ? "mssc" : "pipelined";
      const int n = rng.uniform(1, 8);
      const std::uint64_t seed = rng.next();
      const MsscInstance m = std::get<MsscInstance>(gen_instance(kind, {n, -1, seed}));
      const std::string id = tag(kind, n, seed);
      const Problem p = make_problem(m);
      c.check(p.solver == "singleton" && m.edges.size() <= 10, id + " setup");
      const MsopInstance table = tabulated(p.instance);
      const GreedyChain g = greedy_checking_steps(p, table, c, id);
      const Permutation order = chain_to_permutation(p.instance, g.chain, *p.space);
      const Rational opt = exact_opt_permutation(table).cost;
      const Rational got = covering_cost(m, order);
      c.check(got <= 4 * opt, id + " cost " + to_string(got) + " opt " + to_string(opt));
      c.check(chain_cost(p.instance, g.chain) <= 4 * opt, id + " chain cost above 4 * opt");
      c.ratio(got, opt);
    }
  });

  run({4, "stem / outtree greedy on inforests and multitrees: ratio <= 4, exact densities up to n = 12"},
      [](Criterion& c) {
        Rng rng(1004);
        for (int i = 0; i < 10000; ++i) {
          const std::string kind = i < 5000 ? "inforest" : "multitree";
          const int n = rng.uniform(1, 8);
          const std::uint64_t seed = rng.next();
          const OrDag dag = std::get<OrDag>(gen_instance(kind, {n, -1, seed}));
          const std::string id = tag(kind, n, seed);
          const Problem p = make_problem(dag);
          // Small multitrees are often inforests too, which the stem solver takes.
          c.check(p.solver == (shape_labels(dag).inforest ? "stem" : "outtree"), id + " solver " + p.solver);
          const MsopInstance table = tabulated(p.instance);
          const GreedyChain g = greedy_checking_steps(p, table, c, id);
          const Permutation order = chain_to_permutation(p.instance, g.chain, *p.space);
          const Rational opt = exact_opt_permutation(table).cost;
          const Rational got = schedule_cost(dag, order);
          c.check(got <= 4 * opt, id + " cost " + to_string(got) + " opt " + to_string(opt));
          c.ratio(got, opt);
        }
        // Standalone density suite at the larger sizes.
        for (int i = 0; i < 400; ++i) {
          const std::string kind = i % 2 ? "inforest" : "multitree";
          const int n = 9 + i % 4;
          const std::uint64_t seed = rng.next();
          const OrDag dag = std::get<OrDag>(gen_instance(kind, {n, -1, seed}));
          const Problem p = make_problem(dag);
          const MsopInstance table = tabulated(p.instance);
          for (int b = 0; b < 5; ++b) {
            const Chain walk = oracle::random_chain(table, rng);
            const Subset base = walk.sets[static_cast<std::size_t>(rng.uniform(0, walk.steps() - 1))];
            const Density got = p.density(p.instance, base).density;
            const Density best = exact_max_density(table, base).density;
            c.check(got == best, tag(kind, n, seed) + " base " + base.str() + " density " + got.str() + " vs " +
                                     best.str());
          }
        }
      });

  run({5, "OR-pipelined set cover on inforests: ratio <= 4"}, [](Criterion& c) {
    Rng rng(1005);
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.uniform(1, 8);
      const std::uint64_t seed = rng.next();
      const MsscInstance m = std::get<MsscInstance>(gen_instance("or-pipelined", {n, -1, seed}));
      const std::string id = tag("or-pipelined", n, seed);
      const Problem p = make_problem(m);
      // Without arcs the instance is plain set cover.
      c.check(p.solver == (m.or_arcs.empty() ? "singleton" : "stem"), id + " solver " + p.solver);
      const MsopInstance table = tabulated(p.instance);
      const GreedyChain g = greedy_chain(p.instance, p.density, p.alpha);
      const Permutation order = chain_to_permutation(p.instance, g.chain, *p.space);
      const Rational opt = exact_opt_permutation(table).cost;
      const Rational got = covering_cost(m, order);
      c.check(got <= 4 * opt, id + " cost " + to_string(got) + " opt " + to_string(opt));
      c.ratio(got, opt);
    }
  });

  run({6, "supplement density >= half the exact maximum; rp tables equal brute-force maxima"}, [](Criterion& c) {
    Rng rng(1006);
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.uniform(1, 10);
      const std::uint64_t seed = rng.next();
      const ReadOnceFormula phi = formula(n, seed);
      const MsopInstance table = tabulated(to_msop(phi));
      for (int b = 0; b < 20; ++b) {
        Subset s;
        for (int v = 0; v < n; ++v) {
          if (rng.chance(1, 2)) s.insert(v);
        }
        if (s == Subset::full(n)) s.erase(rng.uniform(0, n - 1));
        const Subset r = find_supp(phi, s);
        const Density got = marginal_density(table, s, s | r).density;
        const Density best = exact_max_density(table, s).density;
        c.check(!r.empty() && !r.intersects(s) && got.scaled(2) >= best,
                tag("rof", n, seed) + " base " + s.str() + " got " + got.str() + " best " + best.str());
      }
    }
    // rp tables at every gate, ell and cost, by enumeration of all R.
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const ReadOnceFormula phi = formula(n, seed);
      Subset s;
      for (int v = 0; v < n; ++v) {
        if (rng.chance(1, 3)) s.insert(v);
      }
      const RpTables rp = compute_rp(phi, s);
      for (int g = 0; g <= phi.root(); ++g) {
        const std::vector<int> free = (phi.leaves(g) - s).elements();
        for (int ell = 0; ell <= 1; ++ell) {
          std::map<int, Rational> best;
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
            Subset r;
            int t = 0;
            for (std::size_t k = 0; k < free.size(); ++k) {
              if ((mask >> k) & 1) {
                r.insert(free[k]);
                t += phi.test(free[k]).cost;
              }
            }
            const Rational q = oracle::enumerate_gate_probability(phi, g, s | r, ell);
            auto it = best.find(t);
            if (it == best.end() || q > it->second) best[t] = q;
          }
          const auto& table = rp.at(g, ell);
          bool same = table.size() == best.size();
          for (const auto& [t, q] : best) {
            const auto it = table.find(t);
            same = same && it != table.end() && it->second.p == q &&
                   oracle::enumerate_gate_probability(phi, g, s | it->second.r, ell) == q;
          }
          c.check(same, tag("rof", n, seed) + " gate " + std::to_string(g) + " ell " + std::to_string(ell));
        }
      }
    }
  });

  run({7, "read-once formula greedy <= 8 * optimum, pure OR exactly optimal"}, [](Criterion& c) {
    Rng rng(1007);
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const ReadOnceFormula phi = formula(n, seed);
      const RofGreedyResult r = rof_greedy(phi);
      const Rational opt = exact_opt_permutation(tabulated(to_msop(phi))).cost;
      c.check(r.cost <= 8 * opt, tag("rof", n, seed) + " cost " + to_string(r.cost) + " opt " + to_string(opt));
      c.check(r.cost == oracle::enumerate_order_cost(phi, r.order.order), tag("rof", n, seed) + " cost mismatch");
      c.ratio(r.cost, opt);
    }
    for (int i = 0; i < 300; ++i) {
      const int n = rng.uniform(1, 7);
      std::vector<Test> tests;
      std::vector<Gate> gates;
      for (int v = 0; v < n; ++v) {
        const int den = rng.uniform(2, 6);
        tests.push_back({Rational(rng.uniform(1, den - 1), den), rng.uniform(1, 3)});
        tests.back().p.canonicalize();
        gates.push_back({GateKind::kLeaf, v, -1, -1});
      }
      // Random binary OR tree over the leaves.
      std::vector<int> open(static_cast<std::size_t>(n));
      std::iota(open.begin(), open.end(), 0);
      while (open.size() > 1) {
        rng.shuffle(open);
        const int a = open.back();
        open.pop_back();
        const int b = open.back();
        open.pop_back();
        gates.push_back({GateKind::kOr, -1, a, b});
        open.push_back(static_cast<int>(gates.size()) - 1);
      }
      const ReadOnceFormula phi(tests, gates, open.front());
      const Rational got = rof_greedy(phi).cost;
      const Rational opt = exact_opt_permutation(to_msop(phi)).cost;
      c.check(got == opt, "pure OR " + phi.str() + " cost " + to_string(got) + " opt " + to_string(opt));
    }
  });

  run({8, "dual chain cost identity on random chains; backward greedy <= 4 * optimum"}, [](Criterion& c) {
    Rng rng(1008);
    const std::vector<std::string> kinds = {"generic", "supermodular", "mssc", "inforest", "rof", "xsearch"};
    for (int i = 0; i < 10000; ++i) {
      const std::string& kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const MsopInstance inst = tabulated(make_problem(gen_instance(kind, {n, -1, seed})).instance);
      const DualInstance d = dualize(inst);
      const Chain chain = oracle::random_chain(inst, rng);
      const Chain dc = dual_chain(chain, inst.size());
      c.check(oracle::direct_chain_cost(inst, chain.sets) == oracle::direct_chain_cost(d.problem(), dc.sets) &&
                  dual_chain(dc, inst.size()) == chain,
              tag(kind, n, seed) + " chain " + chain.str());
    }
    for (int i = 0; i < 1000; ++i) {
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const Problem p = make_problem(gen_instance("supermodular", {n, -1, seed}));
      const std::string id = tag("supermodular", n, seed);
      c.check(p.instance.flags().f_supermodular && p.instance.flags().g_modular && p.dual_solver == "singleton",
              id + " setup");
      const BackwardGreedyChain b = backward_greedy_chain(p.instance, p.dual_density, p.dual_alpha);
      const Rational got = chain_cost(p.instance, b.chain);
      const Rational opt = exact_opt_chain(p.instance).cost;
      c.check(got <= 4 * opt, id + " cost " + to_string(got) + " opt " + to_string(opt));
      c.ratio(got, opt);
    }
  });

  run({9, "a subchain never costs less than its chain"}, [](Criterion& c) {
    Rng rng(1009);
    const std::vector<std::string> kinds = {"generic", "supermodular", "pipelined", "multitree", "rof", "xsearch"};
    for (int i = 0; i < 10000; ++i) {
      const std::string& kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const MsopInstance inst = tabulated(make_problem(gen_instance(kind, {n, -1, seed})).instance);
      const Chain chain = oracle::random_chain(inst, rng);
      const Chain sub = oracle::random_subchain(chain, rng);
      c.check(oracle::direct_chain_cost(inst, sub.sets) >= oracle::direct_chain_cost(inst, chain.sets),
              tag(kind, n, seed) + " chain " + chain.str() + " sub " + sub.str());
    }
  });

  run({10, "objective identities: covering, schedule and formula costs equal chain costs"}, [](Criterion& c) {
    Rng rng(1010);
    for (int i = 0; i < 2000; ++i) {
      const int n = rng.uniform(1, 8);
      const std::uint64_t seed = rng.next();
      const MsscInstance m = std::get<MsscInstance>(gen_instance(i % 2 ? "mssc" : "pipelined", {n, -1, seed}));
      const MsopInstance inst = to_msop(m);
      const std::vector<int> order = oracle::random_order(n, rng);
      const Permutation p{order};
      const Rational direct = direct_covering_cost(m, order);
      c.check(covering_cost(m, p) == direct && chain_cost(inst, permutation_to_chain(inst, p)) == direct,
              tag("mssc", n, seed) + " covering cost");
    }
    for (int i = 0; i < 2000; ++i) {
      const std::string kind = i % 3 == 0 ? "inforest" : i % 3 == 1 ? "multitree" : "bipartite-or";
      const int n = rng.uniform(1, 8);
      const std::uint64_t seed = rng.next();
      const OrDag dag = std::get<OrDag>(gen_instance(kind, {n, -1, seed}));
      const MsopInstance inst = to_msop(dag);
      const std::vector<int> order = random_or_order(dag, rng);
      const Permutation p{order};
      const Rational direct = direct_schedule_cost(dag, order);
      c.check(schedule_cost(dag, p) == direct && chain_cost(inst, permutation_to_chain(inst, p)) == direct,
              tag(kind, n, seed) + " schedule cost");
    }
    for (int i = 0; i < 2000; ++i) {
      const int n = rng.uniform(1, 7);
      const std::uint64_t seed = rng.next();
      const ReadOnceFormula phi = formula(n, seed);
      const Permutation p{oracle::random_order(n, rng)};
      const Rational expected = oracle::enumerate_order_cost(phi, p.order);
      c.check(evaluate_order_cost(phi, p) == expected && stopping_form_cost(phi, p) == expected,
              tag("rof", n, seed) + " formula cost");
    }
    // The five-variable example: (x1 AND x2) AND ((x3 AND x4) OR x5), every
    // test of cost 1 and probability 1/2, tested in the order x3 x4 x5 x2 x1.
    std::vector<Test> tests(5, Test{Rational(1, 2), 1});
    std::vector<Gate> gates;
    for (int v = 0; v < 5; ++v) gates.push_back({GateKind::kLeaf, v, -1, -1});
    gates.push_back({GateKind::kAnd, -1, 0, 1});  // 5
    gates.push_back({GateKind::kAnd, -1, 2, 3});  // 6
    gates.push_back({GateKind::kOr, -1, 6, 4});   // 7
    gates.push_back({GateKind::kAnd, -1, 5, 7});  // 8
    const ReadOnceFormula fig(tests, gates, 8);
    const Permutation order{{2, 3, 4, 1, 0}};
    const Rational expected(63, 16);
    c.check(evaluate_order_cost(fig, order) == expected, "example chain form " + to_string(evaluate_order_cost(fig, order)));
    c.check(stopping_form_cost(fig, order) == expected, "example stopping form " + to_string(stopping_form_cost(fig, order)));
    c.check(oracle::enumerate_order_cost(fig, order.order) == expected, "example enumeration");
    c.check(g_determined(fig, Subset{2, 3, 4}) == Rational(3, 8), "example g({x3,x4,x5})");
  });

  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
