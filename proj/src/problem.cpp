#include "msop/problem.hpp"

#include <memory>

#include "msop/dual.hpp"

namespace msop {

namespace {

Problem base_problem(std::string kind, MsopInstance instance) {
  Problem p(std::move(instance));
  p.kind = std::move(kind);
  return p;
}

void use_exact(Problem& p, const ExactCaps& caps) {
  p.solver = "exact";
  p.density = exact_density_solver(caps);
  p.alpha = 1;
}

}  // namespace

Problem make_problem(const TypedInstance& typed, const ExactCaps& caps) {
  Problem p = std::visit(
      [&](const auto& x) -> Problem {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MsscInstance>) {
          auto shared = std::make_shared<const MsscInstance>(x);
          Problem out = base_problem(x.or_arcs.empty() ? "mssc" : "or-pipelined", to_msop(x));
          out.native_cost = [shared](const Permutation& order) { return covering_cost(*shared, order); };
          if (x.or_arcs.empty()) {
            out.solver = "singleton";
            out.density = [shared](const MsopInstance&, const Subset& base) {
              return singleton_greedy_density(*shared, base);
            };
            out.space = free_space(x.size());
            return out;
          }
          std::vector<Job> jobs;
          for (const auto& c : x.costs) jobs.push_back(Job{c, 0});
          const OrDag dag(std::move(jobs), x.or_arcs);
          out.space = or_permutation_space(dag);
          if (shape_labels(dag).inforest) {
            out.solver = "stem";
            out.density = stem_solver(dag);
          } else {
            use_exact(out, caps);
          }
          return out;
        } else if constexpr (std::is_same_v<T, OrDag>) {
          const DagShape shape = classify_dag(x);
          Problem out = base_problem("orsched-" + std::string(shape_name(shape)), to_msop(x));
          auto shared = std::make_shared<const OrDag>(x);
          out.native_cost = [shared](const Permutation& order) { return schedule_cost(*shared, order); };
          out.space = or_permutation_space(x);
          const ShapeLabels labels = shape_labels(x);
          if (labels.inforest) {
            out.solver = "stem";
            out.density = stem_solver(x);
          } else if (labels.multitree) {
            out.solver = "outtree";
            out.density = outtree_solver(x);
          } else {
            use_exact(out, caps);
          }
          return out;
        } else if constexpr (std::is_same_v<T, ReadOnceFormula>) {
          Problem out = base_problem("rof", to_msop(x));
          auto shared = std::make_shared<const ReadOnceFormula>(x);
          out.native_cost = [shared](const Permutation& order) { return stopping_form_cost(*shared, order); };
          out.solver = "findsupp";
          out.density = find_supp_solver(x);
          out.alpha = 2;
          out.space = free_space(x.size());
          return out;
        } else if constexpr (std::is_same_v<T, SearchGraph>) {
          Problem out = base_problem("xsearch", xsearch_to_msop(x));
          auto shared = std::make_shared<const SearchGraph>(x);
          out.native_cost = [shared](const Permutation& order) { return expected_search_cost(*shared, order); };
          out.space = expanding_search_space(x);
          use_exact(out, caps);
          return out;
        } else {
          Problem out = base_problem("table", to_msop(x));
          use_exact(out, caps);
          if (x.free_family()) out.space = free_space(x.n);
          return out;
        }
      },
      typed);
  p.bound = 4 * p.alpha;
  // f supermodular and g modular over a free family: the dual has modular
  // cost and submodular weight, where single-element steps are optimal.
  const StructureFlags& fl = p.instance.flags();
  if (fl.free_family && fl.f_supermodular && fl.g_modular) {
    p.dual_solver = "singleton";
    p.dual_density = singleton_density;
  } else {
    p.dual_solver = "exact";
    p.dual_density = exact_density_solver(caps);
  }
  p.dual_alpha = 1;
  return p;
}

}  // namespace msop
