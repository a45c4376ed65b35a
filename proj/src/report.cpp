#include "msop/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "msop/dual.hpp"

namespace msop {

RatioReport check_ratio(const Problem& problem, const ExactCaps& caps, bool backward) {
  const auto start = std::chrono::steady_clock::now();
  const MsopInstance& instance = problem.instance;
  RatioReport r;
  r.kind = problem.kind;
  r.backward = backward;

  // The dual instance and greedy run are kept for the histogram check, which
  // for a backward chain is carried out on the dual side.
  std::optional<DualInstance> dual;
  GreedyChain certified;
  if (backward) {
    r.solver = problem.dual_solver;
    r.alpha = problem.dual_alpha;
    dual.emplace(instance);
    BackwardGreedyChain b = backward_greedy_chain(instance, problem.dual_density, r.alpha);
    r.chain = b.chain;
    r.certificate = b.step_densities;
    certified = std::move(b.dual);
  } else {
    r.solver = problem.solver;
    r.alpha = problem.alpha;
    certified = greedy_chain(instance, problem.density, r.alpha);
    r.chain = certified.chain;
    r.certificate = certified.step_densities;
  }
  r.bound = 4 * r.alpha;
  r.greedy_cost = chain_cost(instance, r.chain);

  if (problem.space) {
    r.permutation = chain_to_permutation(instance, r.chain, *problem.space);
    r.permutation_cost = chain_cost(instance, permutation_to_chain(instance, *r.permutation));
    if (problem.native_cost) r.native_cost = problem.native_cost(*r.permutation);
  }

  std::optional<Chain> reference_chain;
  if (instance.size() <= caps.chain) {
    ExactChain e = exact_opt_chain(instance, caps);
    r.reference = "chain";
    r.exact_cost = e.cost;
    reference_chain = std::move(e.chain);
  } else if (problem.space && instance.size() <= caps.permutation) {
    ExactPermutation e = exact_opt_permutation(instance, caps);
    r.reference = "permutation";
    r.exact_cost = e.cost;
    reference_chain = permutation_to_chain(instance, e.permutation);
  }

  if (r.exact_cost) {
    if (sgn(*r.exact_cost) > 0) {
      r.ratio = r.greedy_cost / *r.exact_cost;
      r.bound_ok = *r.ratio <= r.bound;
    } else {
      r.bound_ok = sgn(r.greedy_cost) == 0;
      if (r.bound_ok) r.ratio = 1;
    }
    if (r.permutation_cost && *r.permutation_cost > r.greedy_cost) r.bound_ok = false;
    const HistogramReport h =
        backward ? histogram_containment_check(dual->problem(), certified, dual_chain(*reference_chain, instance.size()),
                                               r.alpha)
                 : histogram_containment_check(instance, certified, *reference_chain, r.alpha);
    r.contained = h.contained;
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string certificate_text(const std::vector<Density>& densities) {
  std::string s;
  for (const auto& d : densities) {
    if (!s.empty()) s += ",";
    s += d.str();
  }
  return s;
}

std::string opt(const std::optional<Rational>& v) { return v ? to_string(*v) : "none"; }

}  // namespace

std::string to_key_value(const RatioReport& r, bool with_time) {
  std::ostringstream out;
  if (!r.instance.empty()) out << "instance=" << r.instance << "\n";
  out << "kind=" << r.kind << "\n"
      << "solver=" << r.solver << "\n"
      << "direction=" << (r.backward ? "backward" : "forward") << "\n"
      << "alpha=" << to_string(r.alpha) << "\n"
      << "bound=" << to_string(r.bound) << "\n"
      << "chain=" << r.chain.str() << "\n"
      << "certificate=" << certificate_text(r.certificate) << "\n"
      << "greedy_cost=" << to_string(r.greedy_cost) << "\n";
  if (r.permutation) {
    out << "permutation=" << r.permutation->str() << "\n"
        << "permutation_cost=" << opt(r.permutation_cost) << "\n";
  }
  if (r.native_cost) out << "native_cost=" << to_string(*r.native_cost) << "\n";
  out << "reference=" << r.reference << "\n"
      << "exact_cost=" << opt(r.exact_cost) << "\n"
      << "ratio=" << opt(r.ratio) << "\n";
  if (r.ratio) out << "ratio_approx=" << r.ratio->get_d() << "\n";
  out << "contained=" << (r.contained ? (*r.contained ? "true" : "false") : "unchecked") << "\n"
      << "bound_ok=" << (r.bound_ok ? "true" : "false") << "\n";
  if (with_time) out << "wall_ms=" << r.wall_ms << "\n";
  return out.str();
}

std::string to_json(const RatioReport& r, bool with_time) {
  nlohmann::ordered_json j;
  if (!r.instance.empty()) j["instance"] = r.instance;
  j["kind"] = r.kind;
  j["solver"] = r.solver;
  j["direction"] = r.backward ? "backward" : "forward";
  j["alpha"] = to_string(r.alpha);
  j["bound"] = to_string(r.bound);
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const auto& s : r.chain.sets) sets.push_back(s.elements());
  j["chain"] = sets;
  nlohmann::ordered_json cert = nlohmann::ordered_json::array();
  for (const auto& d : r.certificate) cert.push_back(d.str());
  j["certificate"] = cert;
  j["greedy_cost"] = to_string(r.greedy_cost);
  if (r.permutation) {
    j["permutation"] = r.permutation->order;
    j["permutation_cost"] = opt(r.permutation_cost);
  }
  if (r.native_cost) j["native_cost"] = to_string(*r.native_cost);
  j["reference"] = r.reference;
  j["exact_cost"] = r.exact_cost ? nlohmann::ordered_json(to_string(*r.exact_cost)) : nlohmann::ordered_json(nullptr);
  j["ratio"] = r.ratio ? nlohmann::ordered_json(to_string(*r.ratio)) : nlohmann::ordered_json(nullptr);
  j["contained"] = r.contained ? nlohmann::ordered_json(*r.contained) : nlohmann::ordered_json(nullptr);
  j["bound_ok"] = r.bound_ok;
  if (with_time) j["wall_ms"] = r.wall_ms;
  return j.dump(2);
}

}  // namespace msop
