// Command-line driver: solve, density, exact, check-ratio, gen.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "msop/dual.hpp"
#include "msop/generators.hpp"
#include "msop/report.hpp"

namespace {

using namespace msop;

constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

// "0,2,5", "{0,2,5}" or "{}".
Subset parse_set(std::string text, int n) {
  if (!text.empty() && text.front() == '{') text.erase(0, 1);
  if (!text.empty() && text.back() == '}') text.pop_back();
  Subset s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || v < 0 || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "bad set element '" + item + "'");
    }
    s.insert(v);
  }
  return s;
}

void print_density(const std::string& prefix, const DensityResult& r) {
  std::cout << prefix << "candidate=" << r.candidate.str() << "\n"
            << prefix << "density=" << r.density.str() << "\n"
            << prefix << "alpha=" << to_string(r.alpha) << "\n";
}

int run_solve(const std::string& file, const std::string& alpha_text, bool backward, bool json) {
  const Problem p = make_problem(read_instance_file(file));
  Chain chain;
  std::vector<Density> certificate;
  Rational alpha;
  if (backward) {
    alpha = alpha_text.empty() ? p.dual_alpha : parse_rational(alpha_text);
    BackwardGreedyChain b = backward_greedy_chain(p.instance, p.dual_density, alpha);
    chain = b.chain;
    certificate = b.step_densities;
  } else {
    alpha = alpha_text.empty() ? p.alpha : parse_rational(alpha_text);
    GreedyChain g = greedy_chain(p.instance, p.density, alpha);
    chain = g.chain;
    certificate = g.step_densities;
  }
  RatioReport r;
  r.instance = file;
  r.kind = p.kind;
  r.solver = backward ? p.dual_solver : p.solver;
  r.backward = backward;
  r.alpha = alpha;
  r.bound = 4 * alpha;
  r.chain = chain;
  r.certificate = certificate;
  r.greedy_cost = chain_cost(p.instance, chain);
  if (p.space) {
    r.permutation = chain_to_permutation(p.instance, chain, *p.space);
    r.permutation_cost = chain_cost(p.instance, permutation_to_chain(p.instance, *r.permutation));
    if (p.native_cost) r.native_cost = p.native_cost(*r.permutation);
  }
  std::cout << (json ? to_json(r, false) + "\n" : to_key_value(r, false));
  return 0;
}

int run_density(const std::string& file, const std::string& base_text) {
  const ExactCaps caps = ExactCaps::from_env();
  const Problem p = make_problem(read_instance_file(file), caps);
  const Subset base = parse_set(base_text, p.instance.size());
  std::cout << "base=" << base.str() << "\n" << "solver=" << p.solver << "\n";
  print_density("", p.density(p.instance, base));
  if (p.instance.size() <= caps.density) print_density("exact_", exact_max_density(p.instance, base, caps));
  return 0;
}

int run_exact(const std::string& file, const std::string& mode, const std::string& base_text) {
  const ExactCaps caps = ExactCaps::from_env();
  const Problem p = make_problem(read_instance_file(file), caps);
  std::cout << "kind=" << p.kind << "\nmode=" << mode << "\n";
  if (mode == "perm") {
    const ExactPermutation e = exact_opt_permutation(p.instance, caps);
    std::cout << "permutation=" << e.permutation.str() << "\ncost=" << to_string(e.cost) << "\n";
    if (p.native_cost) std::cout << "native_cost=" << to_string(p.native_cost(e.permutation)) << "\n";
  } else if (mode == "chain") {
    const ExactChain e = exact_opt_chain(p.instance, caps);
    std::cout << "chain=" << e.chain.str() << "\ncost=" << to_string(e.cost) << "\n";
  } else {
    const Subset base = parse_set(base_text, p.instance.size());
    std::cout << "base=" << base.str() << "\n";
    print_density("", exact_max_density(p.instance, base, caps));
  }
  return 0;
}

int run_check(const std::vector<std::string>& files, bool backward, bool json, bool with_time) {
  const ExactCaps caps = ExactCaps::from_env();
  bool violated = false;
  for (std::size_t i = 0; i < files.size(); ++i) {
    RatioReport r = check_ratio(make_problem(read_instance_file(files[i]), caps), caps, backward);
    r.instance = files[i];
    if (i > 0 && !json) std::cout << "\n";
    std::cout << (json ? to_json(r, with_time) + "\n" : to_key_value(r, with_time));
    violated = violated || !r.ok();
  }
  return violated ? kExitViolation : 0;
}

int run_gen(const std::string& kind, const GenParams& params, const std::string& out_path) {
  const std::string text = serialize(gen_instance(kind, params));
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + out_path);
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy chains and exact oracles for min sum ordering problems"};
  app.require_subcommand(1);

  std::string file, alpha_text, base_text, mode = "perm", kind, out_path;
  std::vector<std::string> files;
  bool backward = false, json = false, no_time = false;
  GenParams params;

  auto* solve = app.add_subcommand("solve", "Build a greedy chain and a consistent permutation");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_option("--alpha", alpha_text, "Approximation factor to run with (p/q), at least the solver's certificate");
  solve->add_flag("--backward", backward, "Backward greedy through the dual instance");
  solve->add_flag("--json", json, "Emit a JSON document");

  auto* density = app.add_subcommand("density", "Run the density solver at one base set");
  density->add_option("file", file, "Instance file")->required();
  density->add_option("--base", base_text, "Base set, e.g. 0,2,5 or {}")->required();

  auto* exact = app.add_subcommand("exact", "Exhaustive oracles");
  exact->add_option("file", file, "Instance file")->required();
  exact->add_option("--mode", mode, "perm, chain or density")->check(CLI::IsMember({"perm", "chain", "density"}));
  exact->add_option("--base", base_text, "Base set for --mode density");

  auto* check = app.add_subcommand("check-ratio", "Greedy versus exact optimum, with the histogram check");
  check->add_option("files", files, "Instance files")->required();
  check->add_flag("--backward", backward, "Backward greedy through the dual instance");
  check->add_flag("--json", json, "Emit JSON documents");
  check->add_flag("--no-time", no_time, "Leave out the wall time");

  auto* gen = app.add_subcommand("gen", "Generate a seeded random instance");
  gen->add_option("kind", kind, "Generator kind")->required()->check(CLI::IsMember(generator_kinds()));
  gen->add_option("--n", params.n, "Main size (elements, jobs, variables or edges)")->required();
  gen->add_option("--m", params.m, "Secondary size (hyperedges or vertices)");
  gen->add_option("--seed", params.seed, "64-bit seed")->required();
  gen->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*solve) return run_solve(file, alpha_text, backward, json);
    if (*density) return run_density(file, base_text);
    if (*exact) return run_exact(file, mode, base_text);
    if (*check) return run_check(files, backward, json, !no_time);
    if (*gen) return run_gen(kind, params, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
