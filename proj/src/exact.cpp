#include "msop/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace msop {

ExactCaps ExactCaps::parse(std::string_view text, ExactCaps base) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::kBadParams, "cap '" + std::string(item) + "' lacks '='");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    char* tail = nullptr;
    const long v = std::strtol(value.c_str(), &tail, 10);
    if (value.empty() || *tail != '\0' || v < 1 || v > 62) {
      throw Error(ErrorCode::kBadParams, "bad cap value '" + value + "'");
    }
    if (key == "perm" || key == "permutation") {
      base.permutation = static_cast<int>(v);
    } else if (key == "chain") {
      base.chain = static_cast<int>(v);
    } else if (key == "density") {
      base.density = static_cast<int>(v);
    } else {
      throw Error(ErrorCode::kBadParams, "unknown cap '" + key + "'");
    }
  }
  return base;
}

ExactCaps ExactCaps::parse(std::string_view text) { return parse(text, ExactCaps{}); }

ExactCaps ExactCaps::from_env() {
  const char* env = std::getenv("MSOP_EXACT_CAPS");
  if (env == nullptr) return {};
  return parse(env);
}

namespace {

struct LatticeTables {
  std::vector<char> member;
  std::vector<Rational> f;
  std::vector<Rational> g;
};

LatticeTables tabulate_members(const MsopInstance& instance) {
  const std::size_t count = std::size_t{1} << instance.size();
  LatticeTables t;
  t.member.assign(count, 0);
  t.f.resize(count);
  t.g.resize(count);
  for (std::size_t m = 0; m < count; ++m) {
    const Subset s = Subset::from_mask(m);
    if (!instance.in_family(s)) continue;
    t.member[m] = 1;
    t.f[m] = instance.cost(s);
    t.g[m] = instance.weight(s);
  }
  if (sgn(t.f[0]) != 0 || sgn(t.g[0]) != 0) {
    throw Error(ErrorCode::kValidationError, "f and g must vanish on the empty set");
  }
  return t;
}

void check_step(const LatticeTables& t, std::size_t from, std::size_t to) {
  if (t.f[to] < t.f[from] || t.g[to] < t.g[from]) {
    throw Error(ErrorCode::kNonMonotone, "f or g decreases from " + Subset::from_mask(from).str() + " to " +
                                             Subset::from_mask(to).str());
  }
}

void require_size(const MsopInstance& instance, int cap, const char* what) {
  if (instance.size() > cap) {
    throw Error(ErrorCode::kTooLarge, std::string(what) + " oracle capped at n = " + std::to_string(cap) +
                                          ", instance has n = " + std::to_string(instance.size()));
  }
}

}  // namespace

ExactPermutation exact_opt_permutation(const MsopInstance& instance, const ExactCaps& caps) {
  require_size(instance, caps.permutation, "permutation");
  const int n = instance.size();
  const LatticeTables t = tabulate_members(instance);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // togo[m]: cheapest completion from initial set m to the ground set.
  std::vector<Rational> togo(full + 1);
  std::vector<char> reachable(full + 1, 0);
  togo[full] = 0;
  reachable[full] = 1;
  auto step_cost = [&](std::size_t m, std::size_t u) -> Rational { return t.f[u] * (t.g[u] - t.g[m]); };
  for (std::size_t m = full; m-- > 0;) {
    if (!t.member[m]) continue;
    for (int v = 0; v < n; ++v) {
      const std::size_t u = m | (std::size_t{1} << v);
      if (u == m || !t.member[u] || !reachable[u]) continue;
      check_step(t, m, u);
      Rational c = step_cost(m, u) + togo[u];
      if (!reachable[m] || c < togo[m]) {
        togo[m] = std::move(c);
        reachable[m] = 1;
      }
    }
  }
  if (!reachable[0]) throw Error(ErrorCode::kNoFeasiblePermutation, "no permutation has only feasible initial sets");
  ExactPermutation out;
  out.cost = togo[0];
  std::size_t m = 0;
  while (m != full) {
    for (int v = 0; v < n; ++v) {
      const std::size_t u = m | (std::size_t{1} << v);
      if (u == m || !t.member[u] || !reachable[u]) continue;
      if (step_cost(m, u) + togo[u] == togo[m]) {
        out.permutation.order.push_back(v);
        m = u;
        break;
      }
    }
  }
  return out;
}

ExactChain exact_opt_chain(const MsopInstance& instance, const ExactCaps& caps) {
  require_size(instance, caps.chain, "chain");
  const int n = instance.size();
  const LatticeTables t = tabulate_members(instance);
  const std::size_t full = (std::size_t{1} << n) - 1;
  // best[m]: cheapest chain from the empty set ending at m.
  std::vector<Rational> best(full + 1);
  std::vector<char> reached(full + 1, 0);
  std::vector<std::size_t> pred(full + 1, 0);
  best[0] = 0;
  reached[0] = 1;
  for (std::size_t target = 1; target <= full; ++target) {
    if (!t.member[target]) continue;
    // Strict submasks of target, in decreasing numeric order down to 0.
    std::size_t sub = target;
    do {
      sub = (sub - 1) & target;
      if (t.member[sub] && reached[sub]) {
        check_step(t, sub, target);
        Rational c = best[sub] + t.f[target] * (t.g[target] - t.g[sub]);
        if (!reached[target] || c < best[target]) {
          best[target] = std::move(c);
          reached[target] = 1;
          pred[target] = sub;
        }
      }
    } while (sub != 0);
  }
  ExactChain out;
  out.cost = best[full];
  std::vector<Subset> rev;
  for (std::size_t m = full;; m = pred[m]) {
    rev.push_back(Subset::from_mask(m));
    if (m == 0) break;
  }
  out.chain.sets.assign(rev.rbegin(), rev.rend());
  return out;
}

DensityResult exact_max_density(const MsopInstance& instance, const Subset& base, const ExactCaps& caps) {
  require_size(instance, std::min(caps.density, 62), "density");
  if (!instance.in_family(base)) throw Error(ErrorCode::kNotInFamily, base.str());
  const std::uint64_t full = (std::uint64_t{1} << instance.size()) - 1;
  const std::uint64_t rest = full & ~base.mask();
  const Rational fb = instance.cost(base);
  const Rational gb = instance.weight(base);
  std::optional<DensityResult> best;
  for (std::uint64_t sub = rest; sub != 0; sub = (sub - 1) & rest) {
    const Subset t = Subset::from_mask(base.mask() | sub);
    if (!instance.in_family(t)) continue;
    const Rational df = instance.cost(t) - fb;
    const Rational dg = instance.weight(t) - gb;
    if (sgn(df) < 0 || sgn(dg) < 0) {
      throw Error(ErrorCode::kNonMonotone, "f or g decreases from " + base.str() + " to " + t.str());
    }
    const Density d = Density::ratio(dg, df);
    if (!best || d > best->density || (d == best->density && smaller_then_lex(t, best->candidate))) {
      if (!best) best.emplace();
      best->candidate = t;
      best->density = d;
    }
  }
  if (!best) throw Error(ErrorCode::kNoFeasibleSuperset, "no feasible strict superset of " + base.str());
  best->base = base;
  best->alpha = 1;
  return *best;
}

DensitySolver exact_density_solver(const ExactCaps& caps) {
  return [caps](const MsopInstance& instance, const Subset& base) {
    return exact_max_density(instance, base, caps);
  };
}

HistogramReport histogram_containment_check(const MsopInstance& instance, const GreedyChain& greedy,
                                            const Chain& opt_chain, const Rational& alpha) {
  validate_chain(instance, greedy.chain);
  validate_chain(instance, opt_chain);
  if (greedy.step_densities.empty()) {
    throw Error(ErrorCode::kMissingCertificate, "greedy chain carries no step densities");
  }
  if (static_cast<int>(greedy.step_densities.size()) != greedy.chain.steps()) {
    throw Error(ErrorCode::kMissingCertificate, "certificate length does not match the chain");
  }
  if (alpha < 1) throw Error(ErrorCode::kInvalidArgument, "alpha must be at least 1");

  HistogramReport report;
  report.alpha = alpha;
  const Rational g_total = instance.weight(instance.ground());

  for (std::size_t j = 1; j < opt_chain.sets.size(); ++j) {
    HistogramColumn c{instance.weight(opt_chain.sets[j - 1]), instance.weight(opt_chain.sets[j]),
                      instance.cost(opt_chain.sets[j])};
    report.opt_area += c.height * (c.right - c.left);
    report.opt_columns.push_back(std::move(c));
  }
  for (std::size_t i = 1; i < greedy.chain.sets.size(); ++i) {
    const Rational left = instance.weight(greedy.chain.sets[i - 1]);
    const Rational right = instance.weight(greedy.chain.sets[i]);
    const Density& rho = greedy.step_densities[i - 1];
    Rational height = 0;
    if (!rho.is_infinite() && left != g_total) {
      if (sgn(rho.value()) <= 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "step " + std::to_string(i) + " has density " + rho.str() + " while weight remains");
      }
      height = (g_total - left) / rho.value();
    }
    report.greedy_area += height * (right - left);
    report.greedy_columns.push_back({left, right, std::move(height)});
  }

  auto shrink_x = [&](const Rational& x) -> Rational { return (g_total + x) / 2; };
  std::vector<Rational> xs;
  xs.emplace_back(0);
  xs.push_back(g_total);
  for (const auto& c : report.opt_columns) {
    xs.push_back(c.left);
    xs.push_back(c.right);
  }
  for (const auto& c : report.greedy_columns) {
    xs.push_back(shrink_x(c.left));
    xs.push_back(shrink_x(c.right));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  report.contained = true;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const Rational mid = (xs[k - 1] + xs[k]) / 2;
    Rational opt_h = 0;
    for (const auto& c : report.opt_columns) {
      if (c.left < mid && mid < c.right) {
        opt_h = c.height;
        break;
      }
    }
    Rational greedy_h = 0;
    for (const auto& c : report.greedy_columns) {
      if (shrink_x(c.left) < mid && mid < shrink_x(c.right)) {
        greedy_h = c.height / (2 * alpha);
        break;
      }
    }
    if (greedy_h > opt_h) {
      report.contained = false;
      report.first_violation = HistogramPoint{mid, greedy_h, opt_h};
      break;
    }
  }
  return report;
}

}  // namespace msop
