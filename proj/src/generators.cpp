#include "msop/generators.hpp"

#include <algorithm>

namespace msop {

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<int>(x % span);
}

const std::vector<std::string>& generator_kinds() {
  static const std::vector<std::string> kinds = {"mssc",      "pipelined", "or-pipelined", "inforest",
                                                 "multitree", "bipartite-or", "rof",       "xsearch",
                                                 "generic",   "supermodular"};
  return kinds;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kBadParams, message);
}

std::vector<int> random_nonempty_subset(Rng& rng, int n, int max_size) {
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  rng.shuffle(ids);
  ids.resize(static_cast<std::size_t>(rng.uniform(1, std::min(n, max_size))));
  std::sort(ids.begin(), ids.end());
  return ids;
}

MsscInstance gen_mssc(Rng& rng, const GenParams& params, bool weighted) {
  const int n = params.n;
  const int m = params.m >= 0 ? params.m : rng.uniform(1, 10);
  require(m <= 1000, "too many hyperedges");
  MsscInstance out;
  out.costs.assign(static_cast<std::size_t>(n), Rational(1));
  if (weighted) {
    for (auto& c : out.costs) c = rng.uniform(1, 5);
  }
  for (int e = 0; e < m; ++e) {
    Hyperedge edge;
    edge.weight = weighted ? rng.uniform(0, 5) : 1;
    edge.elements = random_nonempty_subset(rng, n, std::max(1, (n + 1) / 2));
    out.edges.push_back(std::move(edge));
  }
  return out;
}

// Every vertex points to at most one later vertex of a random order.
std::vector<std::pair<int, int>> inforest_arcs(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<std::pair<int, int>> arcs;
  for (int k = 0; k + 1 < n; ++k) {
    if (!rng.chance(3, 4)) continue;
    arcs.emplace_back(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(rng.uniform(k + 1, n - 1))]);
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<Job> random_jobs(Rng& rng, int n) {
  std::vector<Job> jobs;
  for (int v = 0; v < n; ++v) {
    const int p = rng.chance(1, 8) ? 0 : rng.uniform(1, 4);
    jobs.push_back(Job{p, rng.uniform(0, 5)});
  }
  return jobs;
}

OrDag gen_multitree(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<Job> jobs = random_jobs(rng, n);
  std::vector<std::pair<int, int>> arcs;
  const int attempts = n >= 2 ? 2 * n : 0;
  for (int a = 0; a < attempts; ++a) {
    const int i = rng.uniform(0, n - 2);
    const int j = rng.uniform(i + 1, n - 1);
    const std::pair<int, int> arc{order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]};
    if (std::find(arcs.begin(), arcs.end(), arc) != arcs.end()) continue;
    arcs.push_back(arc);
    // Drop the arc again if it opens a second path between two jobs.
    if (!shape_labels(OrDag(jobs, arcs)).multitree) arcs.pop_back();
  }
  std::sort(arcs.begin(), arcs.end());
  return OrDag(std::move(jobs), std::move(arcs));
}

OrDag gen_bipartite(Rng& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  const int sources = n >= 2 ? rng.uniform(1, n - 1) : n;
  std::vector<std::pair<int, int>> arcs;
  for (int k = sources; k < n; ++k) {
    for (int s : random_nonempty_subset(rng, sources, 3)) {
      arcs.emplace_back(order[static_cast<std::size_t>(s)], order[static_cast<std::size_t>(k)]);
    }
  }
  std::sort(arcs.begin(), arcs.end());
  return OrDag(random_jobs(rng, n), std::move(arcs));
}

ReadOnceFormula gen_rof(Rng& rng, int n) {
  std::vector<Test> tests;
  for (int i = 0; i < n; ++i) {
    const int den = rng.uniform(2, 6);
    tests.push_back(Test{Rational(rng.uniform(1, den - 1), den), rng.uniform(1, 3)});
    tests.back().p.canonicalize();
  }
  std::vector<Gate> gates;
  std::vector<int> pending;
  for (int i = 0; i < n; ++i) {
    gates.push_back({GateKind::kLeaf, i, -1, -1});
    pending.push_back(i);
  }
  rng.shuffle(pending);
  while (pending.size() > 1) {
    const int a = rng.uniform(0, static_cast<int>(pending.size()) - 1);
    const int left = pending[static_cast<std::size_t>(a)];
    pending.erase(pending.begin() + a);
    const int b = rng.uniform(0, static_cast<int>(pending.size()) - 1);
    const int right = pending[static_cast<std::size_t>(b)];
    gates.push_back({rng.chance(1, 2) ? GateKind::kAnd : GateKind::kOr, -1, left, right});
    pending[static_cast<std::size_t>(b)] = static_cast<int>(gates.size()) - 1;
  }
  return ReadOnceFormula(std::move(tests), std::move(gates), pending.front());
}

SearchGraph gen_xsearch(Rng& rng, const GenParams& params) {
  const int edges = params.n;
  // Fewest vertices whose complete graph still holds `edges` edges.
  int dense = 2;
  while (dense * (dense - 1) / 2 < edges) ++dense;
  const int vertices = params.m >= 0 ? params.m : rng.uniform(std::max(dense, (edges + 3) / 2), edges + 1);
  require(vertices >= 2 && vertices - 1 <= edges, "xsearch needs 2 <= vertices <= edges + 1");
  require(static_cast<long>(vertices) * (vertices - 1) / 2 >= edges, "too many edges for a simple graph");
  SearchGraph out;
  out.root = rng.uniform(0, vertices - 1);
  int total = 0;
  std::vector<int> mass;
  for (int v = 0; v < vertices; ++v) {
    mass.push_back(rng.chance(1, 6) ? 0 : rng.uniform(1, 6));
    total += mass.back();
  }
  if (total == 0) {
    mass[0] = 1;
    total = 1;
  }
  for (int m : mass) {
    Rational p(m, total);
    p.canonicalize();
    out.prob.push_back(p);
  }
  std::vector<std::pair<int, int>> used;
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == v || std::find(used.begin(), used.end(), std::pair{u, v}) != used.end()) return false;
    used.emplace_back(u, v);
    out.edges.push_back({u, v, rng.uniform(1, 4)});
    return true;
  };
  for (int v = 1; v < vertices; ++v) add(rng.uniform(0, v - 1), v);
  while (static_cast<int>(out.edges.size()) < edges) add(rng.uniform(0, vertices - 1), rng.uniform(0, vertices - 1));
  return out;
}

TableInstance gen_generic(Rng& rng, int n) {
  const std::size_t count = std::size_t{1} << n;
  const std::size_t full = count - 1;
  TableInstance t;
  t.n = n;
  t.member.assign(count, 0);
  t.member[0] = t.member[full] = 1;
  // Unions of any subfamily of random generator sets.
  const int generators = rng.uniform(1, 2 * n);
  for (int k = 0; k < generators; ++k) {
    std::size_t x = 0;
    for (int v : random_nonempty_subset(rng, n, n)) x |= std::size_t{1} << v;
    for (std::size_t m = 0; m < count; ++m) {
      if (t.member[m]) t.member[m | x] = 1;
    }
  }
  // f: maximum of a few modular functions (monotone and subadditive).
  const int pieces = rng.uniform(1, 3);
  std::vector<std::vector<int>> a(static_cast<std::size_t>(pieces), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : a) {
    for (auto& x : row) x = rng.uniform(0, 4);
  }
  // g: modular, coverage or pairwise-supermodular.
  const int g_kind = rng.uniform(0, 2);
  std::vector<int> gw(static_cast<std::size_t>(n));
  for (auto& x : gw) x = rng.uniform(0, 4);
  std::vector<std::pair<std::size_t, int>> cover;
  for (int e = rng.uniform(1, 2 * n); e > 0; --e) {
    std::size_t m = 0;
    for (int v : random_nonempty_subset(rng, n, 3)) m |= std::size_t{1} << v;
    cover.emplace_back(m, rng.uniform(1, 4));
  }
  std::vector<std::vector<int>> pair(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.chance(1, 3) ? rng.uniform(1, 3) : 0;
  }
  t.f.resize(count);
  t.g.resize(count);
  for (std::size_t m = 0; m < count; ++m) {
    int fmax = 0;
    for (const auto& row : a) {
      int s = 0;
      for (int v = 0; v < n; ++v) {
        if (m >> v & 1) s += row[static_cast<std::size_t>(v)];
      }
      fmax = std::max(fmax, s);
    }
    t.f[m] = fmax;
    int g = 0;
    if (g_kind == 0 || g_kind == 2) {
      for (int v = 0; v < n; ++v) {
        if (m >> v & 1) g += gw[static_cast<std::size_t>(v)];
      }
    }
    if (g_kind == 1) {
      for (const auto& [e, w] : cover) {
        if (e & m) g += w;
      }
    }
    if (g_kind == 2) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if ((m >> i & 1) && (m >> j & 1)) g += pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
      }
    }
    t.g[m] = g;
  }
  t.flags.union_closed = true;
  t.flags.f_subadditive = true;
  t.flags.f_modular = pieces == 1;
  t.flags.g_modular = g_kind == 0;
  t.flags.g_submodular = g_kind != 2;
  t.flags.g_supermodular = g_kind != 1;
  return t;
}

TableInstance gen_supermodular(Rng& rng, int n) {
  const std::size_t count = std::size_t{1} << n;
  TableInstance t;
  t.n = n;
  std::vector<int> a(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (auto& x : a) x = rng.uniform(0, 3);
  for (auto& x : w) x = rng.uniform(0, 4);
  std::vector<std::vector<int>> b(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rng.chance(1, 2) ? rng.uniform(1, 2) : 0;
  }
  t.f.resize(count);
  t.g.resize(count);
  for (std::size_t m = 0; m < count; ++m) {
    int f = 0;
    int g = 0;
    for (int i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      f += a[static_cast<std::size_t>(i)];
      g += w[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) {
        if (m >> j & 1) f += b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    t.f[m] = f;
    t.g[m] = g;
  }
  t.flags.free_family = t.flags.union_closed = t.flags.intersection_closed = true;
  t.flags.f_supermodular = true;
  t.flags.g_modular = t.flags.g_submodular = t.flags.g_supermodular = true;
  return t;
}

}  // namespace

TypedInstance gen_instance(const std::string& kind, const GenParams& params) {
  const auto& kinds = generator_kinds();
  require(std::find(kinds.begin(), kinds.end(), kind) != kinds.end(), "unknown generator kind '" + kind + "'");
  const bool tabular = kind == "generic" || kind == "supermodular";
  const int cap = tabular ? TableInstance::kMaxElements : 64;
  require(params.n >= 1 && params.n <= cap, "n must be in 1.." + std::to_string(cap));
  Rng rng(params.seed);
  const int n = params.n;
  if (kind == "mssc") return gen_mssc(rng, params, false);
  if (kind == "pipelined") return gen_mssc(rng, params, true);
  if (kind == "or-pipelined") {
    MsscInstance inst = gen_mssc(rng, params, true);
    inst.or_arcs = inforest_arcs(rng, n);
    return inst;
  }
  if (kind == "inforest") {
    std::vector<Job> jobs = random_jobs(rng, n);
    return OrDag(std::move(jobs), inforest_arcs(rng, n));
  }
  if (kind == "multitree") return gen_multitree(rng, n);
  if (kind == "bipartite-or") return gen_bipartite(rng, n);
  if (kind == "rof") return gen_rof(rng, n);
  if (kind == "xsearch") return gen_xsearch(rng, params);
  if (kind == "generic") return gen_generic(rng, n);
  return gen_supermodular(rng, n);
}

}  // namespace msop
