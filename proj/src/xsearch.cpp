#include "msop/xsearch.hpp"

#include <memory>
#include <numeric>
#include <string>

namespace msop {

void validate(const SearchGraph& graph) {
  const int n = graph.vertices();
  if (n < 2) throw Error(ErrorCode::kValidationError, "graph needs at least two vertices");
  if (graph.root < 0 || graph.root >= n) throw Error(ErrorCode::kValidationError, "root out of range");
  if (graph.edges.empty()) throw Error(ErrorCode::kValidationError, "graph has no edges");
  if (static_cast<int>(graph.edges.size()) > Subset::kCapacity) throw Error(ErrorCode::kValidationError, "too many edges");
  Rational total = 0;
  for (int v = 0; v < n; ++v) {
    const Rational& p = graph.prob[static_cast<std::size_t>(v)];
    if (sgn(p) < 0) throw Error(ErrorCode::kValidationError, "vertex " + std::to_string(v) + " has negative probability");
    total += p;
  }
  if (total != 1) throw Error(ErrorCode::kValidationError, "probabilities sum to " + to_string(total) + ", not 1");
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = n;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n || edge.u == edge.v) {
      throw Error(ErrorCode::kValidationError, "edge " + std::to_string(e) + " has bad endpoints");
    }
    if (sgn(edge.cost) <= 0) throw Error(ErrorCode::kValidationError, "edge " + std::to_string(e) + " needs a positive cost");
    const int a = find(edge.u), b = find(edge.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::kDisconnectedInput, "graph is not connected");
}

Rational found_probability(const SearchGraph& graph, const Subset& edges) {
  Subset touched;
  edges.for_each([&](int e) {
    touched.insert(graph.edges[static_cast<std::size_t>(e)].u);
    touched.insert(graph.edges[static_cast<std::size_t>(e)].v);
  });
  touched.erase(graph.root);
  Rational total = 0;
  touched.for_each([&](int v) { total += graph.prob[static_cast<std::size_t>(v)]; });
  return total;
}

bool connected_from_root(const SearchGraph& graph, const Subset& edges) {
  if (edges.empty()) return true;
  if (edges.bound() > static_cast<int>(graph.edges.size())) return false;
  Subset reached{graph.root};
  Subset left = edges;
  bool grew = true;
  while (grew && !left.empty()) {
    grew = false;
    const Subset snapshot = left;
    snapshot.for_each([&](int e) {
      const auto& edge = graph.edges[static_cast<std::size_t>(e)];
      if (reached.contains(edge.u) || reached.contains(edge.v)) {
        reached.insert(edge.u);
        reached.insert(edge.v);
        left.erase(e);
        grew = true;
      }
    });
  }
  return left.empty();
}

MsopInstance xsearch_to_msop(const SearchGraph& graph) {
  validate(graph);
  auto shared = std::make_shared<const SearchGraph>(graph);
  SetFunction f = [shared](const Subset& s) {
    Rational total = 0;
    s.for_each([&](int e) { total += shared->edges[static_cast<std::size_t>(e)].cost; });
    return total;
  };
  SetFunction g = [shared](const Subset& s) { return found_probability(*shared, s); };
  StructureFlags flags;
  flags.union_closed = true;
  flags.f_modular = flags.f_subadditive = flags.f_supermodular = true;
  flags.g_submodular = true;
  return MsopInstance(static_cast<int>(graph.edges.size()),
                      [shared](const Subset& s) { return connected_from_root(*shared, s); }, std::move(f),
                      std::move(g), flags);
}

namespace {

// Smallest-id edge of `pool` meeting `reached`, or -1.
int next_edge(const SearchGraph& graph, const Subset& pool, const Subset& reached) {
  int found = -1;
  pool.for_each([&](int e) {
    if (found >= 0) return;
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    if (reached.contains(edge.u) || reached.contains(edge.v)) found = e;
  });
  return found;
}

}  // namespace

Rational expected_search_cost(const SearchGraph& graph, const Permutation& order) {
  validate_permutation(order, static_cast<int>(graph.edges.size()));
  Subset reached{graph.root};
  Rational clock = 0;
  Rational total = 0;
  for (int e : order.order) {
    const auto& edge = graph.edges[static_cast<std::size_t>(e)];
    if (!reached.contains(edge.u) && !reached.contains(edge.v)) {
      throw Error(ErrorCode::kInfeasibleOrder, "edge " + std::to_string(e) + " is searched before it is reachable");
    }
    clock += edge.cost;
    for (int v : {edge.u, edge.v}) {
      if (!reached.contains(v)) {
        total += graph.prob[static_cast<std::size_t>(v)] * clock;
        reached.insert(v);
      }
    }
  }
  return total;
}

PermutationSpace expanding_search_space(const SearchGraph& graph) {
  auto shared = std::make_shared<const SearchGraph>(graph);
  PermutationSpace space;
  space.extend = [shared](const Subset& s) -> std::optional<Permutation> {
    if (!connected_from_root(*shared, s)) return std::nullopt;
    Permutation p;
    Subset reached{shared->root};
    Subset inside = s;
    Subset outside = Subset::full(static_cast<int>(shared->edges.size())) - s;
    for (Subset* pool : {&inside, &outside}) {
      while (!pool->empty()) {
        const int e = next_edge(*shared, *pool, reached);
        if (e < 0) return std::nullopt;
        pool->erase(e);
        reached.insert(shared->edges[static_cast<std::size_t>(e)].u);
        reached.insert(shared->edges[static_cast<std::size_t>(e)].v);
        p.order.push_back(e);
      }
    }
    return p;
  };
  space.contains = [shared](const Permutation& p) {
    try {
      expected_search_cost(*shared, p);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  return space;
}

}  // namespace msop
