#include "odchar/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace odchar::graph {

bool PrimeGraph::adjacent(u64 a, u64 b) const {
  if (a > b) std::swap(a, b);
  return edges.count({a, b}) > 0;
}

int PrimeGraph::degree(u64 v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

int PrimeGraph::index_of(u64 v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) return -1;
  return static_cast<int>(it - vertices.begin());
}

PrimeGraph make_graph(std::vector<u64> vertices,
                      const std::vector<std::pair<u64, u64>>& edges) {
  PrimeGraph g;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  g.vertices = std::move(vertices);
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a == b) throw std::invalid_argument("make_graph: loop edge");
    if (g.index_of(a) < 0 || g.index_of(b) < 0) {
      throw std::invalid_argument("make_graph: edge endpoint is not a vertex");
    }
    g.edges.insert({a, b});
  }
  return g;
}

DegreePattern degree_pattern(const PrimeGraph& g) {
  DegreePattern d;
  d.reserve(g.vertices.size());
  for (u64 v : g.vertices) d.push_back(g.degree(v));
  return d;
}

std::vector<std::vector<u64>> components(const PrimeGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    // breadth-first sweep from s
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (comp[w] == -1 && g.adjacent(g.vertices[v], g.vertices[w])) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<u64>> out(ncomp);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(g.vertices[i]);
  // vertices ascending within components; components already ordered by
  // smallest vertex because sweeps start at ascending indices
  return out;
}

std::vector<arith::Factorization> order_components(const arith::Factorization& N,
                                                   const PrimeGraph& g) {
  std::vector<u64> primes;
  primes.reserve(N.factors.size());
  for (const auto& f : N.factors) primes.push_back(f.prime);
  if (primes != g.vertices) {
    throw std::invalid_argument(
        "order_components: graph vertices must be the primes dividing N");
  }
  std::vector<arith::Factorization> out;
  for (const auto& comp : components(g)) {
    arith::Factorization part;
    for (u64 p : comp) {
      part.factors.push_back({p, N.exponent_of(p)});
    }
    out.push_back(std::move(part));
  }
  return out;
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const PrimeGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  if (n > 20) throw std::invalid_argument("independence_number: too many vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.adjacent(g.vertices[i], g.vertices[j])) {
        adj[i] |= 1u << j;
      }
    }
  }
  return adj;
}

int max_independent(const std::vector<std::uint32_t>& adj, std::uint32_t require) {
  const int n = static_cast<int>(adj.size());
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask & require) != require) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if ((mask >> i) & 1u) ok = (adj[i] & mask) == 0;
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

int independence_number(const PrimeGraph& g) {
  return max_independent(adjacency_masks(g), 0);
}

int independence_number_at(const PrimeGraph& g, u64 r) {
  int i = g.index_of(r);
  if (i < 0) throw std::invalid_argument("independence_number_at: not a vertex");
  return max_independent(adjacency_masks(g), 1u << i);
}

namespace {

struct Realizer {
  int n = 0;
  std::vector<int> residual;
  std::vector<std::array<bool, 10>> forced;
  std::vector<std::array<bool, 10>> adj;
  std::vector<EdgeList>* out = nullptr;  // null: feasibility query only
  bool found = false;

  void emit() {
    EdgeList e;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (adj[i][j]) e.push_back({i, j});
      }
    }
    out->push_back(std::move(e));
  }

  // Decide the neighbors above vertex i; everything below i is fixed.
  void extend(int i) {
    if (found && !out) return;
    if (i == n) {
      found = true;
      if (out) emit();
      return;
    }
    std::vector<int> required, optional;
    for (int j = i + 1; j < n; ++j) {
      if (forced[i][j]) {
        required.push_back(j);
      } else if (residual[j] > 0) {
        optional.push_back(j);
      }
    }
    int k = residual[i] - static_cast<int>(required.size());
    if (k < 0 || k > static_cast<int>(optional.size())) return;
    for (int j : required) {
      if (residual[j] <= 0) return;
    }
    std::vector<int> pick(k);
    choose(i, required, optional, pick, 0, 0);
  }

  void take(int i, int j, int delta) {
    adj[i][j] = adj[j][i] = delta > 0;
    residual[i] -= delta;
    residual[j] -= delta;
  }

  void choose(int i, const std::vector<int>& required,
              const std::vector<int>& optional, std::vector<int>& pick,
              int depth, int from) {
    if (found && !out) return;
    if (depth == static_cast<int>(pick.size())) {
      for (int j : required) take(i, j, +1);
      for (int j : pick) take(i, j, +1);
      if (residual[i] == 0) extend(i + 1);
      for (int j : pick) take(i, j, -1);
      for (int j : required) take(i, j, -1);
      return;
    }
    for (int x = from; x < static_cast<int>(optional.size()); ++x) {
      pick[depth] = optional[x];
      choose(i, required, optional, pick, depth + 1, x + 1);
    }
  }
};

Realizer make_realizer(const DegreePattern& degrees, const EdgeList& forced) {
  const int n = static_cast<int>(degrees.size());
  if (n > 10) throw std::invalid_argument("realizations: too many vertices");
  Realizer r;
  r.n = n;
  r.residual = degrees;
  r.forced.assign(n, {});
  r.adj.assign(n, {});
  for (int d : degrees) {
    if (d < 0 || d >= std::max(n, 1)) {
      throw std::invalid_argument("realizations: degree out of range");
    }
  }
  for (auto [a, b] : forced) {
    if (a > b) std::swap(a, b);
    if (a == b || a < 0 || b >= n) {
      throw std::invalid_argument("realizations: bad forced edge");
    }
    r.forced[a][b] = r.forced[b][a] = true;
  }
  return r;
}

}  // namespace

std::vector<EdgeList> realizations(const DegreePattern& degrees,
                                   const EdgeList& forced) {
  Realizer r = make_realizer(degrees, forced);
  std::vector<EdgeList> out;
  r.out = &out;
  r.extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool realization_feasible(const DegreePattern& degrees, const EdgeList& forced) {
  Realizer r = make_realizer(degrees, forced);
  r.extend(0);
  return r.found;
}

int isomorphism_class_count(const DegreePattern& degrees, const EdgeList& forced) {
  auto all = realizations(degrees, forced);
  const int n = static_cast<int>(degrees.size());
  std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
  int np = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pair_index[i][j] = pair_index[j][i] = np++;
    }
  }
  auto mask_of = [&](const EdgeList& e, const std::vector<int>& perm) {
    std::uint64_t m = 0;
    for (auto [a, b] : e) m |= std::uint64_t{1} << pair_index[perm[a]][perm[b]];
    return m;
  };
  // degree-preserving permutations
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<std::vector<int>> perms;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = degrees[perm[i]] == degrees[i];
    if (ok) perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> canon;
  for (const auto& e : all) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& p : perms) best = std::min(best, mask_of(e, p));
    canon.insert(best);
  }
  return static_cast<int>(canon.size());
}

}  // namespace odchar::graph
