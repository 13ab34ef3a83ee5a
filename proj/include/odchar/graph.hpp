#pragma once

#include <set>
#include <utility>
#include <vector>

#include "odchar/arith.hpp"

namespace odchar::graph {

using arith::u64;

// Undirected graph whose vertices are primes.
struct PrimeGraph {
  std::vector<u64> vertices;            // strictly ascending
  std::set<std::pair<u64, u64>> edges;  // (a, b) with a < b, both vertices

  bool adjacent(u64 a, u64 b) const;
  int degree(u64 v) const;
  int index_of(u64 v) const;  // position in vertices, -1 when absent
};

// Canonicalizes (sorts vertices, orders edge endpoints, drops duplicates) and
// validates that every edge endpoint is a vertex and no edge is a loop.
PrimeGraph make_graph(std::vector<u64> vertices,
                      const std::vector<std::pair<u64, u64>>& edges);

// Vertex degrees listed by ascending prime.
using DegreePattern = std::vector<int>;
DegreePattern degree_pattern(const PrimeGraph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<u64>> components(const PrimeGraph& g);

// Restriction of N to each component of g: the order components.  Requires
// the vertex set of g to be exactly the set of primes dividing N.
std::vector<arith::Factorization> order_components(const arith::Factorization& N,
                                                   const PrimeGraph& g);

// Independence number, and the largest independent set through a given
// vertex.  Exhaustive over subsets; |V| <= 20.
int independence_number(const PrimeGraph& g);
int independence_number_at(const PrimeGraph& g, u64 r);

// Labeled graphs on {0, ..., n-1} realizing a degree sequence.  Edges are
// (i, j) with i < j in lexicographic order, and the returned list of graphs
// is lexicographically sorted, so output is deterministic.  Every forced
// edge must appear in each realization.  n <= 10.
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;
std::vector<EdgeList> realizations(const DegreePattern& degrees,
                                   const EdgeList& forced = {});

// True when at least one realization exists (early-exit search).
bool realization_feasible(const DegreePattern& degrees,
                          const EdgeList& forced = {});

// Number of isomorphism classes among the realizations, where isomorphisms
// are degree-preserving vertex permutations.
int isomorphism_class_count(const DegreePattern& degrees,
                            const EdgeList& forced = {});

}  // namespace odchar::graph
