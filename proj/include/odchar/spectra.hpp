#pragma once

#include <vector>

#include "odchar/arith.hpp"
#include "odchar/graph.hpp"

namespace odchar::spectra {

using arith::Factorization;
using arith::u64;

// |L3(q)| = q^3 (q-1)^2 (q+1) (q^2+q+1) / gcd(3, q-1), factored; built
// independently of the group catalog so the two can cross-check each other.
// q must be a prime power, 2 <= q < 2^20.
Factorization l3_order(u64 q);

// Divisibility-maximal element orders of L3(q): the antichain generated by
// (q^2+q+1)/d, (q^2-1)/d, q-1 and p(q-1)/d where q = p^f, d = gcd(3, q-1).
// Descending.  (In characteristic 2 the group also contains elements of
// order 4; that never adds a prime-graph edge, so the generated graph is
// exact for every q.)
std::vector<u64> l3_mu(u64 q);

// Prime graph generated by a set of element orders: vertices are the primes
// dividing some member, r and s adjacent iff rs divides some member.
graph::PrimeGraph prime_graph_from_mu(const std::vector<u64>& mu);

}  // namespace odchar::spectra
