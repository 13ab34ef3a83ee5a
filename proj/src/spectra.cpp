#include "odchar/spectra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace odchar::spectra {

namespace {

std::pair<u64, int> checked_char(u64 q) {
  auto pp = arith::prime_power_decomposition(q);
  if (!pp || q < 2 || q >= (u64{1} << 20)) {
    throw std::invalid_argument("q must be a prime power in [2, 2^20)");
  }
  return *pp;
}

}  // namespace

Factorization l3_order(u64 q) {
  auto [p, f] = checked_char(q);
  Factorization out;
  out.factors.push_back({p, 3 * f});
  out.multiply(arith::factorize(q - 1));
  out.multiply(arith::factorize(q - 1));
  out.multiply(arith::factorize(q + 1));
  out.multiply(arith::factorize(static_cast<arith::u128>(q) * q + q + 1));
  if ((q - 1) % 3 == 0) {
    // divide by d = 3
    for (auto& pf : out.factors) {
      if (pf.prime == 3) {
        pf.exponent -= 1;
        break;
      }
    }
    std::erase_if(out.factors, [](const auto& pf) { return pf.exponent == 0; });
  }
  return out;
}

std::vector<u64> l3_mu(u64 q) {
  auto [p, f] = checked_char(q);
  (void)f;
  u64 d = (q - 1) % 3 == 0 ? 3 : 1;
  std::set<u64> cand = {
      (q * q + q + 1) / d,
      (q * q - 1) / d,
      q - 1,
      p * (q - 1) / d,
  };
  std::vector<u64> mu;
  for (u64 x : cand) {
    if (x <= 1) continue;
    bool maximal = true;
    for (u64 y : cand) {
      if (y != x && y % x == 0) maximal = false;
    }
    if (maximal) mu.push_back(x);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

graph::PrimeGraph prime_graph_from_mu(const std::vector<u64>& mu) {
  std::set<u64> vertices;
  std::set<std::pair<u64, u64>> edges;
  for (u64 m : mu) {
    if (m == 0) throw std::invalid_argument("prime_graph_from_mu: zero order");
    Factorization f = arith::factorize(m);
    for (size_t i = 0; i < f.factors.size(); ++i) {
      vertices.insert(f.factors[i].prime);
      for (size_t j = i + 1; j < f.factors.size(); ++j) {
        edges.insert({f.factors[i].prime, f.factors[j].prime});
      }
    }
  }
  graph::PrimeGraph g;
  g.vertices.assign(vertices.begin(), vertices.end());
  g.edges = std::move(edges);
  return g;
}

}  // namespace odchar::spectra
