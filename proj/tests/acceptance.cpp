// Acceptance suite: one criterion per line, PASS/FAIL plus timing, nonzero
// exit when anything fails.  Every expected value is hard-coded here so the
// suite stays independent of the library's own serialization helpers.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "odchar/arith.hpp"
#include "odchar/catalog.hpp"
#include "odchar/graph.hpp"
#include "odchar/spectra.hpp"
#include "odchar/verifier.hpp"

namespace {

using odchar::arith::Factorization;
using odchar::arith::u64;
namespace arith = odchar::arith;
namespace catalog = odchar::catalog;
namespace graph = odchar::graph;
namespace spectra = odchar::spectra;
namespace verifier = odchar::verifier;

using Failures = std::vector<std::string>;

void expect(Failures& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

template <typename T>
std::string seq_text(const std::vector<T>& xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- criterion 1

struct InvariantRow {
  u64 q;
  std::string order;
  std::vector<u64> mu;
  graph::DegreePattern pattern;
};

const std::vector<InvariantRow>& invariant_rows() {
  static const std::vector<InvariantRow> rows = {
      {11, "2^4*3*5^2*7*11^3*19", {133, 120, 110}, {3, 2, 3, 1, 2, 1}},
      {23, "2^5*3*7*11^2*23^3*79", {553, 528, 506}, {3, 2, 1, 3, 2, 1}},
      {29, "2^5*3*5*7^2*13*29^3*67", {871, 840, 812}, {4, 3, 3, 4, 1, 2, 1}},
      {37, "2^5*3^4*7*19*37^3*67", {469, 456, 444, 36}, {3, 3, 1, 2, 2, 1}},
      {47, "2^6*3*23^2*37*47^3*61", {2257, 2208, 2162}, {3, 2, 3, 1, 2, 1}},
      {49, "2^9*3^2*5^2*7^6*19*43", {817, 800, 112, 48}, {3, 1, 1, 1, 1, 1}},
      {53, "2^5*3^3*7*13^2*53^3*409", {2863, 2808, 2756}, {3, 2, 1, 3, 2, 1}},
      {61, "2^5*3^2*5^2*13*31*61^3*97", {1261, 1240, 1220, 60}, {4, 2, 4, 1, 2, 2, 1}},
      {67, "2^4*3^2*7^2*11^2*17*31*67^3", {1519, 1496, 1474, 66}, {4, 2, 1, 4, 2, 1, 2}},
      {79, "2^6*3^2*5*7^2*13^2*43*79^3", {2107, 2080, 2054, 78}, {4, 2, 2, 1, 4, 1, 2}},
      {81, "2^9*3^12*5^2*7*13*41*73", {6643, 6560, 240}, {3, 2, 3, 2, 2, 2, 2}},
      {83, "2^4*3*7*19*41^2*83^3*367", {6973, 6888, 6806}, {4, 3, 3, 1, 4, 2, 1}},
  };
  return rows;
}

void criterion_invariants(Failures& f) {
  for (const auto& row : invariant_rows()) {
    const std::string tag = "q=" + std::to_string(row.q) + ": ";
    expect(f, arith::to_string(spectra::l3_order(row.q)) == row.order,
           tag + "order != " + row.order);
    const auto mu = spectra::l3_mu(row.q);
    expect(f, mu == row.mu, tag + "mu != " + seq_text(row.mu));
    const auto pattern = graph::degree_pattern(spectra::prime_graph_from_mu(mu));
    expect(f, pattern == row.pattern,
           tag + "degree pattern != " + seq_text(row.pattern));
  }
}

// ------------------------------------------------------------ criteria 2 to 4

struct CandidateRow {
  std::string label;
  std::string order;
  u64 out;
  std::vector<u64> kernel;  // checked only when the criterion asks for it
};

void check_candidate_table(Failures& f, u64 q, std::optional<u64> required,
                           const std::vector<CandidateRow>& expected,
                           bool check_kernel) {
  const std::string tag = "q=" + std::to_string(q) + ": ";
  const auto ids =
      catalog::enumerate_dividing(spectra::l3_order(q), required);
  expect(f, ids.size() == expected.size(),
         tag + "expected " + std::to_string(expected.size()) +
             " candidates, got " + std::to_string(ids.size()));
  if (ids.size() != expected.size()) return;

  const auto hypothesis = verifier::l3_hypothesis(q);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& want = expected[i];
    const std::string row = tag + "row " + std::to_string(i) + " (" +
                            want.label + "): ";
    expect(f, catalog::label(ids[i]) == want.label,
           row + "label is " + catalog::label(ids[i]));
    expect(f, arith::to_string(catalog::order_of(ids[i])) == want.order,
           row + "|S| != " + want.order);
    expect(f, catalog::out_order(ids[i]).value() == want.out,
           row + "|Out| != " + std::to_string(want.out));
    if (check_kernel) {
      expect(f, verifier::kernel_primes(hypothesis, ids[i]) == want.kernel,
             row + "kernel primes != " + seq_text(want.kernel));
    }
  }
}

void criterion_table_49(Failures& f) {
  check_candidate_table(
      f, 49, std::nullopt,
      {
          {"L2(4)", "2^2*3*5", 2, {2, 3, 5, 7, 19, 43}},
          {"L2(7)", "2^3*3*7", 2, {2, 3, 5, 7, 19, 43}},
          {"L2(9)", "2^3*3^2*5", 4, {2, 5, 7, 19, 43}},
          {"L2(8)", "2^3*3^2*7", 3, {2, 5, 7, 19, 43}},
          {"A7", "2^3*3^2*5*7", 2, {2, 5, 7, 19, 43}},
          {"L2(19)", "2^2*3^2*5*19", 2, {2, 5, 7, 43}},
          {"L3(4)", "2^6*3^2*5*7", 12, {2, 5, 7, 19, 43}},
          {"L4(2)", "2^6*3^2*5*7", 2, {2, 5, 7, 19, 43}},
          {"L2(49)", "2^4*3*5^2*7^2", 4, {2, 3, 7, 19, 43}},
          {"L3(7)", "2^5*3^2*7^3*19", 6, {2, 5, 7, 43}},
          {"U3(7)", "2^7*3*7^3*43", 2, {2, 3, 5, 7, 19}},
          {"L2(343)", "2^3*3^2*7^3*19*43", 6, {2, 5, 7}},
          {"S4(7)", "2^8*3^2*5^2*7^4", 2, {7, 19, 43}},
          {"L3(49)", "2^9*3^2*5^2*7^6*19*43", 12, {}},
      },
      /*check_kernel=*/true);
}

void criterion_tables_67_79(Failures& f) {
  check_candidate_table(f, 67, std::nullopt,
                        {
                            {"L2(7)", "2^3*3*7", 2, {}},
                            {"L2(8)", "2^3*3^2*7", 3, {}},
                            {"L2(17)", "2^4*3^2*17", 2, {}},
                            {"L2(67)", "2^2*3*11*17*67", 2, {}},
                            {"L3(67)", "2^4*3^2*7^2*11^2*17*31*67^3", 6, {}},
                        },
                        /*check_kernel=*/false);
  check_candidate_table(f, 79, std::nullopt,
                        {
                            {"L2(4)", "2^2*3*5", 2, {}},
                            {"L2(7)", "2^3*3*7", 2, {}},
                            {"L2(9)", "2^3*3^2*5", 4, {}},
                            {"L2(8)", "2^3*3^2*7", 3, {}},
                            {"L2(13)", "2^2*3*7*13", 2, {}},
                            {"A7", "2^3*3^2*5*7", 2, {}},
                            {"L3(4)", "2^6*3^2*5*7", 12, {}},
                            {"L4(2)", "2^6*3^2*5*7", 2, {}},
                            {"Sz(8)", "2^6*5*7*13", 3, {}},
                            {"L2(79)", "2^4*3*5*13*79", 2, {}},
                            {"L2(64)", "2^6*3^2*5*7*13", 6, {}},
                            {"L3(79)", "2^6*3^2*5*7^2*13^2*43*79^3", 6, {}},
                        },
                        /*check_kernel=*/false);
}

void criterion_filter_81(Failures& f) {
  check_candidate_table(f, 81, 73,
                        {
                            {"U3(9)", "2^5*3^6*5^2*73", 4, {}},
                            {"L2(729)", "2^3*3^6*5*7*13*73", 12, {}},
                            {"G2(9)", "2^8*3^12*5^2*7*13*73", 4, {}},
                            {"L3(81)", "2^9*3^12*5^2*7*13*41*73", 8, {}},
                        },
                        /*check_kernel=*/false);
}

// ---------------------------------------------------------------- criterion 5

void criterion_verdicts(Failures& f) {
  for (u64 q : verifier::default_targets()) {
    const std::string tag = "q=" + std::to_string(q) + ": ";
    const auto tr = verifier::verify_od_characterization(q);
    expect(f, tr.verdict == verifier::Verdict::Confirmed,
           tag + "verdict is not Confirmed");
    expect(f, verifier::recheck_side_conditions(tr),
           tag + "transcript recheck failed");

    const auto expected_route =
        q == 49 ? verifier::Route::Nilpotent : verifier::Route::Solvable;
    expect(f, tr.route == expected_route, tag + "unexpected route");

    for (const auto& cand : tr.candidates) {
      const std::string row = tag + cand.label + ": ";
      if (cand.is_target) {
        expect(f, cand.forced.empty() && !cand.eliminated,
               row + "target must survive with no forced edges");
        continue;
      }
      expect(f, cand.eliminated, row + "candidate not eliminated");
      expect(f, !cand.forced.empty(), row + "eliminated without forced edges");
      for (const auto& edge : cand.forced) {
        expect(f, !edge.facts.empty(),
               row + "forced edge without side conditions");
        for (const auto& fact : edge.facts) {
          expect(f, fact.recheck(tr.hypothesis, cand.candidate),
                 row + "side condition failed recheck: " + fact.render());
        }
      }
    }
  }

  const auto tr11 = verifier::verify_od_characterization(11);
  std::vector<std::string> labels;
  for (const auto& cand : tr11.candidates) labels.push_back(cand.label);
  const std::vector<std::string> expected = {"L2(4)", "L2(7)", "L2(11)", "J1",
                                             "L3(11)"};
  expect(f, labels == expected, "q=11: candidate list != " + seq_text(expected));
}

// ---------------------------------------------------------------- criterion 6

graph::PrimeGraph realized_graph(const std::vector<u64>& primes,
                                 const graph::EdgeList& edges) {
  std::vector<std::pair<u64, u64>> prime_edges;
  prime_edges.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    prime_edges.emplace_back(primes[static_cast<std::size_t>(i)],
                             primes[static_cast<std::size_t>(j)]);
  }
  return graph::make_graph(primes, prime_edges);
}

void criterion_figures(Failures& f) {
  // Every realization of the q = 49 pattern is a 3-star plus one disjoint
  // edge: two connected components, and the independence number through the
  // prime 2 is exactly 2.
  const auto h49 = verifier::l3_hypothesis(49);
  const auto primes49 = h49.primes();
  const auto shapes49 = graph::realizations(h49.pattern);
  expect(f, !shapes49.empty(), "q=49: pattern has no realization");
  for (const auto& edges : shapes49) {
    const auto g = realized_graph(primes49, edges);
    const std::string tag = "q=49 realization " + seq_text([&] {
                              std::vector<int> flat;
                              for (auto [a, b] : edges) {
                                flat.push_back(a);
                                flat.push_back(b);
                              }
                              return flat;
                            }()) +
                            ": ";

    u64 center = 0;
    int centers = 0;
    for (u64 v : g.vertices) {
      if (g.degree(v) == 3) {
        center = v;
        ++centers;
      } else {
        expect(f, g.degree(v) == 1, tag + "vertex of degree != 1 and != 3");
      }
    }
    expect(f, centers == 1, tag + "not exactly one degree-3 vertex");

    std::vector<u64> leaves, others;
    for (u64 v : g.vertices) {
      if (v == center) continue;
      (g.adjacent(center, v) ? leaves : others).push_back(v);
    }
    expect(f, leaves.size() == 3 && others.size() == 2,
           tag + "center is not adjacent to exactly three vertices");
    if (others.size() == 2) {
      expect(f, g.adjacent(others[0], others[1]),
             tag + "remaining two vertices do not form the disjoint edge");
    }
    expect(f, graph::components(g).size() == 2, tag + "component count != 2");
    expect(f, graph::independence_number_at(g, 2) == 2,
           tag + "independence number through 2 != 2");
  }
  expect(f, graph::isomorphism_class_count(h49.pattern) == 1,
         "q=49: realizations fall into more than one isomorphism class");

  // Every realization of the q = 81 pattern admits an independent 3-set and
  // an independent 2-set through the prime 2.
  const auto h81 = verifier::l3_hypothesis(81);
  const auto primes81 = h81.primes();
  const auto shapes81 = graph::realizations(h81.pattern);
  expect(f, !shapes81.empty(), "q=81: pattern has no realization");
  for (const auto& edges : shapes81) {
    const auto g = realized_graph(primes81, edges);
    expect(f, graph::independence_number(g) >= 3,
           "q=81: realization with independence number < 3");
    expect(f, graph::independence_number_at(g, 2) >= 2,
           "q=81: realization with independence number at 2 < 2");
  }
}

// ---------------------------------------------------------------- criterion 7

int brute_independence(const graph::PrimeGraph& g, std::optional<u64> through) {
  const int n = static_cast<int>(g.vertices.size());
  int required = -1;
  if (through) required = g.index_of(*through);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (required >= 0 && !(mask & (1u << required))) continue;
    bool independent = true;
    for (int i = 0; i < n && independent; ++i) {
      if (!(mask & (1u << i))) continue;
      for (int j = i + 1; j < n && independent; ++j) {
        if ((mask & (1u << j)) && g.adjacent(g.vertices[i], g.vertices[j])) {
          independent = false;
        }
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool erdos_gallai_feasible(std::vector<int> degrees) {
  const long sum = std::accumulate(degrees.begin(), degrees.end(), 0L);
  if (sum % 2 != 0) return false;
  std::sort(degrees.rbegin(), degrees.rend());
  const int n = static_cast<int>(degrees.size());
  long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += degrees[k - 1];
    long rhs = static_cast<long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(degrees[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

void sweep_feasibility(Failures& f, std::vector<int>& degrees, int n, int pos,
                       int max_value, bool non_increasing) {
  if (pos == n) {
    const bool got = graph::realization_feasible(degrees);
    const bool want = erdos_gallai_feasible(degrees);
    expect(f, got == want,
           "feasibility mismatch on " + seq_text(degrees) + ": engine says " +
               (got ? "yes" : "no"));
    return;
  }
  const int limit = non_increasing && pos > 0 ? degrees[pos - 1] : max_value;
  for (int v = 0; v <= limit; ++v) {
    degrees[pos] = v;
    sweep_feasibility(f, degrees, n, pos + 1, max_value, non_increasing);
  }
}

void criterion_oracles(Failures& f) {
  // (a) prime graph generation vs a pairwise divisibility brute force.
  for (const auto& row : invariant_rows()) {
    const std::string tag = "q=" + std::to_string(row.q) + ": ";
    const auto mu = spectra::l3_mu(row.q);
    const auto g = spectra::prime_graph_from_mu(mu);

    std::set<u64> primes;
    for (u64 m : mu) {
      for (const auto& pp : arith::factorize(m).factors) primes.insert(pp.prime);
    }
    expect(f,
           std::vector<u64>(primes.begin(), primes.end()) == g.vertices,
           tag + "vertex set does not match brute force");

    std::set<std::pair<u64, u64>> edges;
    for (u64 p : primes) {
      for (u64 r : primes) {
        if (p >= r) continue;
        for (u64 m : mu) {
          if (m % (p * r) == 0) {
            edges.emplace(p, r);
            break;
          }
        }
      }
    }
    expect(f, edges == g.edges, tag + "edge set does not match brute force");
  }

  // (b) independence numbers vs full subset enumeration, on every target
  // graph and every realization of every target pattern.
  for (const auto& row : invariant_rows()) {
    const std::string tag = "q=" + std::to_string(row.q) + ": ";
    const auto h = verifier::l3_hypothesis(row.q);
    const auto primes = h.primes();
    std::vector<graph::PrimeGraph> graphs = {
        spectra::prime_graph_from_mu(spectra::l3_mu(row.q))};
    for (const auto& edges : graph::realizations(h.pattern)) {
      graphs.push_back(realized_graph(primes, edges));
    }
    for (const auto& g : graphs) {
      expect(f,
             graph::independence_number(g) == brute_independence(g, std::nullopt),
             tag + "independence number mismatch");
      for (u64 v : g.vertices) {
        expect(f,
               graph::independence_number_at(g, v) == brute_independence(g, v),
               tag + "independence number at " + std::to_string(v) + " mismatch");
      }
    }
  }

  // (c) realization feasibility vs the Erdos-Gallai criterion: every degree
  // sequence on up to 5 vertices, and every non-increasing one on 6 and 7
  // (feasibility is invariant under permutation).
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> degrees(static_cast<std::size_t>(n), 0);
    sweep_feasibility(f, degrees, n, 0, n - 1, /*non_increasing=*/n > 5);
  }

  // (d) the closed-form order against the group catalog, for every prime
  // power field size up to 100.
  for (u64 q = 2; q <= 100; ++q) {
    if (!arith::prime_power_decomposition(q)) continue;
    expect(f,
           spectra::l3_order(q) ==
               catalog::order_of(catalog::lie(catalog::Family::A, 2, q)),
           "order mismatch between closed form and catalog at q=" +
               std::to_string(q));
  }

  // (e) factorization round trip against a sieve.
  std::vector<bool> composite(5001, false);
  for (u64 p = 2; p <= 5000; ++p) {
    if (composite[p]) continue;
    for (u64 m = p * p; m <= 5000; m += p) composite[m] = true;
  }
  for (u64 n = 2; n <= 5000; ++n) {
    const auto fact = arith::factorize(n);
    u64 product = 1;
    bool ok = true;
    u64 last = 0;
    for (const auto& pp : fact.factors) {
      ok = ok && pp.prime > last && pp.exponent >= 1 && !composite[pp.prime];
      last = pp.prime;
      for (int e = 0; e < pp.exponent; ++e) product *= pp.prime;
    }
    expect(f, ok && product == n,
           "factorize(" + std::to_string(n) + ") inconsistent with sieve");
  }
}

// ---------------------------------------------------------------- criterion 8

void criterion_negative_controls(Failures& f) {
  for (u64 q : verifier::default_targets()) {
    const auto h = verifier::l3_hypothesis(q);
    const int n = static_cast<int>(h.pattern.size());
    const int sum = std::accumulate(h.pattern.begin(), h.pattern.end(), 0);

    // Single-entry perturbations that keep the degree sum even.
    for (int i = 0; i < n; ++i) {
      for (int v = 0; v < n; ++v) {
        if (v == h.pattern[i]) continue;
        if ((sum - h.pattern[i] + v) % 2 != 0) continue;
        auto tampered = h;
        tampered.pattern[static_cast<std::size_t>(i)] = v;
        const auto tr = verifier::verify_hypothesis(tampered, q);
        expect(f, tr.verdict != verifier::Verdict::Confirmed,
               "q=" + std::to_string(q) + ": perturbed pattern " +
                   seq_text(tampered.pattern) + " was confirmed");
      }
    }

    // Swaps of two unequal entries (degree sum unchanged).
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (h.pattern[i] == h.pattern[j]) continue;
        auto tampered = h;
        std::swap(tampered.pattern[static_cast<std::size_t>(i)],
                  tampered.pattern[static_cast<std::size_t>(j)]);
        const auto tr = verifier::verify_hypothesis(tampered, q);
        expect(f, tr.verdict != verifier::Verdict::Confirmed,
               "q=" + std::to_string(q) + ": swapped pattern " +
                   seq_text(tampered.pattern) + " was confirmed");
      }
    }
  }

  // Wrong order (an extra power of a prime already present, so the
  // hypothesis stays well-formed), wrong field size, and a tampered
  // transcript.
  for (u64 q : {u64(11), u64(49), u64(81)}) {
    auto h = verifier::l3_hypothesis(q);
    h.order.multiply(arith::factorize(h.primes().back()));
    const auto tr = verifier::verify_hypothesis(h, q);
    expect(f, tr.verdict != verifier::Verdict::Confirmed,
           "q=" + std::to_string(q) + ": inflated order was confirmed");
  }
  expect(f,
         verifier::verify_hypothesis(verifier::l3_hypothesis(11), 13).verdict !=
             verifier::Verdict::Confirmed,
         "hypothesis for q=11 was confirmed against q=13");

  auto tr49 = verifier::verify_od_characterization(49);
  expect(f, verifier::recheck_side_conditions(tr49),
         "untampered q=49 transcript fails recheck");
  auto broken = tr49;
  for (auto& cand : broken.candidates) {
    if (!cand.is_target) {
      cand.eliminated = false;
      break;
    }
  }
  expect(f, !verifier::recheck_side_conditions(broken),
         "flipped elimination flag passed recheck");
  broken = tr49;
  for (auto& cand : broken.candidates) {
    for (auto& edge : cand.forced) {
      for (auto& fact : edge.facts) {
        if (fact.kind == verifier::Fact::Kind::KernelExponentBound) {
          fact.bound += 1;
          goto tampered;
        }
      }
    }
  }
tampered:
  expect(f, !verifier::recheck_side_conditions(broken),
         "tampered exponent bound passed recheck");
  broken = tr49;
  broken.gate.alpha_min += 1;
  expect(f, !verifier::recheck_side_conditions(broken),
         "tampered gate statistics passed recheck");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Failures&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "target invariants", 1.0, criterion_invariants},
      {2, "order-49^3 candidate table", 10.0, criterion_table_49},
      {3, "order-67^3 and order-79^3 candidate tables", 20.0,
       criterion_tables_67_79},
      {4, "order-81^3 candidate filter through 73", 10.0, criterion_filter_81},
      {5, "verification verdicts", 60.0, criterion_verdicts},
      {6, "realization shapes", 30.0, criterion_figures},
      {7, "oracle equivalence", 120.0, criterion_oracles},
      {8, "negative controls", 120.0, criterion_negative_controls},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    Failures failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.body(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.limit_seconds) {
      failures.push_back("time limit exceeded: " + std::to_string(seconds) +
                         "s > " + std::to_string(criterion.limit_seconds) + "s");
    }
    const bool pass = failures.empty();
    all_pass = all_pass && pass;
    std::printf("CRITERION %d [%s]: %s (%.2fs)\n", criterion.id,
                criterion.name.c_str(), pass ? "PASS" : "FAIL", seconds);
    for (const auto& failure : failures) {
      std::printf("  - %s\n", failure.c_str());
    }
  }
  return all_pass ? 0 : 1;
}
