#pragma once

#include <string>
#include <vector>

#include "odchar/arith.hpp"
#include "odchar/catalog.hpp"
#include "odchar/graph.hpp"

namespace odchar::verifier {

using arith::Factorization;
using arith::u128;
using arith::u64;

// A hypothetical finite group G known only through its order and the degree
// pattern of its prime graph (degrees listed by ascending prime divisor).
struct Hypothesis {
  Factorization order;
  graph::DegreePattern pattern;

  std::vector<u64> primes() const;  // ascending primes of the order

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

// The hypothesis carried by L3(q): its order and true degree pattern.
Hypothesis l3_hypothesis(u64 q);

// The field sizes whose verification this tool ships reference data for.
const std::vector<u64>& default_targets();

// An elementary, independently recheckable arithmetic fact used as a side
// condition of a deduction.
struct Fact {
  enum class Kind {
    KernelExponentBound,  // e_r(|G|) - e_r(|S|) == bound, and bound <= 2
    NonDivisorOfProduct,  // t does not divide r * prod_{i<=bound} (r^i - 1)
    PowersNeverOneMod,    // t^j != 1 (mod r) for all 1 <= j <= bound
    PrimeOfCandidate,     // t divides |S|
    KernelPrime,          // e_r(|G|) > e_r(|Aut S|)
  };
  Kind kind;
  u64 r = 0;
  u64 t = 0;
  int bound = 0;

  std::string render() const;
  bool recheck(const Hypothesis& h, const catalog::SimpleGroupId& s) const;

  friend bool operator==(const Fact&, const Fact&) = default;
};

// An edge of the prime graph that must be present under the hypothesis that
// G has a composition factor S above its solvable radical.
struct ForcedEdge {
  u64 r = 0;
  u64 t = 0;
  std::string rule;         // "nilpotent-kernel", "frattini-cyclic", "abelian-hall"
  std::vector<Fact> facts;  // side conditions justifying the edge
};

// Which structural theorem supplies the normal subgroup the edge rules act
// on.  Solvable: the solvable radical (needs the independence gate only).
// Nilpotent: a nilpotent normal subgroup from the disconnected-graph
// classification; admissible only when every realization of the degree
// pattern is disconnected and the Frobenius shapes are excluded.
enum class Route { Solvable, Nilpotent };

// Guarantees extracted from the degree pattern alone, by sweeping every
// realization: minimum independence number, minimum independence number
// through the prime 2, whether every realization is disconnected, and the
// number of labeled realizations / isomorphism classes.  passed means every
// group with this degree pattern has an almost simple quotient over its
// solvable radical (independence number >= 3 and >= 2 through the prime 2).
struct GateResult {
  bool passed = false;
  int alpha_min = -1;
  int alpha_at_two_min = -1;
  bool all_disconnected = false;
  int realization_count = 0;
  int iso_classes = 0;
  bool shortcut_predicts = false;  // degree-counting sufficient condition

  friend bool operator==(const GateResult&, const GateResult&) = default;
};
GateResult gate_alpha(const Hypothesis& h);

// Exclusion of the Frobenius and 2-Frobenius shapes for a group of this
// order and degree pattern.  A non-solvable Frobenius complement contains
// SL(2,5) with odd centralizing factor of order prime to 15, which pins the
// 2-, 3- and 5-parts of |G|; evenness plus independence number >= 3 rules
// out solvable groups and hence every 2-Frobenius group.
struct ExclusionResult {
  bool non_solvable = false;
  bool frobenius_excluded = false;
  bool two_frobenius_excluded = false;
  std::vector<std::string> detail;

  friend bool operator==(const ExclusionResult& a, const ExclusionResult& b) {
    return a.non_solvable == b.non_solvable &&
           a.frobenius_excluded == b.frobenius_excluded &&
           a.two_frobenius_excluded == b.two_frobenius_excluded;
  }
};
ExclusionResult frobenius_exclusion(const Hypothesis& h);

// Route selection for the whole hypothesis: Nilpotent when admissible,
// otherwise Solvable.
Route route_for(const Hypothesis& h);

// Primes guaranteed to divide the normal subgroup the route provides:
// r with e_r(|G|) > e_r(|Aut S|).
std::vector<u64> kernel_primes(const Hypothesis& h,
                               const catalog::SimpleGroupId& s);

// Prime-graph edges every group G with |G| = h.order, D(G) = h.pattern and
// composition factor S above the radical must contain, with side conditions.
std::vector<ForcedEdge> forced_edges(const Hypothesis& h,
                                     const catalog::SimpleGroupId& s,
                                     Route route);

// Outcome of testing one candidate composition factor.
struct Elimination {
  catalog::SimpleGroupId candidate;
  std::string label;
  std::vector<u64> kernel;
  std::vector<ForcedEdge> forced;
  bool eliminated = false;  // no realization of the pattern holds all forced edges
  bool is_target = false;
  std::string note;
};
Elimination eliminate_candidate(const Hypothesis& h,
                                const catalog::SimpleGroupId& s);
Elimination eliminate_candidate(const Hypothesis& h,
                                const catalog::SimpleGroupId& s, Route route);

// One deduction recorded in a transcript.
struct Step {
  std::string name;
  std::string rule;
  std::vector<std::string> inputs;
  std::vector<std::string> side_conditions;
  std::string conclusion;
  std::string paper_ref;  // standard literature tag for the rule used
};

enum class Verdict { Confirmed, Inconclusive };
std::string to_string(Verdict v);

struct Transcript {
  u64 q = 0;
  Hypothesis hypothesis;
  GateResult gate;
  ExclusionResult exclusions;
  Route route = Route::Solvable;
  std::vector<Step> steps;
  std::vector<Elimination> candidates;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

// Full pipeline against an arbitrary hypothesis; q names the target class
// L3(q).  Confirmed requires: gate passed, every non-target candidate
// eliminated, the target present and surviving, and the hypothesis equal to
// the target's true order and degree pattern.
Transcript verify_hypothesis(const Hypothesis& h, u64 q);

// verify_hypothesis against the true invariants of L3(q).
Transcript verify_od_characterization(u64 q);

// Recomputes every recorded side condition, gate, exclusion and elimination
// of a transcript from scratch; true when everything reproduces.
bool recheck_side_conditions(const Transcript& tr);

}  // namespace odchar::verifier
