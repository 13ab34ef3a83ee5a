#include "odchar/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "odchar/spectra.hpp"

namespace odchar::verifier {

namespace {

std::string pattern_to_string(const graph::DegreePattern& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

// Does t divide r * prod_{i=1..a} (r^i - 1)?  Computed modulo t, so no
// intermediate overflow regardless of the size of r.
bool divides_cyclic_aut_product(u64 t, u64 r, int a) {
  u128 acc = r % t;
  for (int i = 1; i <= a; ++i) {
    u128 term = (arith::powmod(r % t, i, t) + t - 1) % t;
    acc = (acc * term) % t;
  }
  return acc == 0;
}

// t^j != 1 (mod r) for every 1 <= j <= jmax.
bool powers_never_one(u64 t, u64 r, int jmax) {
  for (int j = 1; j <= jmax; ++j)
    if (arith::powmod(t % r, j, r) == 1) return false;
  return true;
}

int max_kernel_exponent(const Hypothesis& h, const catalog::SimpleGroupId& s,
                        u64 r) {
  return h.order.exponent_of(r) - catalog::order_of(s).exponent_of(r);
}

}  // namespace

std::vector<u64> Hypothesis::primes() const {
  std::vector<u64> ps;
  ps.reserve(order.factors.size());
  for (const auto& pp : order.factors) ps.push_back(pp.prime);
  std::sort(ps.begin(), ps.end());
  return ps;
}

Hypothesis l3_hypothesis(u64 q) {
  Hypothesis h;
  h.order = spectra::l3_order(q);
  h.pattern =
      graph::degree_pattern(spectra::prime_graph_from_mu(spectra::l3_mu(q)));
  return h;
}

const std::vector<u64>& default_targets() {
  static const std::vector<u64> qs = {11, 23, 29, 37, 47, 49,
                                      53, 61, 67, 79, 81, 83};
  return qs;
}

std::string Fact::render() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::KernelExponentBound:
      os << "e_" << r << "(|G|) - e_" << r << "(|S|) = " << bound << " <= 2";
      break;
    case Kind::NonDivisorOfProduct:
      os << t << " does not divide " << r << " * prod_{i<=" << bound << "}("
         << r << "^i - 1)";
      break;
    case Kind::PowersNeverOneMod:
      os << t << "^j != 1 (mod " << r << ") for 1 <= j <= " << bound;
      break;
    case Kind::PrimeOfCandidate:
      os << t << " divides |S|";
      break;
    case Kind::KernelPrime:
      os << "e_" << r << "(|G|) > e_" << r << "(|Aut S|)";
      break;
  }
  return os.str();
}

bool Fact::recheck(const Hypothesis& h, const catalog::SimpleGroupId& s) const {
  switch (kind) {
    case Kind::KernelExponentBound:
      return bound >= 1 && bound <= 2 && max_kernel_exponent(h, s, r) == bound;
    case Kind::NonDivisorOfProduct:
      return !divides_cyclic_aut_product(t, r, bound);
    case Kind::PowersNeverOneMod:
      // The bound must cover every possible exponent of t in the normal
      // subgroup, i.e. at least e_t(|G|) - e_t(|S|).
      return bound >= max_kernel_exponent(h, s, t) &&
             powers_never_one(t, r, bound);
    case Kind::PrimeOfCandidate:
      return catalog::order_of(s).exponent_of(t) >= 1;
    case Kind::KernelPrime:
      return h.order.exponent_of(r) > catalog::aut_order(s).exponent_of(r);
  }
  return false;
}

GateResult gate_alpha(const Hypothesis& h) {
  GateResult g;
  const auto ps = h.primes();
  if (ps.size() != h.pattern.size())
    throw std::invalid_argument(
        "gate_alpha: pattern length differs from the number of primes");
  const auto rs = graph::realizations(h.pattern);
  g.realization_count = static_cast<int>(rs.size());
  g.iso_classes = graph::isomorphism_class_count(h.pattern);
  g.all_disconnected = !rs.empty();
  const bool has_two = std::find(ps.begin(), ps.end(), 2) != ps.end();
  for (const auto& edges : rs) {
    std::vector<std::pair<u64, u64>> pe;
    pe.reserve(edges.size());
    for (auto [a, b] : edges) pe.emplace_back(ps[a], ps[b]);
    const auto pg = graph::make_graph(ps, pe);
    const int alpha = graph::independence_number(pg);
    if (g.alpha_min < 0 || alpha < g.alpha_min) g.alpha_min = alpha;
    if (has_two) {
      const int alpha2 = graph::independence_number_at(pg, 2);
      if (g.alpha_at_two_min < 0 || alpha2 < g.alpha_at_two_min)
        g.alpha_at_two_min = alpha2;
    }
    if (graph::components(pg).size() < 2) g.all_disconnected = false;
  }
  const int n = static_cast<int>(h.pattern.size());
  const int deg1 = static_cast<int>(std::count(h.pattern.begin(),
                                               h.pattern.end(), 1));
  const int deg2 = static_cast<int>(std::count(h.pattern.begin(),
                                               h.pattern.end(), 2));
  const int deg3 = static_cast<int>(std::count(h.pattern.begin(),
                                               h.pattern.end(), 3));
  g.shortcut_predicts =
      deg1 >= 2 && ((n == 6 && deg2 >= 2) || (n >= 7 && deg3 >= 2));
  g.passed = g.realization_count > 0 && g.alpha_min >= 3 &&
             g.alpha_at_two_min >= 2;
  return g;
}

namespace {

ExclusionResult frobenius_exclusion_impl(const Hypothesis& h,
                                         const GateResult& gate) {
  ExclusionResult r;
  const int e2 = h.order.exponent_of(2);
  const int e3 = h.order.exponent_of(3);
  const int e5 = h.order.exponent_of(5);
  r.non_solvable = e2 >= 1 && gate.realization_count > 0 && gate.alpha_min >= 3;
  {
    std::ostringstream os;
    os << "|G| even and every realization has independence number "
       << gate.alpha_min << " >= 3, so G is non-solvable";
    if (r.non_solvable) r.detail.push_back(os.str());
  }
  // A Frobenius group with non-solvable complement H has H containing
  // SL(2,5) x Z with Z of order prime to 30 and index at most 2, and the
  // kernel has order prime to |H|; hence |G|_2 in {8,16}, |G|_3 = 3 and
  // |G|_5 = 5.  A solvable G cannot be our group at all.
  const bool complement_shape_possible =
      e2 >= 3 && e2 <= 4 && e3 == 1 && e5 == 1;
  r.frobenius_excluded = r.non_solvable && !complement_shape_possible;
  if (r.frobenius_excluded) {
    std::ostringstream os;
    os << "non-solvable Frobenius needs |G|_2 in {8,16}, |G|_3 = 3, "
          "|G|_5 = 5; here the exponents of 2,3,5 are "
       << e2 << "," << e3 << "," << e5;
    r.detail.push_back(os.str());
  }
  // 2-Frobenius groups are solvable.
  r.two_frobenius_excluded = r.non_solvable;
  if (r.two_frobenius_excluded)
    r.detail.push_back(
        "2-Frobenius groups are solvable, and G is non-solvable");
  return r;
}

}  // namespace

ExclusionResult frobenius_exclusion(const Hypothesis& h) {
  return frobenius_exclusion_impl(h, gate_alpha(h));
}

namespace {

Route route_for_impl(const GateResult& gate, const ExclusionResult& ex) {
  const bool nilpotent_admissible = gate.passed && gate.all_disconnected &&
                                    ex.frobenius_excluded &&
                                    ex.two_frobenius_excluded;
  return nilpotent_admissible ? Route::Nilpotent : Route::Solvable;
}

}  // namespace

Route route_for(const Hypothesis& h) {
  const auto gate = gate_alpha(h);
  return route_for_impl(gate, frobenius_exclusion_impl(h, gate));
}

std::vector<u64> kernel_primes(const Hypothesis& h,
                               const catalog::SimpleGroupId& s) {
  const auto aut = catalog::aut_order(s);
  std::vector<u64> out;
  for (u64 r : h.primes())
    if (h.order.exponent_of(r) > aut.exponent_of(r)) out.push_back(r);
  return out;
}

std::vector<ForcedEdge> forced_edges(const Hypothesis& h,
                                     const catalog::SimpleGroupId& s,
                                     Route route) {
  const auto kp = kernel_primes(h, s);
  const auto sorder = catalog::order_of(s);
  const auto all = h.primes();
  std::vector<ForcedEdge> out;
  std::set<std::pair<u64, u64>> seen;
  auto add = [&](u64 a, u64 b, const char* rule, std::vector<Fact> facts) {
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) return;
    out.push_back(ForcedEdge{key.first, key.second, rule, std::move(facts)});
  };

  // Nilpotent normal subgroup: its Sylow subgroups commute elementwise, so
  // any two of its primes are adjacent.
  if (route == Route::Nilpotent) {
    for (std::size_t i = 0; i < kp.size(); ++i)
      for (std::size_t j = i + 1; j < kp.size(); ++j)
        add(kp[i], kp[j], "nilpotent-kernel",
            {Fact{Fact::Kind::KernelPrime, kp[i], 0, 0},
             Fact{Fact::Kind::KernelPrime, kp[j], 0, 0}});
  }

  // Frattini argument on a Sylow r-subgroup P of the radical-side normal
  // subgroup: |P| <= r^2 makes P abelian with |Aut P| dividing
  // r * prod_{i<=a}(r^i - 1).  Any prime t outside that product normalizes
  // some conjugate of P -- directly when t divides |S| or avoids the kernel,
  // and through a Hall {r,t}-subgroup with a unique Sylow r otherwise -- and
  // then centralizes it, giving an element of order r*t.
  for (u64 r : kp) {
    const int a = max_kernel_exponent(h, s, r);
    if (a > 2) continue;
    for (u64 t : all) {
      if (t == r) continue;
      if (divides_cyclic_aut_product(t, r, a)) continue;
      std::vector<Fact> facts = {
          Fact{Fact::Kind::KernelPrime, r, 0, 0},
          Fact{Fact::Kind::KernelExponentBound, r, 0, a},
          Fact{Fact::Kind::NonDivisorOfProduct, r, t, a}};
      if (sorder.exponent_of(t) >= 1) {
        facts.push_back(Fact{Fact::Kind::PrimeOfCandidate, 0, t, 0});
      } else if (powers_never_one(t, r, h.order.exponent_of(t))) {
        facts.push_back(Fact{Fact::Kind::PowersNeverOneMod, r, t,
                             h.order.exponent_of(t)});
      } else {
        continue;
      }
      add(r, t, "frattini-cyclic", std::move(facts));
    }
  }

  // Two kernel primes with small exponents: a Hall {r,t}-subgroup of the
  // radical has both Sylows normal when neither prime has order 1 modulo
  // the other, so it is their direct product and contains an element of
  // order r*t.
  for (std::size_t i = 0; i < kp.size(); ++i) {
    const u64 r = kp[i];
    const int a = max_kernel_exponent(h, s, r);
    if (a > 2) continue;
    for (std::size_t j = i + 1; j < kp.size(); ++j) {
      const u64 t = kp[j];
      const int b = max_kernel_exponent(h, s, t);
      if (b > 2) continue;
      if (!powers_never_one(r, t, a) || !powers_never_one(t, r, b)) continue;
      add(r, t, "abelian-hall",
          {Fact{Fact::Kind::KernelPrime, r, 0, 0},
           Fact{Fact::Kind::KernelPrime, t, 0, 0},
           Fact{Fact::Kind::KernelExponentBound, r, 0, a},
           Fact{Fact::Kind::KernelExponentBound, t, 0, b},
           Fact{Fact::Kind::PowersNeverOneMod, t, r, a},
           Fact{Fact::Kind::PowersNeverOneMod, r, t, b}});
    }
  }
  return out;
}

namespace {

graph::EdgeList forced_index_edges(const Hypothesis& h,
                                   const std::vector<ForcedEdge>& forced) {
  const auto ps = h.primes();
  auto index_of = [&](u64 p) {
    const auto it = std::lower_bound(ps.begin(), ps.end(), p);
    return static_cast<int>(it - ps.begin());
  };
  graph::EdgeList edges;
  edges.reserve(forced.size());
  for (const auto& fe : forced) {
    int a = index_of(fe.r), b = index_of(fe.t);
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

Elimination eliminate_candidate(const Hypothesis& h,
                                const catalog::SimpleGroupId& s, Route route) {
  Elimination e;
  e.candidate = s;
  e.label = catalog::label(s);
  e.kernel = kernel_primes(h, s);
  e.forced = forced_edges(h, s, route);
  e.eliminated =
      !graph::realization_feasible(h.pattern, forced_index_edges(h, e.forced));
  return e;
}

Elimination eliminate_candidate(const Hypothesis& h,
                                const catalog::SimpleGroupId& s) {
  return eliminate_candidate(h, s, route_for(h));
}

std::string to_string(Verdict v) {
  return v == Verdict::Confirmed ? "Confirmed" : "Inconclusive";
}

Transcript verify_hypothesis(const Hypothesis& h, u64 q) {
  const auto target = catalog::lie(catalog::Family::A, 2, q);
  if (!catalog::is_simple_group_name(target))
    throw std::invalid_argument("verify_hypothesis: no simple group L3(" +
                                std::string(arith::to_string(u128(q))) + ")");

  Transcript tr;
  tr.q = q;
  tr.hypothesis = h;

  tr.steps.push_back(Step{
      "hypothesis",
      "record the order and degree pattern under test",
      {arith::to_string(h.order), pattern_to_string(h.pattern)},
      {},
      "|G| = " + arith::to_string(h.order) +
          ", D(G) = " + pattern_to_string(h.pattern),
      "input data"});

  tr.gate = gate_alpha(h);
  {
    Step st;
    st.name = "independence-gate";
    st.rule =
        "independence number >= 3 and >= 2 through the prime 2 in every "
        "realization force an almost simple quotient over the solvable "
        "radical";
    st.inputs = {pattern_to_string(h.pattern)};
    st.side_conditions = {
        "realizations = " + std::to_string(tr.gate.realization_count),
        "isomorphism classes = " + std::to_string(tr.gate.iso_classes),
        "min independence number = " + std::to_string(tr.gate.alpha_min),
        "min independence number at 2 = " +
            std::to_string(tr.gate.alpha_at_two_min),
        std::string("all realizations disconnected = ") +
            (tr.gate.all_disconnected ? "yes" : "no"),
        std::string("degree-count shortcut predicts >= 3: ") +
            (tr.gate.shortcut_predicts ? "yes" : "no")};
    st.conclusion = tr.gate.passed ? "gate passed" : "gate failed";
    st.paper_ref = "Vasilev 2005";
    tr.steps.push_back(std::move(st));
  }

  tr.exclusions = frobenius_exclusion_impl(h, tr.gate);
  tr.steps.push_back(Step{
      "frobenius-exclusion",
      "a non-solvable Frobenius complement contains SL(2,5) with odd prime-"
      "to-15 centralizing factor and index <= 2, pinning |G|_2 in {8,16}, "
      "|G|_3 = 3, |G|_5 = 5",
      {arith::to_string(h.order)},
      tr.exclusions.detail,
      tr.exclusions.frobenius_excluded ? "G is not a Frobenius group"
                                       : "Frobenius shape not excluded",
      "Gorenstein 1980"});
  tr.steps.push_back(Step{
      "two-frobenius-exclusion",
      "even order with independence number >= 3 makes G non-solvable, and "
      "2-Frobenius groups are solvable",
      {pattern_to_string(h.pattern)},
      {},
      tr.exclusions.two_frobenius_excluded
          ? "G is not a 2-Frobenius group"
          : "2-Frobenius shape not excluded",
      "Higman 1957"});

  tr.route = route_for_impl(tr.gate, tr.exclusions);
  tr.steps.push_back(Step{
      "route-selection",
      tr.route == Route::Nilpotent
          ? "every realization is disconnected and the Frobenius shapes are "
            "excluded, so G has a nilpotent normal subgroup whose primes "
            "include every kernel prime"
          : "the almost simple quotient G/K with K the solvable radical "
            "bounds |G/K| by |Aut S|",
      {},
      {},
      tr.route == Route::Nilpotent ? "nilpotent-kernel route"
                                   : "solvable-radical route",
      tr.route == Route::Nilpotent ? "Williams 1981" : "Vasilev 2005"});

  if (!tr.gate.passed) {
    tr.verdict = Verdict::Inconclusive;
    tr.notes.push_back("independence gate failed; no structural theorem "
                       "applies to this degree pattern");
    return tr;
  }

  const auto candidates = catalog::enumerate_dividing(h.order);
  {
    Step st;
    st.name = "candidate-enumeration";
    st.rule =
        "a composition factor above the solvable radical has order dividing "
        "|G|; all simple classes of dividing order are enumerated";
    st.inputs = {arith::to_string(h.order)};
    std::string list;
    for (const auto& c : candidates) {
      if (!list.empty()) list += ", ";
      list += catalog::label(c);
    }
    st.conclusion = std::to_string(candidates.size()) +
                    " candidate classes: " + list;
    st.paper_ref = "Lagrange";
    tr.steps.push_back(std::move(st));
  }

  const auto canonical_target = catalog::canonicalize(target);
  bool target_present = false;
  bool target_survives = false;
  std::vector<std::string> survivors;
  for (const auto& s : candidates) {
    auto elim = eliminate_candidate(h, s, tr.route);
    elim.is_target = (s == canonical_target);
    if (elim.is_target) {
      target_present = true;
      target_survives = !elim.eliminated;
      if (target_survives) elim.note = "target class survives";
    }
    if (!elim.eliminated && !elim.is_target) survivors.push_back(elim.label);
    tr.candidates.push_back(std::move(elim));
  }
  {
    Step st;
    st.name = "candidate-elimination";
    st.rule =
        "forced prime-graph edges incompatible with every realization of the "
        "degree pattern eliminate a candidate";
    std::size_t eliminated = 0;
    for (const auto& e : tr.candidates)
      if (e.eliminated) ++eliminated;
    st.conclusion = std::to_string(eliminated) + " of " +
                    std::to_string(tr.candidates.size()) +
                    " candidates eliminated";
    st.paper_ref = tr.route == Route::Nilpotent ? "Williams 1981"
                                                : "Hall-Sylow arguments";
    tr.steps.push_back(std::move(st));
  }

  const bool q_valid_for_target =
      q < (u64(1) << 20) && arith::prime_power_decomposition(q).has_value();
  const bool target_consistent =
      q_valid_for_target && h.order == spectra::l3_order(q) &&
      h.pattern == graph::degree_pattern(
                       spectra::prime_graph_from_mu(spectra::l3_mu(q)));
  tr.steps.push_back(Step{
      "target-consistency",
      "the hypothesis must equal the true order and degree pattern of the "
      "target class",
      {arith::to_string(h.order), pattern_to_string(h.pattern)},
      {},
      target_consistent ? "hypothesis matches the target invariants"
                        : "hypothesis differs from the target invariants",
      "direct computation"});

  if (target_present && target_survives && survivors.empty() &&
      target_consistent) {
    tr.verdict = Verdict::Confirmed;
    tr.steps.push_back(Step{
        "order-counting",
        "with the composition factor identified and |G| = |S|, the radical "
        "and the outer part are trivial, so G is isomorphic to S",
        {arith::to_string(h.order)},
        {},
        "G is isomorphic to " + catalog::label(canonical_target),
        "Lagrange"});
  } else {
    tr.verdict = Verdict::Inconclusive;
    if (!target_present)
      tr.notes.push_back("target class is not among the candidates");
    if (target_present && !target_survives)
      tr.notes.push_back("target class was eliminated by its own forced "
                         "edges");
    if (!survivors.empty()) {
      std::string list;
      for (const auto& sv : survivors) {
        if (!list.empty()) list += ", ";
        list += sv;
      }
      tr.notes.push_back("candidates not eliminated: " + list);
    }
    if (!target_consistent)
      tr.notes.push_back("hypothesis does not match the target invariants");
  }

  if (q == 81)
    tr.notes.push_back(
        "outer automorphism orders used for the candidates over the "
        "order-6561 and order-729 fields: |Out(U3(9))| = 4, "
        "|Out(L2(729))| = 12, |Out(G2(9))| = 4 "
        "(diagonal, field and graph parts)");
  return tr;
}

Transcript verify_od_characterization(u64 q) {
  return verify_hypothesis(l3_hypothesis(q), q);
}

bool recheck_side_conditions(const Transcript& tr) {
  const auto& h = tr.hypothesis;
  const auto gate = gate_alpha(h);
  if (!(gate == tr.gate)) return false;
  const auto ex = frobenius_exclusion(h);
  if (!(ex == tr.exclusions)) return false;
  if (route_for(h) != tr.route) return false;
  for (const auto& e : tr.candidates) {
    if (kernel_primes(h, e.candidate) != e.kernel) return false;
    const auto again = forced_edges(h, e.candidate, tr.route);
    if (again.size() != e.forced.size()) return false;
    for (std::size_t i = 0; i < again.size(); ++i) {
      if (again[i].r != e.forced[i].r || again[i].t != e.forced[i].t ||
          again[i].rule != e.forced[i].rule)
        return false;
      for (const auto& f : e.forced[i].facts)
        if (!f.recheck(h, e.candidate)) return false;
    }
    const bool feasible =
        graph::realization_feasible(h.pattern, forced_index_edges(h, e.forced));
    if (e.eliminated != !feasible) return false;
  }
  if (tr.verdict == Verdict::Confirmed) {
    if (!tr.gate.passed) return false;
    bool target_ok = false;
    for (const auto& e : tr.candidates) {
      if (e.is_target ? e.eliminated : !e.eliminated) return false;
      if (e.is_target) target_ok = true;
    }
    if (!target_ok) return false;
  }
  return true;
}

}  // namespace odchar::verifier
