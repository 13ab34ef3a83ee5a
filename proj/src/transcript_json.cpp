#include "odchar/jsonio.hpp"

#include <json.hpp>

#include "odchar/arith.hpp"

namespace odchar::jsonio {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json step_json(const verifier::Step& st) {
  ordered_json j;
  j["name"] = st.name;
  j["rule"] = st.rule;
  j["inputs"] = st.inputs;
  j["side_conditions"] = st.side_conditions;
  j["conclusion"] = st.conclusion;
  j["paper_ref"] = st.paper_ref;
  return j;
}

ordered_json elimination_json(const verifier::Elimination& e) {
  ordered_json j;
  j["label"] = e.label;
  j["order"] = arith::to_string(catalog::order_of(e.candidate));
  j["kernel_primes"] = e.kernel;
  ordered_json edges = ordered_json::array();
  for (const auto& fe : e.forced) {
    ordered_json ej;
    ej["r"] = fe.r;
    ej["t"] = fe.t;
    ej["rule"] = fe.rule;
    std::vector<std::string> conds;
    conds.reserve(fe.facts.size());
    for (const auto& f : fe.facts) conds.push_back(f.render());
    ej["side_conditions"] = conds;
    edges.push_back(std::move(ej));
  }
  j["forced_edges"] = std::move(edges);
  j["eliminated"] = e.eliminated;
  j["is_target"] = e.is_target;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace

std::string transcript_json(const verifier::Transcript& tr) {
  ordered_json j;
  j["q"] = tr.q;
  j["hypothesis"]["order"] = arith::to_string(tr.hypothesis.order);
  j["hypothesis"]["pattern"] = tr.hypothesis.pattern;
  ordered_json steps = ordered_json::array();
  for (const auto& st : tr.steps) steps.push_back(step_json(st));
  j["steps"] = std::move(steps);
  ordered_json cands = ordered_json::array();
  for (const auto& e : tr.candidates) cands.push_back(elimination_json(e));
  j["candidates"] = std::move(cands);
  j["verdict"] = verifier::to_string(tr.verdict);
  j["notes"] = tr.notes;
  return j.dump(2);
}

std::string candidates_json(const std::vector<catalog::SimpleGroupId>& ids) {
  ordered_json arr = ordered_json::array();
  for (const auto& id : ids) {
    ordered_json j;
    j["label"] = catalog::label(id);
    j["order"] = arith::to_string(catalog::order_of(id));
    j["out_order"] = arith::to_string(catalog::out_order(id));
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string graph_json(const graph::PrimeGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["degree_pattern"] = graph::degree_pattern(g);
  j["components"] = graph::components(g);
  return j.dump(2);
}

}  // namespace odchar::jsonio
