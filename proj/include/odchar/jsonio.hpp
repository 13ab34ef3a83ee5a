#pragma once

#include <string>
#include <vector>

#include "odchar/catalog.hpp"
#include "odchar/graph.hpp"
#include "odchar/verifier.hpp"

namespace odchar::jsonio {

// Verification transcript as a JSON document with stable key order:
// q, hypothesis {order, pattern}, steps [{name, rule, inputs,
// side_conditions, conclusion, paper_ref}], candidates, verdict, notes.
std::string transcript_json(const verifier::Transcript& tr);

// Catalog entries as a JSON array of {label, order, out_order}.
std::string candidates_json(const std::vector<catalog::SimpleGroupId>& ids);

// Prime graph as {vertices, edges, degree_pattern, components}.
std::string graph_json(const graph::PrimeGraph& g);

}  // namespace odchar::jsonio
