// Command-line front end of the verification engine.
//
//   odchar verify --q 49 [--json]     verify one hypothesis
//   odchar verify --all [--json]      verify the whole built-in target list
//   odchar mu --q 11                  order and maximal element orders
//   odchar graph --q 49 [--dot|--json]
//   odchar candidates --order 20160 [--require-prime 7] [--json]
//   odchar table --id 1..5            reference tables
//
// Exit codes: 0 success (verify: every verdict Confirmed), 1 at least one
// Inconclusive verdict, 2 usage or input error.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "odchar/arith.hpp"
#include "odchar/catalog.hpp"
#include "odchar/graph.hpp"
#include "odchar/jsonio.hpp"
#include "odchar/spectra.hpp"
#include "odchar/tables.hpp"
#include "odchar/verifier.hpp"

namespace {

using odchar::arith::Factorization;
using odchar::arith::u64;
namespace arith = odchar::arith;
namespace catalog = odchar::catalog;
namespace graph = odchar::graph;
namespace jsonio = odchar::jsonio;
namespace spectra = odchar::spectra;
namespace tables = odchar::tables;
namespace verifier = odchar::verifier;

bool valid_q(u64 q) {
  return q >= 2 && q < 100 && arith::prime_power_decomposition(q).has_value();
}

int reject_q(u64 q) {
  std::cerr << "error: q = " << q
            << " is not a prime power with 2 <= q < 100\n";
  return 2;
}

std::string pattern_text(const graph::DegreePattern& pattern) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) os << ',';
    os << pattern[i];
  }
  os << ')';
  return os.str();
}

// How many worker threads `verify --all` may use; ODCHAR_THREADS overrides
// the hardware default, and the job count caps both.
unsigned thread_budget(std::size_t jobs) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("ODCHAR_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      threads = static_cast<unsigned>(std::min<long>(v, 64));
    }
  }
  return std::max<unsigned>(1, std::min<std::size_t>(threads, jobs));
}

std::vector<verifier::Transcript> verify_many(const std::vector<u64>& qs) {
  std::vector<std::optional<verifier::Transcript>> slots(qs.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= qs.size()) return;
      try {
        slots[i] = verifier::verify_od_characterization(qs[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const unsigned threads = thread_budget(qs.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<verifier::Transcript> out;
  out.reserve(qs.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

std::string summary_line(const verifier::Transcript& tr) {
  std::size_t eliminated = 0;
  for (const auto& cand : tr.candidates) {
    if (cand.eliminated) ++eliminated;
  }
  std::ostringstream os;
  os << "q=" << tr.q << ": " << verifier::to_string(tr.verdict) << " (route "
     << (tr.route == verifier::Route::Nilpotent ? "nilpotent" : "solvable")
     << ", " << tr.candidates.size() << " candidates, " << eliminated
     << " eliminated)";
  return os.str();
}

int run_verify(std::optional<u64> q, bool all, bool json) {
  std::vector<u64> qs;
  if (all) {
    qs = verifier::default_targets();
  } else if (q) {
    if (!valid_q(*q)) return reject_q(*q);
    qs.push_back(*q);
  } else {
    std::cerr << "error: verify needs --q N or --all\n";
    return 2;
  }

  const auto transcripts = verify_many(qs);

  if (json) {
    if (transcripts.size() == 1) {
      std::cout << jsonio::transcript_json(transcripts.front()) << "\n";
    } else {
      auto array = nlohmann::ordered_json::array();
      for (const auto& tr : transcripts) {
        array.push_back(nlohmann::ordered_json::parse(jsonio::transcript_json(tr)));
      }
      std::cout << array.dump(2) << "\n";
    }
  } else {
    for (const auto& tr : transcripts) {
      std::cout << summary_line(tr) << "\n";
      if (tr.verdict != verifier::Verdict::Confirmed) {
        for (const auto& note : tr.notes) std::cout << "  note: " << note << "\n";
      }
    }
  }

  const bool all_confirmed =
      std::all_of(transcripts.begin(), transcripts.end(), [](const auto& tr) {
        return tr.verdict == verifier::Verdict::Confirmed;
      });
  return all_confirmed ? 0 : 1;
}

int run_mu(u64 q) {
  if (!valid_q(q)) return reject_q(q);
  std::cout << "|L3(" << q << ")| = " << arith::to_string(spectra::l3_order(q))
            << "\n";
  std::cout << "maximal element orders of L3(" << q << "):\n";
  for (u64 m : spectra::l3_mu(q)) {
    std::cout << "  " << m << " = " << arith::to_string(arith::factorize(m))
              << "\n";
  }
  return 0;
}

int run_graph(u64 q, bool dot, bool json) {
  if (!valid_q(q)) return reject_q(q);
  const auto g = spectra::prime_graph_from_mu(spectra::l3_mu(q));

  if (json) {
    std::cout << jsonio::graph_json(g) << "\n";
    return 0;
  }
  if (dot) {
    std::cout << "graph L3_" << q << "_prime_graph {\n";
    for (u64 v : g.vertices) std::cout << "  " << v << ";\n";
    for (const auto& [a, b] : g.edges) {
      std::cout << "  " << a << " -- " << b << ";\n";
    }
    std::cout << "}\n";
    return 0;
  }

  std::cout << "prime graph of L3(" << q << ")\n";
  std::cout << "vertices:";
  for (u64 v : g.vertices) std::cout << ' ' << v;
  std::cout << "\nedges:";
  for (const auto& [a, b] : g.edges) std::cout << ' ' << a << '-' << b;
  std::cout << "\ndegree pattern: " << pattern_text(graph::degree_pattern(g));

  const auto comps = graph::components(g);
  const auto order = spectra::l3_order(q);
  std::cout << "\ncomponents:";
  for (const auto& comp : comps) {
    std::cout << " {";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) std::cout << ',';
      std::cout << comp[i];
    }
    std::cout << '}';
  }
  std::cout << "\norder components:";
  for (std::size_t c = 0; c < comps.size(); ++c) {
    Factorization part;
    for (const auto& pp : order.factors) {
      if (std::find(comps[c].begin(), comps[c].end(), pp.prime) !=
          comps[c].end()) {
        part.factors.push_back(pp);
      }
    }
    std::cout << (c ? " | " : " ") << arith::to_string(part);
  }
  std::cout << "\n";
  return 0;
}

int run_candidates(const std::string& order_text, std::optional<u64> required,
                   bool json) {
  Factorization N;
  if (order_text.find('^') != std::string::npos ||
      order_text.find('*') != std::string::npos) {
    auto parsed = arith::parse_factored(order_text);
    if (!parsed) {
      std::cerr << "error: cannot parse factored order '" << order_text
                << "'\n";
      return 2;
    }
    N = *parsed;
  } else {
    auto value = arith::parse_u128(order_text);
    if (!value || *value == 0) {
      std::cerr << "error: cannot parse order '" << order_text << "'\n";
      return 2;
    }
    N = arith::factorize(*value);
  }

  std::vector<catalog::SimpleGroupId> ids;
  try {
    ids = catalog::enumerate_dividing(N, required);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (json) {
    std::cout << jsonio::candidates_json(ids) << "\n";
    return 0;
  }

  std::cout << ids.size() << " simple group" << (ids.size() == 1 ? "" : "s")
            << " with order dividing " << arith::to_string(N);
  if (required) std::cout << " and order divisible by " << *required;
  std::cout << "\n";

  std::vector<std::array<std::string, 3>> rows;
  std::array<std::size_t, 3> width = {1, 3, 8};
  for (const auto& id : ids) {
    rows.push_back({catalog::label(id), arith::to_string(catalog::order_of(id)),
                    arith::to_string(catalog::out_order(id).value())});
    for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], rows.back()[c].size());
  }
  for (const auto& row : rows) {
    std::ostringstream os;
    for (int c = 0; c < 3; ++c) {
      if (c) os << "  ";
      os << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    std::string line = os.str();
    line.erase(line.find_last_not_of(' ') + 1);
    std::cout << line << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification engine: recognition of the simple groups L3(q), q < 100, "
      "by group order and prime-graph degree pattern"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the full verification pipeline and report a verdict");
  u64 verify_q = 0;
  bool verify_all = false, verify_json = false;
  auto* opt_q =
      verify_cmd->add_option("--q", verify_q, "field size, a prime power below 100");
  auto* opt_all = verify_cmd->add_flag("--all", verify_all,
                                       "verify every built-in target field size");
  verify_cmd->add_flag("--json", verify_json, "emit the transcript(s) as JSON");
  opt_q->excludes(opt_all);
  opt_all->excludes(opt_q);

  auto* mu_cmd = app.add_subcommand(
      "mu", "Print the group order and the maximal element orders of L3(q)");
  u64 mu_q = 0;
  mu_cmd->add_option("--q", mu_q, "field size, a prime power below 100")
      ->required();

  auto* graph_cmd =
      app.add_subcommand("graph", "Print the prime graph of L3(q)");
  u64 graph_q = 0;
  bool graph_dot = false, graph_json = false;
  graph_cmd->add_option("--q", graph_q, "field size, a prime power below 100")
      ->required();
  auto* opt_dot = graph_cmd->add_flag("--dot", graph_dot, "Graphviz DOT output");
  auto* opt_gjson = graph_cmd->add_flag("--json", graph_json, "JSON output");
  opt_dot->excludes(opt_gjson);
  opt_gjson->excludes(opt_dot);

  auto* cand_cmd = app.add_subcommand(
      "candidates", "List the simple groups whose order divides a given order");
  std::string cand_order;
  u64 cand_prime = 0;
  bool cand_json = false;
  cand_cmd
      ->add_option("--order", cand_order,
                   "target order, decimal (20160) or factored (2^6*3^2*5*7)")
      ->required();
  auto* opt_req = cand_cmd->add_option(
      "--require-prime", cand_prime, "keep only groups whose order this prime divides");
  cand_cmd->add_flag("--json", cand_json, "JSON output");

  auto* table_cmd =
      app.add_subcommand("table", "Print one of the built-in reference tables");
  int table_id = 0;
  table_cmd
      ->add_option("--id", table_id,
                   "1 = all-target invariants, 2 = q=49 candidates with kernel "
                   "primes, 3 = q=67 candidates, 4 = q=79 candidates, "
                   "5 = q=81 candidates through the prime 73")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify_cmd)) {
      return run_verify(opt_q->count() ? std::optional<u64>(verify_q) : std::nullopt,
                        verify_all, verify_json);
    }
    if (app.got_subcommand(mu_cmd)) return run_mu(mu_q);
    if (app.got_subcommand(graph_cmd)) return run_graph(graph_q, graph_dot, graph_json);
    if (app.got_subcommand(cand_cmd)) {
      return run_candidates(cand_order,
                            opt_req->count() ? std::optional<u64>(cand_prime)
                                             : std::nullopt,
                            cand_json);
    }
    if (app.got_subcommand(table_cmd)) {
      try {
        std::cout << tables::render_table(table_id);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
