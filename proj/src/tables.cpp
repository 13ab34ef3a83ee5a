#include "odchar/tables.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "odchar/arith.hpp"
#include "odchar/catalog.hpp"
#include "odchar/spectra.hpp"
#include "odchar/verifier.hpp"

namespace odchar::tables {

namespace {

using Row = std::vector<std::string>;

std::string render_columns(const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  auto emit = [&](const Row& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size())
        os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  };
  emit(header);
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c)
    total += width[c] + (c + 1 < width.size() ? 2 : 0);
  os << std::string(total, '-') << '\n';
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string pattern_text(const graph::DegreePattern& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

std::string primes_text(const std::vector<arith::u64>& ps) {
  if (ps.empty()) return "-";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ',';
    os << ps[i];
  }
  os << '}';
  return os.str();
}

std::string invariants_table() {
  std::vector<Row> rows;
  for (arith::u64 q : verifier::default_targets()) {
    const auto order = spectra::l3_order(q);
    const auto mu = spectra::l3_mu(q);
    const auto pattern =
        graph::degree_pattern(spectra::prime_graph_from_mu(mu));
    std::ostringstream ms;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (i) ms << ", ";
      ms << arith::to_string(mu[i]);
    }
    rows.push_back(Row{arith::to_string(arith::u128(q)),
                       arith::to_string(order), ms.str(),
                       pattern_text(pattern)});
  }
  return render_columns(Row{"q", "|L3(q)|", "spectrum", "degree pattern"},
                        rows);
}

std::string candidate_table(arith::u64 q, std::optional<arith::u64> required,
                            bool kernel_column) {
  const auto order = spectra::l3_order(q);
  const auto classes = catalog::enumerate_dividing(order, required);
  const auto h = verifier::l3_hypothesis(q);
  std::vector<Row> rows;
  for (const auto& s : classes) {
    Row row{catalog::label(s), arith::to_string(catalog::order_of(s)),
            arith::to_string(catalog::out_order(s).value())};
    if (kernel_column) row.push_back(primes_text(verifier::kernel_primes(h, s)));
    rows.push_back(std::move(row));
  }
  Row header{"S", "|S|", "|Out(S)|"};
  if (kernel_column) header.push_back("kernel primes");
  return render_columns(header, rows);
}

}  // namespace

std::string render_table(int id) {
  switch (id) {
    case 1:
      return invariants_table();
    case 2:
      return candidate_table(49, std::nullopt, true);
    case 3:
      return candidate_table(67, std::nullopt, false);
    case 4:
      return candidate_table(79, std::nullopt, false);
    case 5:
      return candidate_table(81, 73, false);
    default:
      throw std::invalid_argument("render_table: id must be 1..5");
  }
}

}  // namespace odchar::tables
