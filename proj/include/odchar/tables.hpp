#pragma once

#include <string>

namespace odchar::tables {

// Reference tables rendered as deterministic column-aligned text:
//   1  the twelve verified field sizes: order, spectrum, degree pattern
//   2  simple classes of order dividing |L3(49)|, with kernel primes
//   3  simple classes of order dividing |L3(67)|
//   4  simple classes of order dividing |L3(79)|
//   5  simple classes of order dividing |L3(81)| divisible by 73
// Throws std::invalid_argument for any other id.
std::string render_table(int id);

}  // namespace odchar::tables
