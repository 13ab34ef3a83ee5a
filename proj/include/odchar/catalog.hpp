#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "odchar/arith.hpp"

namespace odchar::catalog {

using arith::Factorization;
using arith::u128;
using arith::u64;

// Families of finite simple groups.  Lie-type tags follow the Dynkin-diagram
// naming; classical groups appear under their Lie names (A = linear,
// TwoA = unitary, B = odd-dimensional orthogonal, C = symplectic,
// D/TwoD = even-dimensional orthogonal of plus/minus type).
enum class Family {
  Alternating,
  A,
  B,
  C,
  D,
  TwoA,
  TwoD,
  G2,
  F4,
  E6,
  E7,
  E8,
  TwoE6,
  ThreeD4,
  TwoB2,
  TwoG2,
  TwoF4,
  Tits,
  Sporadic,
};

// Identifier of one finite simple group.
struct SimpleGroupId {
  Family family = Family::Sporadic;
  int n = 0;          // Lie rank, or the degree of an alternating group
  u64 q = 0;          // defining field size; 0 when not applicable
  int sporadic = -1;  // index into the sporadic table; -1 when not applicable

  friend bool operator==(const SimpleGroupId&, const SimpleGroupId&) = default;
  friend auto operator<=>(const SimpleGroupId&, const SimpleGroupId&) = default;
};

SimpleGroupId alternating(int n);
SimpleGroupId lie(Family family, int n, u64 q);
SimpleGroupId lie(Family family, u64 q);  // for the fixed-rank exceptional families
SimpleGroupId tits();
std::optional<SimpleGroupId> sporadic(const std::string& name);

// True when id names a simple group with its parameters inside the family's
// simplicity domain (degree >= 5 for alternating groups; prime-power q; the
// standard small exclusions such as L2(2), L2(3), U3(2), S4(2), G2(2),
// 2B2(2), 2G2(3) and 2F4(2), whose derived subgroup is the separate Tits
// entry).  Non-canonical names of simple groups (e.g. O5(q), O7(2^k)) are
// accepted; canonicalize folds them onto their representatives.
bool is_simple_group_name(const SimpleGroupId& id);

// Fixed representative of the isomorphism class under the exceptional
// isomorphisms A5 = L2(4) = L2(5), A6 = L2(9), A8 = L4(2), L3(2) = L2(7),
// U4(2) = S4(3), B2 = C2 and B_n(2^k) = C_n(2^k).  Lie-type names of lowest
// rank are preferred; alternating names survive only when no Lie-type name
// exists.  Idempotent.
SimpleGroupId canonicalize(const SimpleGroupId& id);

// Display label in compact classical notation: L4(2), U3(9), S4(7), O7(3),
// O8+(2), Sz(8), G2(9), A7, M24, 2F4(2)'.
std::string label(const SimpleGroupId& id);

// Exact group order, factored.  Throws std::invalid_argument outside the
// simplicity domain, and std::domain_error when an intermediate term of the
// order formula exceeds 128 bits (field sizes far beyond the search range).
Factorization order_of(const SimpleGroupId& id);

// Order of the outer automorphism group, factored, following the standard
// diagonal * field * graph convention (d*f*g).
Factorization out_order(const SimpleGroupId& id);

// order_of(id) * out_order(id) = |Aut(S)| for simple S.
Factorization aut_order(const SimpleGroupId& id);

// Group order as an integer, or nullopt when it exceeds 128 bits.
std::optional<u128> order_value(const SimpleGroupId& id);

// Every finite simple group (up to isomorphism, canonical representatives)
// whose order divides N, optionally restricted to groups whose order the
// given prime divides.  Sorted by order, then by label.  Completeness comes
// from the q-part of each Lie-type order: the defining field size must be a
// prime-power divisor of N, which bounds every family loop.  Throws
// std::invalid_argument for N < 60 and std::domain_error for N > 2^80 (the
// range over which the search bounds are validated).
std::vector<SimpleGroupId> enumerate_dividing(
    const Factorization& N, std::optional<u64> required_prime = std::nullopt);

// FNV-1a digest of the compiled-in sporadic-group table (names, orders,
// outer orders); tests pin it so silent edits of the constants are caught.
u64 sporadic_table_checksum();

}  // namespace odchar::catalog
