#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace odchar::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// One prime-power entry of a factored integer.
struct PrimePower {
  u64 prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

// A positive integer kept in fully factored form: entries sorted by strictly
// ascending prime, every exponent >= 1.  The empty list represents 1.
struct Factorization {
  std::vector<PrimePower> factors;

  // Multiplies the factorization back out.  Throws std::overflow_error if the
  // product exceeds 128 bits; value_checked returns nullopt instead.
  u128 value() const;
  std::optional<u128> value_checked() const;

  // Exponent of p, 0 when p is absent.
  int exponent_of(u64 p) const;

  // Componentwise exponent comparison.
  bool divides(const Factorization& other) const;

  // Merges another factored integer into this one (multiplication).
  Factorization& multiply(const Factorization& other);

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic Miller-Rabin for any 64-bit input.
bool is_prime(u64 n);

// Miller-Rabin with the first 13 prime bases: deterministic for all inputs
// below 3.3 * 10^24 (~2^81), which covers everything this project computes;
// above that bound no counterexample to this witness set is known.
bool is_prime_u128(u128 n);

// Prime factorization: trial division by every prime below 10^6, then
// Miller-Rabin plus Pollard-Brent splitting for any surviving cofactor.
// Throws std::invalid_argument on n = 0.
Factorization factorize(u128 n);

// Largest power of p dividing n (p^0 = 1 when p is absent).  Throws when p is
// not prime.
u128 p_part(const Factorization& n, u64 p);

// Least k >= 1 with a^k = 1 (mod m), for m >= 2.  Throws when gcd(a,m) != 1.
u64 multiplicative_order(u64 a, u64 m);

u128 gcd(u128 a, u128 b);

// (a * b) mod m and (base^exp) mod m without overflow for any 128-bit m.
u128 mulmod(u128 a, u128 b, u128 m);
u128 powmod(u128 base, u128 exp, u128 m);

// base^exp; the caller guarantees the result fits in 128 bits.
u128 pow_u128(u128 base, int exp);

// Decomposes q = p^k with p prime, k >= 1; nullopt when q is not a prime
// power (including q < 2).
std::optional<std::pair<u64, int>> prime_power_decomposition(u64 q);

// ASCII factored form "2^4*3*5^2*7*11^3*19"; the empty product renders as "1".
std::string to_string(const Factorization& f);
std::string to_string(u128 n);

// Parses the factored grammar above.  Primes must be genuine primes in
// strictly ascending order with exponents >= 1; anything else yields nullopt.
std::optional<Factorization> parse_factored(const std::string& text);

// Plain decimal parse; nullopt on empty input, stray characters or overflow.
std::optional<u128> parse_u128(const std::string& text);

}  // namespace odchar::arith
