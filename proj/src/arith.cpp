#include "odchar/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace odchar::arith {
namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Primes below 10^6, built once on first use.
const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<u64> out;
    for (u64 i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong-probable-prime test to base a; n odd, n > 2, with n-1 = d * 2^s.
bool strong_probable_prime(u128 n, u128 a, u128 d, int s) {
  a %= n;
  if (a == 0) return true;
  u128 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin(u128 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

// Pollard-Brent cycle finding; returns a nontrivial factor of composite n.
u128 pollard_brent(u128 n) {
  if (n % 2 == 0) return 2;
  for (u128 c = 1;; ++c) {
    auto step = [&](u128 x) { return (mulmod(x, x, n) + c) % n; };
    u128 x = 2, y = 2, d = 1;
    do {
      x = step(x);
      y = step(step(y));
      u128 diff = x > y ? x - y : y - x;
      d = gcd(diff, n);
    } while (d == 1);
    if (d != n) return d;
  }
}

void factor_recursive(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime_u128(n)) {
    out.push_back(n);
    return;
  }
  u128 d = pollard_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace

std::optional<u128> Factorization::value_checked() const {
  constexpr u128 kMax = ~static_cast<u128>(0);
  u128 v = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) {
      if (v > kMax / p) return std::nullopt;
      v *= p;
    }
  }
  return v;
}

u128 Factorization::value() const {
  auto v = value_checked();
  if (!v) throw std::overflow_error("Factorization::value: exceeds 128 bits");
  return *v;
}

int Factorization::exponent_of(u64 p) const {
  for (const auto& f : factors) {
    if (f.prime == p) return f.exponent;
    if (f.prime > p) break;
  }
  return 0;
}

bool Factorization::divides(const Factorization& other) const {
  for (const auto& f : factors) {
    if (f.exponent > other.exponent_of(f.prime)) return false;
  }
  return true;
}

Factorization& Factorization::multiply(const Factorization& other) {
  std::vector<PrimePower> merged;
  merged.reserve(factors.size() + other.factors.size());
  auto a = factors.cbegin();
  auto b = other.factors.cbegin();
  while (a != factors.cend() || b != other.factors.cend()) {
    if (b == other.factors.cend() || (a != factors.cend() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == factors.cend() || a->prime > b->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  factors = std::move(merged);
  return *this;
}

bool is_prime(u64 n) { return miller_rabin(n); }

bool is_prime_u128(u128 n) { return miller_rabin(n); }

Factorization factorize(u128 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  for (u64 p : small_primes()) {
    if (n == 1) break;
    if ((u128)p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  }
  if (n > 1) {
    // Every remaining prime factor exceeds 10^6 unless the loop broke at
    // p*p > n, in which case n itself is prime.
    if (n < (u128)kTrialLimit * kTrialLimit) {
      result.factors.push_back({(u64)n, 1});
    } else {
      std::vector<u128> big;
      factor_recursive(n, big);
      std::sort(big.begin(), big.end());
      for (size_t i = 0; i < big.size();) {
        size_t j = i;
        while (j < big.size() && big[j] == big[i]) ++j;
        if (big[i] > UINT64_MAX)
          throw std::domain_error("factorize: prime factor exceeds 64 bits");
        result.factors.push_back({(u64)big[i], (int)(j - i)});
        i = j;
      }
    }
  }
  std::sort(result.factors.begin(), result.factors.end());
  return result;
}

u128 p_part(const Factorization& n, u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("p_part: p must be prime");
  return pow_u128(p, n.exponent_of(p));
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("multiplicative_order: m must be >= 2");
  a %= m;
  if (gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a,m) != 1");
  // phi(m) from the factorization of m; the order divides phi(m), so testing
  // the divisors of phi in ascending order finds the least exponent.
  Factorization mf = factorize(m);
  u64 phi = 1;
  for (const auto& [p, e] : mf.factors) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  std::vector<u64> divisors{1};
  for (const auto& [p, e] : factorize(phi).factors) {
    size_t count = divisors.size();
    u64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pe);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  for (u64 k : divisors) {
    if (powmod(a, k, m) == 1) return k;
  }
  throw std::logic_error("multiplicative_order: no exponent found");
}

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 mulmod(u128 a, u128 b, u128 m) {
  a %= m;
  b %= m;
  // Fast path: the product itself fits in 128 bits.
  if (a <= UINT64_MAX && b <= UINT64_MAX) return a * b % m;
  // Double-and-add, safe because m < 2^127 leaves headroom for one addition.
  u128 result = 0;
  while (b > 0) {
    if (b & 1) {
      result += a;
      if (result >= m) result -= m;
    }
    a <<= 1;
    if (a >= m) a -= m;
    b >>= 1;
  }
  return result;
}

u128 powmod(u128 base, u128 exp, u128 m) {
  u128 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u128 pow_u128(u128 base, int exp) {
  u128 result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

std::optional<std::pair<u64, int>> prime_power_decomposition(u64 q) {
  if (q < 2) return std::nullopt;
  Factorization f = factorize(q);
  if (f.factors.size() != 1) return std::nullopt;
  return std::make_pair(f.factors[0].prime, f.factors[0].exponent);
}

std::string to_string(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : f.factors) {
    if (!out.empty()) out += '*';
    out += to_string((u128)p);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(u128 n) {
  if (n == 0) return "0";
  std::string out;
  while (n > 0) {
    out += char('0' + (int)(n % 10));
    n /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Factorization> parse_factored(const std::string& text) {
  if (text == "1") return Factorization{};
  Factorization result;
  u64 last_prime = 0;
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) return std::nullopt;
    auto prime = parse_u128(text.substr(start, i - start));
    if (!prime || *prime > UINT64_MAX) return std::nullopt;
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) return std::nullopt;
      auto e = parse_u128(text.substr(start, i - start));
      if (!e || *e == 0 || *e > 127) return std::nullopt;
      exponent = (int)*e;
    }
    if (i < text.size()) {
      if (text[i] != '*') return std::nullopt;
      ++i;
      if (i == text.size()) return std::nullopt;  // trailing '*'
    }
    u64 p = (u64)*prime;
    if (p <= last_prime || !is_prime(p)) return std::nullopt;
    last_prime = p;
    result.factors.push_back({p, exponent});
  }
  if (result.factors.empty()) return std::nullopt;
  return result;
}

std::optional<u128> parse_u128(const std::string& text) {
  if (text.empty()) return std::nullopt;
  u128 value = 0;
  constexpr u128 kMax = ~(u128)0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    int digit = c - '0';
    if (value > (kMax - digit) / 10) return std::nullopt;
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace odchar::arith
