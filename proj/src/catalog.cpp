#include "odchar/catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace odchar::catalog {

namespace {

constexpr u128 kU128Max = ~static_cast<u128>(0);

std::optional<u128> checked_mul(u128 a, u128 b) {
  if (a != 0 && b > kU128Max / a) return std::nullopt;
  return a * b;
}

std::optional<u128> checked_pow(u128 base, int exp) {
  u128 v = 1;
  for (int i = 0; i < exp; ++i) {
    auto m = checked_mul(v, base);
    if (!m) return std::nullopt;
    v = *m;
  }
  return v;
}

// --- sporadic groups ------------------------------------------------------

struct SporadicInfo {
  const char* name;
  const char* order;  // factored, ascending primes
  int out;
};

// The 26 sporadic groups in ascending order of group order.
constexpr SporadicInfo kSporadics[] = {
    {"M11", "2^4*3^2*5*11", 1},
    {"M12", "2^6*3^3*5*11", 2},
    {"J1", "2^3*3*5*7*11*19", 1},
    {"M22", "2^7*3^2*5*7*11", 2},
    {"J2", "2^7*3^3*5^2*7", 2},
    {"M23", "2^7*3^2*5*7*11*23", 1},
    {"HS", "2^9*3^2*5^3*7*11", 2},
    {"J3", "2^7*3^5*5*17*19", 2},
    {"M24", "2^10*3^3*5*7*11*23", 1},
    {"McL", "2^7*3^6*5^3*7*11", 2},
    {"He", "2^10*3^3*5^2*7^3*17", 2},
    {"Ru", "2^14*3^3*5^3*7*13*29", 1},
    {"Suz", "2^13*3^7*5^2*7*11*13", 2},
    {"ON", "2^9*3^4*5*7^3*11*19*31", 2},
    {"Co3", "2^10*3^7*5^3*7*11*23", 1},
    {"Co2", "2^18*3^6*5^3*7*11*23", 1},
    {"Fi22", "2^17*3^9*5^2*7*11*13", 2},
    {"HN", "2^14*3^6*5^6*7*11*19", 2},
    {"Ly", "2^8*3^7*5^6*7*11*31*37*67", 1},
    {"Th", "2^15*3^10*5^3*7^2*13*19*31", 1},
    {"Fi23", "2^18*3^13*5^2*7*11*13*17*23", 1},
    {"Co1", "2^21*3^9*5^4*7^2*11*13*23", 1},
    {"J4", "2^21*3^3*5*7*11^3*23*29*31*37*43", 1},
    {"Fi24'", "2^21*3^16*5^2*7^3*11*13*17*23*29", 2},
    {"B", "2^41*3^13*5^6*7^2*11*13*17*19*23*31*47", 1},
    {"M", "2^46*3^20*5^9*7^6*11^2*13^3*17*19*23*29*31*41*47*59*71", 1},
};
constexpr int kSporadicCount = static_cast<int>(std::size(kSporadics));

const Factorization& sporadic_order(int i) {
  static const std::vector<Factorization> orders = [] {
    std::vector<Factorization> v;
    v.reserve(kSporadicCount);
    for (const auto& s : kSporadics) {
      auto f = arith::parse_factored(s.order);
      if (!f) throw std::logic_error("bad sporadic order constant");
      v.push_back(*f);
    }
    return v;
  }();
  return orders.at(i);
}

// --- Lie-type order shapes ------------------------------------------------

// Order = q^qexp * (product of term values) / d, with every term coprime
// to the defining characteristic and d dividing at least one term.
struct LieShape {
  int qexp = 0;
  u64 d = 1;
  std::vector<u128> terms;  // empty when some term exceeds 128 bits
  bool overflow = false;
};

// q^i + sign, or nullopt on overflow.
std::optional<u128> pm_term(u64 q, int i, int sign) {
  auto p = checked_pow(q, i);
  if (!p) return std::nullopt;
  if (sign > 0) {
    if (*p == kU128Max) return std::nullopt;
    return *p + 1;
  }
  return *p - 1;
}

u64 gcd64(u64 a, u64 b) { return static_cast<u64>(arith::gcd(a, b)); }

// gcd(4, q^n - 1) and gcd(4, q^n + 1) via modular arithmetic.
u64 gcd4_pow(u64 q, int n, int sign) {
  u64 r = static_cast<u64>(arith::powmod(q % 4, static_cast<u64>(n), 4));
  r = (r + 4 + static_cast<u64>(sign)) % 4;
  return gcd64(4, r == 0 ? 4 : r);
}

LieShape lie_shape(Family f, int n, u64 q) {
  LieShape s;
  std::vector<std::pair<int, int>> pm;  // (exponent, sign)
  switch (f) {
    case Family::A:
      s.qexp = n * (n + 1) / 2;
      s.d = gcd64(static_cast<u64>(n) + 1, q - 1);
      for (int i = 2; i <= n + 1; ++i) pm.push_back({i, -1});
      break;
    case Family::TwoA:
      s.qexp = n * (n + 1) / 2;
      s.d = gcd64(static_cast<u64>(n) + 1, q + 1);
      for (int i = 2; i <= n + 1; ++i) pm.push_back({i, i % 2 == 0 ? -1 : +1});
      break;
    case Family::B:
    case Family::C:
      s.qexp = n * n;
      s.d = gcd64(2, q - 1);
      for (int i = 1; i <= n; ++i) pm.push_back({2 * i, -1});
      break;
    case Family::D:
      s.qexp = n * (n - 1);
      s.d = gcd4_pow(q, n, -1);
      pm.push_back({n, -1});
      for (int i = 1; i <= n - 1; ++i) pm.push_back({2 * i, -1});
      break;
    case Family::TwoD:
      s.qexp = n * (n - 1);
      s.d = gcd4_pow(q, n, +1);
      pm.push_back({n, +1});
      for (int i = 1; i <= n - 1; ++i) pm.push_back({2 * i, -1});
      break;
    case Family::G2:
      s.qexp = 6;
      pm = {{6, -1}, {2, -1}};
      break;
    case Family::F4:
      s.qexp = 24;
      pm = {{12, -1}, {8, -1}, {6, -1}, {2, -1}};
      break;
    case Family::E6:
      s.qexp = 36;
      s.d = gcd64(3, q - 1);
      pm = {{12, -1}, {9, -1}, {8, -1}, {6, -1}, {5, -1}, {2, -1}};
      break;
    case Family::E7:
      s.qexp = 63;
      s.d = gcd64(2, q - 1);
      pm = {{18, -1}, {14, -1}, {12, -1}, {10, -1}, {8, -1}, {6, -1}, {2, -1}};
      break;
    case Family::E8:
      s.qexp = 120;
      pm = {{30, -1}, {24, -1}, {20, -1}, {18, -1},
            {14, -1}, {12, -1}, {8, -1},  {2, -1}};
      break;
    case Family::TwoE6:
      s.qexp = 36;
      s.d = gcd64(3, q + 1);
      pm = {{12, -1}, {9, +1}, {8, -1}, {6, -1}, {5, +1}, {2, -1}};
      break;
    case Family::ThreeD4: {
      s.qexp = 12;
      // q^8 + q^4 + 1 plus the two ordinary terms.
      auto q4 = checked_pow(q, 4);
      auto q8 = q4 ? checked_mul(*q4, *q4) : std::nullopt;
      if (!q8 || *q8 > kU128Max - *q4 - 1) {
        s.overflow = true;
        return s;
      }
      s.terms.push_back(*q8 + *q4 + 1);
      pm = {{6, -1}, {2, -1}};
      break;
    }
    case Family::TwoB2:
      s.qexp = 2;
      pm = {{2, +1}, {1, -1}};
      break;
    case Family::TwoG2:
      s.qexp = 3;
      pm = {{3, +1}, {1, -1}};
      break;
    case Family::TwoF4:
      s.qexp = 12;
      pm = {{6, +1}, {4, -1}, {3, +1}, {1, -1}};
      break;
    default:
      throw std::logic_error("lie_shape: not a Lie family");
  }
  for (auto [i, sign] : pm) {
    auto t = pm_term(q, i, sign);
    if (!t) {
      s.overflow = true;
      s.terms.clear();
      return s;
    }
    s.terms.push_back(*t);
  }
  // Fold the diagonal divisor into the first term it divides.
  if (s.d > 1) {
    for (auto& t : s.terms) {
      if (t % s.d == 0) {
        t /= s.d;
        return s;
      }
    }
    throw std::logic_error("lie_shape: diagonal divisor divides no term");
  }
  return s;
}

void require_simple_name(const SimpleGroupId& id) {
  if (!is_simple_group_name(id)) {
    throw std::invalid_argument("not a finite simple group: " + label(id));
  }
}

bool is_odd_char_power(u64 q, u64 p) {
  auto d = arith::prime_power_decomposition(q);
  return d && d->first == p && d->second % 2 == 1 && d->second >= 3;
}

}  // namespace

SimpleGroupId alternating(int n) { return {Family::Alternating, n, 0, -1}; }

SimpleGroupId lie(Family family, int n, u64 q) { return {family, n, q, -1}; }

SimpleGroupId lie(Family family, u64 q) { return {family, 0, q, -1}; }

SimpleGroupId tits() { return {Family::Tits, 0, 0, -1}; }

std::optional<SimpleGroupId> sporadic(const std::string& name) {
  for (int i = 0; i < kSporadicCount; ++i) {
    if (name == kSporadics[i].name) return SimpleGroupId{Family::Sporadic, 0, 0, i};
  }
  return std::nullopt;
}

bool is_simple_group_name(const SimpleGroupId& id) {
  const bool lie_fields = id.sporadic == -1;
  auto pp = arith::prime_power_decomposition(id.q);
  switch (id.family) {
    case Family::Alternating:
      return id.n >= 5 && id.q == 0 && lie_fields;
    case Family::A:
      return lie_fields && pp && id.n >= 1 && !(id.n == 1 && id.q <= 3);
    case Family::TwoA:
      return lie_fields && pp && id.n >= 2 && !(id.n == 2 && id.q == 2);
    case Family::B:
      return lie_fields && pp && id.n >= 2 && !(id.n == 2 && id.q == 2);
    case Family::C:
      return lie_fields && pp && id.n >= 2 && !(id.n == 2 && id.q == 2);
    case Family::D:
    case Family::TwoD:
      return lie_fields && pp && id.n >= 4;
    case Family::G2:
      return lie_fields && pp && id.n == 0 && id.q >= 3;
    case Family::F4:
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::TwoE6:
    case Family::ThreeD4:
      return lie_fields && pp && id.n == 0 && id.q >= 2;
    case Family::TwoB2:
      return lie_fields && id.n == 0 && is_odd_char_power(id.q, 2);
    case Family::TwoG2:
      return lie_fields && id.n == 0 && is_odd_char_power(id.q, 3);
    case Family::TwoF4:
      return lie_fields && id.n == 0 && is_odd_char_power(id.q, 2);
    case Family::Tits:
      return id.n == 0 && id.q == 0 && lie_fields;
    case Family::Sporadic:
      return id.n == 0 && id.q == 0 && id.sporadic >= 0 &&
             id.sporadic < kSporadicCount;
  }
  return false;
}

SimpleGroupId canonicalize(const SimpleGroupId& id) {
  require_simple_name(id);
  switch (id.family) {
    case Family::Alternating:
      if (id.n == 5) return lie(Family::A, 1, 4);
      if (id.n == 6) return lie(Family::A, 1, 9);
      if (id.n == 8) return lie(Family::A, 3, 2);
      return id;
    case Family::A:
      if (id.n == 1 && id.q == 5) return lie(Family::A, 1, 4);
      if (id.n == 2 && id.q == 2) return lie(Family::A, 1, 7);
      return id;
    case Family::TwoA:
      if (id.n == 3 && id.q == 2) return lie(Family::C, 2, 3);
      return id;
    case Family::B:
      if (id.n == 2 || id.q % 2 == 0) return lie(Family::C, id.n, id.q);
      return id;
    default:
      return id;
  }
}

std::string label(const SimpleGroupId& id) {
  std::ostringstream os;
  auto qs = [&] { return arith::to_string(static_cast<u128>(id.q)); };
  switch (id.family) {
    case Family::Alternating: os << "A" << id.n; break;
    case Family::A: os << "L" << id.n + 1 << "(" << qs() << ")"; break;
    case Family::TwoA: os << "U" << id.n + 1 << "(" << qs() << ")"; break;
    case Family::B: os << "O" << 2 * id.n + 1 << "(" << qs() << ")"; break;
    case Family::C: os << "S" << 2 * id.n << "(" << qs() << ")"; break;
    case Family::D: os << "O" << 2 * id.n << "+(" << qs() << ")"; break;
    case Family::TwoD: os << "O" << 2 * id.n << "-(" << qs() << ")"; break;
    case Family::G2: os << "G2(" << qs() << ")"; break;
    case Family::F4: os << "F4(" << qs() << ")"; break;
    case Family::E6: os << "E6(" << qs() << ")"; break;
    case Family::E7: os << "E7(" << qs() << ")"; break;
    case Family::E8: os << "E8(" << qs() << ")"; break;
    case Family::TwoE6: os << "2E6(" << qs() << ")"; break;
    case Family::ThreeD4: os << "3D4(" << qs() << ")"; break;
    case Family::TwoB2: os << "Sz(" << qs() << ")"; break;
    case Family::TwoG2: os << "2G2(" << qs() << ")"; break;
    case Family::TwoF4: os << "2F4(" << qs() << ")"; break;
    case Family::Tits: os << "2F4(2)'"; break;
    case Family::Sporadic:
      if (id.sporadic >= 0 && id.sporadic < kSporadicCount) {
        os << kSporadics[id.sporadic].name;
      } else {
        os << "Sporadic(" << id.sporadic << ")";
      }
      break;
  }
  return os.str();
}

Factorization order_of(const SimpleGroupId& id_in) {
  require_simple_name(id_in);
  SimpleGroupId id = canonicalize(id_in);
  switch (id.family) {
    case Family::Alternating: {
      Factorization f;
      for (u64 k = 3; k <= static_cast<u64>(id.n); ++k) {
        f.multiply(arith::factorize(k));
      }
      return f;
    }
    case Family::Tits:
      return *arith::parse_factored("2^11*3^3*5^2*13");
    case Family::Sporadic:
      return sporadic_order(id.sporadic);
    default:
      break;
  }
  auto pp = *arith::prime_power_decomposition(id.q);
  LieShape s = lie_shape(id.family, id.n, id.q);
  if (s.overflow) throw std::domain_error("order_of: order exceeds 128 bits");
  Factorization out;
  out.factors.push_back({pp.first, pp.second * s.qexp});
  for (u128 t : s.terms) out.multiply(arith::factorize(t));
  return out;
}

std::optional<u128> order_value(const SimpleGroupId& id_in) {
  require_simple_name(id_in);
  SimpleGroupId id = canonicalize(id_in);
  switch (id.family) {
    case Family::Alternating: {
      u128 v = 1;
      for (u64 k = 3; k <= static_cast<u64>(id.n); ++k) {
        auto m = checked_mul(v, k);
        if (!m) return std::nullopt;
        v = *m;
      }
      return v;
    }
    case Family::Tits:
      return static_cast<u128>(17971200);
    case Family::Sporadic:
      return sporadic_order(id.sporadic).value_checked();
    default:
      break;
  }
  LieShape s = lie_shape(id.family, id.n, id.q);
  if (s.overflow) return std::nullopt;
  auto v = checked_pow(id.q, s.qexp);
  for (u128 t : s.terms) {
    if (!v) return std::nullopt;
    v = checked_mul(*v, t);
  }
  return v;
}

Factorization out_order(const SimpleGroupId& id_in) {
  require_simple_name(id_in);
  SimpleGroupId id = canonicalize(id_in);
  u64 out = 1;
  switch (id.family) {
    case Family::Alternating:
      out = id.n == 6 ? 4 : 2;  // unreachable for n in {5,6,8}; kept for clarity
      break;
    case Family::Tits:
      out = 2;
      break;
    case Family::Sporadic:
      out = static_cast<u64>(kSporadics[id.sporadic].out);
      break;
    default: {
      auto [p, f] = *arith::prime_power_decomposition(id.q);
      u64 fu = static_cast<u64>(f);
      switch (id.family) {
        case Family::A:
          out = gcd64(static_cast<u64>(id.n) + 1, id.q - 1) * fu *
                (id.n >= 2 ? 2 : 1);
          break;
        case Family::TwoA:
          out = gcd64(static_cast<u64>(id.n) + 1, id.q + 1) * 2 * fu;
          break;
        case Family::B:
          out = gcd64(2, id.q - 1) * fu;
          break;
        case Family::C:
          out = gcd64(2, id.q - 1) * fu * (id.n == 2 && p == 2 ? 2 : 1);
          break;
        case Family::D:
          out = gcd4_pow(id.q, id.n, -1) * fu * (id.n == 4 ? 6 : 2);
          break;
        case Family::TwoD:
          out = gcd4_pow(id.q, id.n, +1) * 2 * fu;
          break;
        case Family::G2:
          out = fu * (p == 3 ? 2 : 1);
          break;
        case Family::F4:
          out = fu * (p == 2 ? 2 : 1);
          break;
        case Family::E6:
          out = gcd64(3, id.q - 1) * fu * 2;
          break;
        case Family::E7:
          out = gcd64(2, id.q - 1) * fu;
          break;
        case Family::E8:
          out = fu;
          break;
        case Family::TwoE6:
          out = gcd64(3, id.q + 1) * 2 * fu;
          break;
        case Family::ThreeD4:
          out = 3 * fu;
          break;
        case Family::TwoB2:
        case Family::TwoG2:
        case Family::TwoF4:
          out = fu;
          break;
        default:
          throw std::logic_error("out_order: unhandled family");
      }
    }
  }
  return arith::factorize(out);
}

Factorization aut_order(const SimpleGroupId& id) {
  Factorization f = order_of(id);
  f.multiply(out_order(id));
  return f;
}

std::vector<SimpleGroupId> enumerate_dividing(const Factorization& N,
                                              std::optional<u64> required_prime) {
  auto target_checked = N.value_checked();
  if (!target_checked || *target_checked > (static_cast<u128>(1) << 80)) {
    throw std::domain_error(
        "enumerate_dividing: completeness validated only for N <= 2^80");
  }
  u128 target = *target_checked;
  if (target < 60) {
    throw std::invalid_argument("enumerate_dividing: N must be at least 60");
  }

  std::set<SimpleGroupId> found;
  auto consider = [&](const SimpleGroupId& id) {
    auto ov = order_value(id);
    if (!ov || target % *ov != 0) return;
    if (required_prime && *ov % *required_prime != 0) return;
    found.insert(canonicalize(id));
  };

  // Alternating groups, ascending until the order exceeds the target.
  {
    u128 ord = 60;  // |A5|
    for (int n = 5; ord <= target; ++n) {
      consider(alternating(n));
      auto next = checked_mul(ord, static_cast<u64>(n) + 1);
      if (!next) break;
      ord = *next;
    }
  }

  // For Lie-type groups the defining field size q = p^j contributes
  // exactly p^(j*qexp) to the order, so q ranges over prime-power
  // divisors of N with j*qexp <= e_p(N).  Orders grow at least as fast
  // as q^2, so q <= 2^40 once N <= 2^80.
  auto for_each_q = [&](int qexp, auto&& body) {
    if (qexp <= 0) throw std::logic_error("enumerate_dividing: bad qexp");
    for (const auto& [p, e] : N.factors) {
      u128 q = 1;
      for (int j = 1; j * qexp <= e; ++j) {
        q *= p;
        if (q > (static_cast<u128>(1) << 40)) break;
        body(static_cast<u64>(q));
      }
    }
  };

  struct RankedFamily {
    Family family;
    int n_min;
  };
  constexpr RankedFamily kRanked[] = {
      {Family::A, 1},    {Family::TwoA, 2}, {Family::B, 3},
      {Family::C, 2},    {Family::D, 4},    {Family::TwoD, 4},
  };
  int max_e = 0;
  for (const auto& [p, e] : N.factors) max_e = std::max(max_e, e);

  for (const auto& rf : kRanked) {
    for (int n = rf.n_min;; ++n) {
      int qexp = 0;
      switch (rf.family) {
        case Family::A:
        case Family::TwoA: qexp = n * (n + 1) / 2; break;
        case Family::B:
        case Family::C: qexp = n * n; break;
        default: qexp = n * (n - 1); break;
      }
      if (qexp > max_e) break;
      for_each_q(qexp, [&](u64 q) {
        SimpleGroupId id = lie(rf.family, n, q);
        if (rf.family == Family::B && q % 2 == 0) return;  // B(2^k) = C(2^k)
        if (is_simple_group_name(id)) consider(id);
      });
    }
  }

  constexpr std::pair<Family, int> kFixedRank[] = {
      {Family::G2, 6},      {Family::F4, 24},  {Family::E6, 36},
      {Family::TwoE6, 36},  {Family::E7, 63},  {Family::E8, 120},
      {Family::ThreeD4, 12},
  };
  for (auto [fam, qexp] : kFixedRank) {
    if (qexp > max_e) continue;
    for_each_q(qexp, [&](u64 q) {
      SimpleGroupId id = lie(fam, q);
      if (is_simple_group_name(id)) consider(id);
    });
  }

  // Suzuki and Ree groups: q an odd power of the characteristic.
  auto odd_power_family = [&](Family fam, u64 p, int qexp) {
    int e = N.exponent_of(p);
    for (int j = 3; j * qexp <= e; j += 2) {
      u128 q = 1;
      for (int i = 0; i < j; ++i) q *= p;
      if (q > (static_cast<u128>(1) << 40)) break;
      SimpleGroupId id = lie(fam, static_cast<u64>(q));
      if (is_simple_group_name(id)) consider(id);
    }
  };
  odd_power_family(Family::TwoB2, 2, 2);
  odd_power_family(Family::TwoG2, 3, 3);
  odd_power_family(Family::TwoF4, 2, 12);

  consider(tits());
  for (int i = 0; i < kSporadicCount; ++i) {
    consider(SimpleGroupId{Family::Sporadic, 0, 0, i});
  }

  std::vector<std::tuple<u128, std::string, SimpleGroupId>> rows;
  rows.reserve(found.size());
  for (const auto& id : found) {
    rows.emplace_back(*order_value(id), label(id), id);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::vector<SimpleGroupId> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(std::get<2>(r));
  return out;
}

u64 sporadic_table_checksum() {
  u64 h = 14695981039346656037ULL;
  auto mix = [&](const char* s) {
    for (; *s; ++s) {
      h ^= static_cast<unsigned char>(*s);
      h *= 1099511628211ULL;
    }
    h ^= '|';
    h *= 1099511628211ULL;
  };
  for (const auto& s : kSporadics) {
    mix(s.name);
    mix(s.order);
    char buf[8];
    std::snprintf(buf, sizeof buf, "%d", s.out);
    mix(buf);
  }
  return h;
}

}  // namespace odchar::catalog
