#include "f1curve/factor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

constexpr std::uint32_t kSieveLimit = kSmallFactorLimit;

struct Sieve {
  std::vector<std::uint32_t> smallest_factor;
  std::vector<std::uint32_t> primes;

  Sieve() : smallest_factor(kSieveLimit + 1, 0) {
    for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
      if (smallest_factor[i] == 0) {
        smallest_factor[i] = i;
        primes.push_back(i);
      }
      for (std::uint32_t p : primes) {
        const std::uint64_t next = static_cast<std::uint64_t>(p) * i;
        if (p > smallest_factor[i] || next > kSieveLimit) {
          break;
        }
        smallest_factor[next] = p;
      }
    }
  }
};

const Sieve& sieve() {
  static const Sieve instance;
  return instance;
}

constexpr UInt128 kU64 = static_cast<UInt128>(1) << 64;

UInt128 gcd128(UInt128 a, UInt128 b) {
  while (b != 0) {
    const UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

UInt128 isqrt128(UInt128 n) {
  if (n == 0) {
    return 0;
  }
  auto r = static_cast<UInt128>(std::sqrt(static_cast<long double>(n)));
  // Correct the floating estimate in both directions without overflowing.
  while (r > 0 && (r > n / r)) {
    --r;
  }
  while ((r + 1) <= n / (r + 1)) {
    ++r;
  }
  return r;
}

bool miller_rabin(UInt128 n, UInt128 base) {
  base %= n;
  if (base == 0) {
    return true;
  }
  UInt128 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  UInt128 x = powmod(base, d, n);
  if (x == 1 || x == n - 1) {
    return true;
  }
  if (n < kU64) {
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        return true;
      }
    }
    return false;
  }
  const Montgomery mont(n);
  const UInt128 minus_one = mont.to_form(n - 1);
  x = mont.to_form(x);
  for (unsigned i = 1; i < s; ++i) {
    x = mont.mul(x, x);
    if (x == minus_one) {
      return true;
    }
  }
  return false;
}

// Jacobi symbol (a/n), n odd positive.
int jacobi(UInt128 a, UInt128 n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1U) == 0) {
      a >>= 1U;
      const auto r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) {
        result = -result;
      }
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) {
      result = -result;
    }
    a %= n;
  }
  return n == 1 ? result : 0;
}

UInt128 half_mod(UInt128 x, UInt128 n) {
  // n odd; (x + n) / 2 without overflow when x is odd.
  return (x & 1U) ? (x >> 1U) + (n >> 1U) + 1 : x >> 1U;
}

UInt128 submod(UInt128 a, UInt128 b, UInt128 n) {
  return a >= b ? a - b : n - (b - a);
}

UInt128 addmod(UInt128 a, UInt128 b, UInt128 n) {
  return a >= n - b ? a - (n - b) : a + b;
}

// Strong Lucas probable prime test with Selfridge parameters. n odd, not a
// perfect square, n > 3.
bool strong_lucas(UInt128 n) {
  std::int64_t d_signed = 5;
  while (true) {
    const UInt128 d_mod = d_signed > 0
                              ? static_cast<UInt128>(d_signed) % n
                              : n - static_cast<UInt128>(-d_signed) % n;
    const int j = jacobi(d_mod, n);
    if (j == -1) {
      break;
    }
    if (j == 0 && static_cast<UInt128>(d_signed < 0 ? -d_signed : d_signed) != n) {
      return false;
    }
    d_signed = d_signed > 0 ? -(d_signed + 2) : -d_signed + 2;
  }
  const UInt128 d_mod = d_signed > 0 ? static_cast<UInt128>(d_signed) % n
                                     : n - static_cast<UInt128>(-d_signed) % n;
  // P = 1, Q = (1 - D) / 4.
  const std::int64_t q_signed = (1 - d_signed) / 4;
  const UInt128 q_mod = q_signed >= 0 ? static_cast<UInt128>(q_signed) % n
                                      : n - static_cast<UInt128>(-q_signed) % n;

  UInt128 k = n + 1;  // n < 2^128 - 1 because n is odd and not 2^128 - 1
  unsigned s = 0;
  while ((k & 1U) == 0) {
    k >>= 1U;
    ++s;
  }
  int top = 127;
  while (((k >> top) & 1U) == 0) {
    --top;
  }
  UInt128 u = 1;
  UInt128 v = 1;
  UInt128 qk = q_mod;
  for (int bit = top - 1; bit >= 0; --bit) {
    u = mulmod(u, v, n);
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    qk = mulmod(qk, qk, n);
    if ((k >> bit) & 1U) {
      const UInt128 u_next = half_mod(addmod(u, v, n), n);
      const UInt128 v_next = half_mod(addmod(mulmod(d_mod, u, n), v, n), n);
      u = u_next;
      v = v_next;
      qk = mulmod(qk, q_mod, n);
    }
  }
  if (u == 0 || v == 0) {
    return true;
  }
  for (unsigned r = 1; r < s; ++r) {
    v = submod(mulmod(v, v, n), addmod(qk, qk, n), n);
    qk = mulmod(qk, qk, n);
    if (v == 0) {
      return true;
    }
  }
  return false;
}

// Rho needs about sqrt(p) steps for the smallest prime p of n. Composites
// with no prime factor below roughly 10^14 are out of reach; they get a
// MagnitudeError instead of a hang.
constexpr std::uint64_t kRhoBudget = std::uint64_t{1} << 24;

// Mul is either plain mulmod or Montgomery multiplication; both give a
// polynomial map x -> x^2 + c whose differences share factors with n.
template <typename Mul>
UInt128 brent_rho_with(UInt128 n, std::uint64_t& budget, Mul mul) {
  for (UInt128 c = 1;; ++c) {
    auto f = [&](UInt128 x) { return addmod(mul(x, x), c, n); };
    UInt128 y = 2;
    UInt128 x = y;
    UInt128 ys = y;
    UInt128 q = 1;
    UInt128 g = 1;
    const std::uint64_t block = 128;
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      if (budget < 2 * r) {
        throw MagnitudeError("factorization of " + to_string(n) +
                             " exceeds the Pollard rho step budget");
      }
      budget -= 2 * r;
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        y = f(y);
      }
      for (std::uint64_t k = 0; k < r && g == 1; k += block) {
        ys = y;
        const std::uint64_t steps = std::min(block, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mul(q, x > y ? x - y : y - x);
        }
        g = gcd128(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd128(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) {
      return g;
    }
  }
}

UInt128 brent_rho(UInt128 n, std::uint64_t& budget) {
  if (n % 2 == 0) {
    return 2;
  }
  if (n < kU64) {
    return brent_rho_with(n, budget,
                          [n](UInt128 a, UInt128 b) { return mulmod(a, b, n); });
  }
  const Montgomery mont(n);
  return brent_rho_with(n, budget,
                        [&mont](UInt128 a, UInt128 b) { return mont.mul(a, b); });
}

void split(UInt128 n, std::map<UInt128, unsigned>& out,
           std::uint64_t& budget) {
  if (n == 1) {
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const UInt128 d = brent_rho(n, budget);
  split(d, out, budget);
  split(n / d, out, budget);
}

}  // namespace

bool is_prime(UInt128 n) {
  if (n < 2) {
    return false;
  }
  if (n <= kSieveLimit) {
    return sieve().smallest_factor[static_cast<std::uint32_t>(n)] == n;
  }
  static constexpr std::array<std::uint32_t, 13> kBases{
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (auto p : kBases) {
    if (n % p == 0) {
      return false;
    }
  }
  for (auto p : kBases) {
    if (!miller_rabin(n, p)) {
      return false;
    }
  }
  // Deterministic below 3317044064679887385961981.
  static const UInt128 kProvenBound =
      parse_u128("3317044064679887385961981");
  if (n < kProvenBound) {
    return true;
  }
  const UInt128 root = isqrt128(n);
  if (root * root == n) {
    return false;
  }
  return strong_lucas(n);
}

Factorization factorize_u128(UInt128 n) {
  if (n == 0) {
    throw ArgumentError("cannot factor 0");
  }
  Factorization result;
  const Sieve& s = sieve();
  if (n <= kSieveLimit) {
    auto m = static_cast<std::uint32_t>(n);
    while (m > 1) {
      const std::uint32_t p = s.smallest_factor[m];
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      result.push_back({p, e});
    }
    return result;
  }
  const bool small = n < (static_cast<UInt128>(1) << 64);
  for (std::uint32_t p : s.primes) {
    if (static_cast<UInt128>(p) * p > n) {
      break;
    }
    const bool divides = small ? static_cast<std::uint64_t>(n) % p == 0
                               : n % p == 0;
    if (divides) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      result.push_back({p, e});
    }
  }
  if (n == 1) {
    return result;
  }
  const UInt128 limit = static_cast<UInt128>(kSieveLimit) * kSieveLimit;
  if (n < limit) {
    // No factor below sqrt(n), so n is prime.
    result.push_back({n, 1});
    return result;
  }
  std::map<UInt128, unsigned> large;
  std::uint64_t budget = kRhoBudget;
  split(n, large, budget);
  for (const auto& [p, e] : large) {
    result.push_back({p, e});
  }
  return result;
}

SmallFactorization factorize_small(std::uint32_t n) {
  if (n == 0 || n > kSieveLimit) {
    throw ArgumentError("factorize_small expects 1 <= n <= 10^6");
  }
  const Sieve& s = sieve();
  SmallFactorization result;
  while (n > 1) {
    const std::uint32_t p = s.smallest_factor[n];
    std::uint8_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    result.primes[result.size] = p;
    result.exponents[result.size] = e;
    ++result.size;
  }
  return result;
}

Factorization factorize(std::uint64_t n) { return factorize_u128(n); }

Factorization factorize(const Integer& n) {
  if (n < 1) {
    throw ArgumentError("factorize expects a positive integer, got " + n.str());
  }
  return factorize_u128(to_u128(n));
}

std::vector<UInt128> prime_multiset(const Factorization& f) {
  std::vector<UInt128> result;
  for (const auto& [p, e] : f) {
    result.insert(result.end(), e, p);
  }
  return result;
}

Integer radical(const Factorization& f) {
  Integer result = 1;
  for (const auto& pp : f) {
    result *= to_integer(pp.prime);
  }
  return result;
}

}  // namespace f1curve
