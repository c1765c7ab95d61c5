#include <random>

#include "doctest.h"
#include "f1curve/errors.hpp"
#include "f1curve/factor.hpp"

using namespace f1curve;

namespace {

std::vector<UInt128> trial_division(std::uint64_t n) {
  std::vector<UInt128> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

UInt128 product(const Factorization& f) {
  UInt128 x = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e; ++i) {
      x *= p;
    }
  }
  return x;
}

UInt128 u128(std::string_view s) { return parse_u128(s); }

}  // namespace

TEST_CASE("factorize examples") {
  CHECK(factorize(std::uint64_t{1}).empty());
  CHECK(prime_multiset(factorize(std::uint64_t{665})) ==
        std::vector<UInt128>{5, 7, 19});
  CHECK(factorize(std::uint64_t{1024 * 243}) ==
        Factorization{{2, 10}, {3, 5}});
  CHECK(radical(factorize(std::uint64_t{72})) == 6);
  CHECK_THROWS_AS((void)factorize(Integer(0)), ArgumentError);
  CHECK_THROWS_AS((void)factorize(Integer(-5)), ArgumentError);
  CHECK_THROWS_AS((void)factorize(Integer(1) << 128), MagnitudeError);
  // 2^128 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 274177 * 6700417 *
  // 67280421310721
  const auto fermat = factorize((Integer(1) << 128) - 1);
  CHECK(fermat.size() == 9);
  CHECK(fermat.back().prime == 67280421310721ULL);
}

TEST_CASE("factorize agrees with trial division") {
  for (std::uint64_t n = 1; n <= 200000; ++n) {
    REQUIRE(prime_multiset(factorize(n)) == trial_division(n));
  }
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = rng() >> 24;  // below 2^40, trial division is ok
    REQUIRE(prime_multiset(factorize(n)) == trial_division(n));
  }
}

TEST_CASE("products of known primes are recovered") {
  const std::vector<UInt128> primes{
      2,
      1000003,
      4294967311ULL,
      1000000000000000003ULL,
      18446744073709551557ULL,  // largest prime below 2^64
  };
  CHECK(is_prime(primes[4]));
  CHECK(factorize(Integer(1000000007) * 998244353).size() == 2);
  CHECK(factorize_u128(static_cast<UInt128>(1000003) * primes[4]) ==
        Factorization{{1000003, 1}, {primes[4], 1}});
  CHECK(factorize_u128(static_cast<UInt128>(1000000007) * primes[3]) ==
        Factorization{{1000000007, 1}, {primes[3], 1}});
  // Two ~60-bit primes: beyond rho's reach, reported rather than looping.
  CHECK_THROWS_AS(
      (void)factorize_u128(static_cast<UInt128>(primes[3]) * primes[4]),
      MagnitudeError);
  CHECK(factorize_u128(static_cast<UInt128>(primes[2]) * primes[2] *
                       primes[1] * 2) ==
        Factorization{{2, 1}, {primes[1], 1}, {primes[2], 2}});
  // 2^127 - 1 is prime.
  const UInt128 m127 = (static_cast<UInt128>(1) << 127) - 1;
  CHECK(is_prime(m127));
  CHECK(factorize_u128(m127) == Factorization{{m127, 1}});
  // 2^128 - 2 = 2 * (2^127 - 1)
  const UInt128 n = static_cast<UInt128>(0) - 2;
  CHECK(product(factorize_u128(n)) == n);
  for (const auto& [p, e] : factorize_u128(n)) {
    CHECK(is_prime(p));
  }
}

TEST_CASE("is_prime against a sieve and known pseudoprimes") {
  std::vector<char> composite(100001, 0);
  for (std::uint64_t i = 2; i * i <= 100000; ++i) {
    for (std::uint64_t j = i * i; j <= 100000; j += i) {
      composite[j] = 1;
    }
  }
  for (std::uint64_t n = 0; n <= 100000; ++n) {
    REQUIRE(is_prime(n) == (n >= 2 && !composite[n]));
  }
  // Carmichael numbers and strong pseudoprimes to many small bases.
  for (std::uint64_t n : {561ULL, 41041ULL, 3215031751ULL, 2152302898747ULL,
                          3474749660383ULL, 341550071728321ULL,
                          3825123056546413051ULL}) {
    CHECK_FALSE(is_prime(n));
    CHECK(product(factorize(n)) == n);
  }
  // A strong pseudoprime to the first 13 prime bases (Sorenson-Webster).
  const UInt128 psp = u128("3317044064679887385961981");
  CHECK_FALSE(is_prime(psp));
  CHECK(product(factorize_u128(psp)) == psp);
}

TEST_CASE("random round trips with one medium factor") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    // A prime near 2^32 times a random cofactor up to 2^90.
    UInt128 p = (rng() >> 32) | (std::uint64_t{1} << 31);
    while (!is_prime(p)) {
      ++p;
    }
    const UInt128 cofactor = (static_cast<UInt128>(rng() >> 38) << 64) | rng();
    const UInt128 n = p * (cofactor | 1);
    const auto f = factorize_u128(n);
    CHECK(product(f) == n);
    for (const auto& [p, e] : f) {
      CHECK(is_prime(p));
    }
  }
}

TEST_CASE("Montgomery multiplication agrees with double-and-add mulmod") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    UInt128 m = (static_cast<UInt128>(rng()) << 64) | rng() | 1;
    if (i % 3 == 0) {
      m >>= rng() % 60;
      m |= static_cast<UInt128>(1) << 64;
      m |= 1;
    }
    const Montgomery mont(m);
    const UInt128 a = ((static_cast<UInt128>(rng()) << 64) | rng()) % m;
    const UInt128 b = ((static_cast<UInt128>(rng()) << 64) | rng()) % m;
    REQUIRE(mont.from_form(mont.mul(mont.to_form(a), mont.to_form(b))) ==
            mulmod(a, b, m));
  }
  const UInt128 top = static_cast<UInt128>(0) - 1;  // 2^128 - 1, odd
  const Montgomery mont(top);
  CHECK(mont.from_form(mont.mul(mont.to_form(top - 1), mont.to_form(top - 1))) ==
        1);
}
