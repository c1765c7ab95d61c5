#pragma once

// Deterministic factorization of integers below 2^128.
//
// Trial division by the primes below 10^6 handles everything up to 10^12
// outright. Larger cofactors go through Miller-Rabin and Brent's variant of
// Pollard rho with fixed seeds, so results never depend on timing or RNG
// state. Miller-Rabin with the first 13 prime bases is proven correct below
// 3.3 * 10^24; above that the test adds a strong Lucas check (BPSW), which
// has no known counterexample.

#include <array>
#include <cstdint>
#include <vector>

#include "f1curve/integer.hpp"

namespace f1curve {

struct PrimePower {
  UInt128 prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

// Ascending by prime.
using Factorization = std::vector<PrimePower>;

// n >= 1. Throws ArgumentError for n < 1 and MagnitudeError for n >= 2^128
// or when a cofactor has two prime factors too large for rho to separate.
[[nodiscard]] Factorization factorize(const Integer& n);
[[nodiscard]] Factorization factorize(std::uint64_t n);
[[nodiscard]] Factorization factorize_u128(UInt128 n);

[[nodiscard]] bool is_prime(UInt128 n);

// Numbers up to this bound factor by table lookup.
inline constexpr std::uint32_t kSmallFactorLimit = 1'000'000;

// Fixed-capacity factorization; 7 distinct primes suffice below 10^6.
struct SmallFactorization {
  std::array<std::uint32_t, 8> primes{};
  std::array<std::uint8_t, 8> exponents{};
  unsigned size = 0;
};

// 1 <= n <= kSmallFactorLimit, else ArgumentError. No heap allocation.
[[nodiscard]] SmallFactorization factorize_small(std::uint32_t n);

// Each prime repeated by its exponent, ascending.
[[nodiscard]] std::vector<UInt128> prime_multiset(const Factorization& f);

// Product of the distinct primes.
[[nodiscard]] Integer radical(const Factorization& f);

}  // namespace f1curve
