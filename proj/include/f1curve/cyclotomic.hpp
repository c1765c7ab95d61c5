#pragma once

// Roots of unity as reduced fractions in Q/Z, the pointed monoids
// mu_m u {0}, and the cyclotomic Galois action at finite level.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f1curve {

// e^(2 pi i k / n) with 0 <= k < n, gcd(k, n) = 1 (or k = 0, n = 1), or the
// absorbing zero. Ordered zero first, then by (denominator, numerator).
class Root {
 public:
  [[nodiscard]] static Root zero() noexcept { return Root(0, 0); }
  [[nodiscard]] static Root unity() noexcept { return Root(0, 1); }
  // Reduces k mod n and the fraction. n must be positive.
  [[nodiscard]] static Root fraction(std::uint64_t k, std::uint64_t n);
  // -1
  [[nodiscard]] static Root minus_one() noexcept { return Root(1, 2); }

  [[nodiscard]] bool is_zero() const noexcept { return den_ == 0; }
  [[nodiscard]] std::uint64_t numerator() const noexcept { return num_; }
  [[nodiscard]] std::uint64_t denominator() const noexcept { return den_; }

  [[nodiscard]] Root operator*(const Root& other) const;
  [[nodiscard]] Root pow(std::uint64_t e) const;

  // "k/n", or "0" for zero. Unity is "0/1".
  [[nodiscard]] std::string to_string() const;
  // Accepts "k/n", "0", and the shorthands "1" and "-1".
  [[nodiscard]] static Root parse(std::string_view text);

  bool operator==(const Root&) const = default;
  std::strong_ordering operator<=>(const Root& other) const noexcept;

 private:
  Root(std::uint64_t k, std::uint64_t n) noexcept : num_(k), den_(n) {}

  std::uint64_t num_;
  std::uint64_t den_;
};

// Multiplicative order; throws ArgumentError for zero.
[[nodiscard]] std::uint64_t order(const Root& z);

// F = mu_m u {0} for finite m, or all of F_{1^infinity}.
class CycloMonoid {
 public:
  [[nodiscard]] static CycloMonoid level(std::uint64_t m);
  [[nodiscard]] static CycloMonoid infinite() noexcept {
    return CycloMonoid(std::nullopt);
  }

  [[nodiscard]] bool is_finite() const noexcept { return level_.has_value(); }
  // Throws ArgumentError on the infinite monoid.
  [[nodiscard]] std::uint64_t finite_level() const;
  [[nodiscard]] std::optional<std::uint64_t> level_or_inf() const noexcept {
    return level_;
  }

  [[nodiscard]] bool contains(const Root& z) const noexcept;
  // Nonzero elements in canonical order; finite level only.
  [[nodiscard]] std::vector<Root> units() const;
  // s = 1/m.
  [[nodiscard]] Root generator() const;
  // a in [0, m) with z = s^a. z must be a nonzero member.
  [[nodiscard]] std::uint64_t exponent_of(const Root& z) const;

  // "F1", "F1^2", ..., "F1^inf"
  [[nodiscard]] std::string name() const;

  bool operator==(const CycloMonoid&) const = default;

 private:
  explicit CycloMonoid(std::optional<std::uint64_t> m) : level_(m) {}

  std::optional<std::uint64_t> level_;
};

// min { w >= 1 : z^w in F }.
[[nodiscard]] std::uint64_t ord_rel(const Root& z, const CycloMonoid& f);

// A subgroup of (Z/N)^x. The action on roots is through the projection
// Zhat^x -> (Z/N)^x: a residue g acts on roots of order dividing lcm(2, N),
// lifted to an odd representative when N is odd. Roots of any other order
// are moved by some element of the preimage and are outside the finite-level
// picture.
class GaloisLevel {
 public:
  // Throws ArgumentError unless `members` (reduced mod N) form a subgroup.
  GaloisLevel(std::uint64_t modulus, std::vector<std::uint64_t> members);

  [[nodiscard]] static GaloisLevel trivial(std::uint64_t modulus);
  [[nodiscard]] static GaloisLevel full(std::uint64_t modulus);
  [[nodiscard]] static GaloisLevel generated_by(
      std::uint64_t modulus, const std::vector<std::uint64_t>& generators);
  // Every subgroup of (Z/N)^x, ordered by (size, members).
  [[nodiscard]] static std::vector<GaloisLevel> all_subgroups(
      std::uint64_t modulus);

  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  [[nodiscard]] const std::vector<std::uint64_t>& members() const noexcept {
    return members_;
  }
  // Largest root order the action is defined on: lcm(2, N).
  [[nodiscard]] std::uint64_t action_level() const noexcept;

  bool operator==(const GaloisLevel&) const = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> members_;
};

// g . z for a unit g mod N. Zero is fixed.
[[nodiscard]] Root galois_act(std::uint64_t g, std::uint64_t modulus,
                              const Root& z);

// Roots fixed by every member; always a cyclic group with zero.
[[nodiscard]] CycloMonoid fixed_submonoid(const GaloisLevel& gamma);

// { g . z : g in gamma } in canonical order.
[[nodiscard]] std::vector<Root> orbit(const GaloisLevel& gamma, const Root& z);

// Euler's totient.
[[nodiscard]] std::uint64_t euler_phi(std::uint64_t n);

}  // namespace f1curve
