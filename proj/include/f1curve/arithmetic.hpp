#pragma once

// Smirnov's compactified Spec Z and the map q^ : Spec Z-bar -> P^1_F1 of a
// rational q = a/b.
//
// Each place x is sent to a point of P^1 over F1:
//   p | a          -> [0]
//   p | b          -> [inf]
//   otherwise      -> [n],  n = order of a/b mod p
//   archimedean    -> [0] if |q| < 1, [inf] if |q| > 1
//   trivial place  -> generic point
// q = +-1 has |q| = 1 at the archimedean place and gets no map.
//
// Degrees are exact DegreeLedgers: deg([p]) = log p, deg([inf]) = 1.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "f1curve/factor.hpp"
#include "f1curve/ledger.hpp"
#include "f1curve/projline.hpp"
#include "f1curve/rational.hpp"

namespace f1curve {

class Place {
 public:
  enum class Kind { kFinite, kArch, kTrivial };

  // Throws ArgumentError unless p is prime.
  [[nodiscard]] static Place finite(UInt128 p);
  [[nodiscard]] static Place arch() noexcept { return Place(Kind::kArch, 0); }
  [[nodiscard]] static Place trivial() noexcept {
    return Place(Kind::kTrivial, 0);
  }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept {
    return kind_ == Kind::kFinite;
  }
  [[nodiscard]] UInt128 prime() const noexcept { return p_; }

  // "7", "arch", "trivial"
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] static Place parse(std::string_view text);

  bool operator==(const Place&) const = default;
  // Finite places by prime, then arch, then trivial.
  std::strong_ordering operator<=>(const Place& other) const noexcept;

 private:
  Place(Kind kind, UInt128 p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  UInt128 p_;
};

// log p at finite places, 1 at the archimedean place. Throws for the trivial
// place, which carries no degree.
[[nodiscard]] DegreeLedger place_degree(const Place& x);

// v_p(a) - v_p(b).
[[nodiscard]] std::int64_t valuation(const Rat& q, UInt128 p);

// Throws ExceptionalNumberError for q = +-1.
[[nodiscard]] ProjPoint place_map(const Rat& q, const Place& x);

// A finite place has an integer index; the archimedean one a ledger.
using Ramification = std::variant<std::uint64_t, DegreeLedger>;

// Finite places: v_p(a), v_p(b) or v_p(a^n - b^n) according to the image.
// Archimedean place: |log|q||, as ledger(max(|a|, b)) - ledger(min(|a|, b)).
// Throws ArgumentError at the trivial place.
[[nodiscard]] Ramification ramification(const Rat& q, const Place& x);

// The archimedean index exactly as written, -log|q|; negative when |q| > 1.
[[nodiscard]] DegreeLedger literal_arch_ramification(const Rat& q);

// Whether ramification() at the archimedean place differs from the literal
// formula, i.e. |q| > 1.
[[nodiscard]] bool arch_sign_adjusted(const Rat& q);

// (e - 1) * deg(x) as a ledger.
[[nodiscard]] DegreeLedger defect_numerator(const Ramification& e,
                                            const Place& x);

struct RamifiedPlace {
  Place place;
  ProjPoint image;
  Ramification e;
  DegreeLedger defect_numerator;
};

[[nodiscard]] RamifiedPlace ramified_place(const Rat& q, const Place& x);

// v_x(q) * deg(x) summed over the zeros of q: the primes dividing a, plus
// the archimedean place when |q| < 1. Equals log max(|a|, b).
[[nodiscard]] DegreeLedger map_degree(const Rat& q);

// sum_x v_x(q) deg([x]) over all places, with v_arch(q) = -log|q|.
[[nodiscard]] DegreeLedger product_formula_ledger(const Rat& q);

// Checks prod_p p^v_p(q) = |a|/b and that product_formula_ledger(q) is the
// zero ledger. Defined for q = +-1 as well.
[[nodiscard]] bool product_formula_check(const Rat& q);

// Same check for machine-size a/b in lowest terms (b >= 1, a != 0), without
// heap allocation. Used for exhaustive sweeps.
[[nodiscard]] bool product_formula_check(std::int64_t a, std::int64_t b);

// Places whose image has degree 1 ([0], [inf], [1] or [2]), finite ones by
// prime, then arch.
[[nodiscard]] std::vector<Place> X_of(const Rat& q);

struct DefectSum {
  DegreeLedger numerator;  // sum over X(q) of (e_x - 1) deg(x)
  DegreeLedger degree;     // deg(q^)
  double value = 0.0;      // numerator / degree, evaluated
};

// Per-place: iterate X_of and ramified_place.
[[nodiscard]] DefectSum defect_sum(const Rat& q);

// Closed form from the factorizations of a, b, a - b, a + b:
//   L(|a|) + L(b) + L(|a - b|) + L'(|a + b|) + |log|q|| - 1
// where L(n) = log n - log rad(n) and L' drops the prime 2 when it also
// divides a - b (then it sits in the [1]-fiber, not the [2]-fiber).
[[nodiscard]] DefectSum defect_sum_closed_form(const Rat& q);

// A strong prime congruence of F1[T] (or F1[T^-1] in the inverse chart).
struct PrimeCongruence {
  enum class Chart { kT, kTInverse };
  Chart chart = Chart::kT;
  bool to_zero = false;   // <T ~ 0> (or <T^-1 ~ 0>)
  std::uint64_t n = 0;    // <T^n ~ 1> when !to_zero

  [[nodiscard]] std::string to_string() const;
  // The corresponding point of P^1 over F1.
  [[nodiscard]] ProjPoint point() const;
  bool operator==(const PrimeCongruence&) const = default;
};

// Pull back (p) along F1[T] -> Z[q], T -> q. Throws ChartError if p | b.
[[nodiscard]] PrimeCongruence strong_congruence_of_prime(const Rat& q,
                                                         UInt128 p);
// Same along F1[T^-1] -> Z[1/q]. Throws ChartError if p | a.
[[nodiscard]] PrimeCongruence strong_congruence_of_prime_inverse(const Rat& q,
                                                                 UInt128 p);

struct ResidueEmbedding {
  std::uint64_t n = 0;    // order of a/b mod p
  bool embeds = false;    // T^i -> (a/b)^i is injective and multiplicative
};

// p must not divide ab (ArgumentError). Checks the map mu_n u {0} -> F_p
// element by element; MagnitudeError if n > 10^7.
[[nodiscard]] ResidueEmbedding residue_embedding_check(const Rat& q,
                                                       UInt128 p);

// Sections of the structure sheaf on U = Spec Z-bar minus a finite set S of
// non-generic places: lambda with v_p(lambda) >= 0 for finite p outside S
// and |lambda| <= 1 if arch is outside S. Zero is always a section.
class GlobalSections {
 public:
  explicit GlobalSections(std::vector<Place> excluded);

  [[nodiscard]] const std::vector<Place>& excluded() const noexcept {
    return excluded_;
  }
  [[nodiscard]] bool contains(const Rat& lambda) const;
  // Nonzero sections of height <= bound, ordered by height, then |a|, then b,
  // then sign (positive first). Zero is implied.
  [[nodiscard]] std::vector<Rat> enumerate(std::uint64_t bound) const;

 private:
  [[nodiscard]] bool excluded_prime(UInt128 p) const;

  std::vector<Place> excluded_;
  bool arch_excluded_ = false;
};

}  // namespace f1curve
