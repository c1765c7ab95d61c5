#pragma once

// Finite pointed monoids, congruences on them, and the domain test.
//
// A pointed monoid here is commutative with an absorbing zero. Elements are
// opaque ids 0..size()-1 with an attached label for printing. Everything
// infinite (F[T], F[T^+-1]) is handled symbolically elsewhere and reaches
// this module only through finite quotients.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f1curve {

using ElementId = std::uint32_t;

class FiniteMonoid {
 public:
  // `table` is row-major, table[a * size + b] = a * b. Checks shape, zero,
  // one, label uniqueness and commutativity; associativity is O(n^3) and is
  // left to axiom_violation().
  FiniteMonoid(std::vector<std::string> labels, std::vector<ElementId> table,
               ElementId zero, ElementId one);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] ElementId zero() const noexcept { return zero_; }
  [[nodiscard]] ElementId one() const noexcept { return one_; }

  [[nodiscard]] ElementId mul(ElementId a, ElementId b) const {
    return table_[static_cast<std::size_t>(a) * size() + b];
  }
  [[nodiscard]] ElementId pow(ElementId a, std::uint64_t n) const;

  [[nodiscard]] const std::string& label(ElementId a) const {
    return labels_.at(a);
  }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  // Throws ArgumentError for an unknown label.
  [[nodiscard]] ElementId id(std::string_view label) const;

  [[nodiscard]] bool is_unit(ElementId a) const;
  [[nodiscard]] std::vector<ElementId> units() const;

  // First failing axiom, if any.
  [[nodiscard]] std::optional<std::string> axiom_violation() const;

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ElementId> table_;
  ElementId zero_;
  ElementId one_;
};

// Equivalence relation on the ids of a finite monoid, stored as a partition.
// Each class is represented by its smallest id.
class Congruence {
 public:
  // Identity partition on `size` elements.
  static Congruence trivial(std::size_t size);
  // `labels[i]` is any class tag for element i; elements with equal tags are
  // related.
  template <typename Tag>
  static Congruence from_tags(const std::vector<Tag>& labels);

  [[nodiscard]] std::size_t carrier_size() const noexcept {
    return rep_.size();
  }
  [[nodiscard]] ElementId representative(ElementId a) const {
    return rep_.at(a);
  }
  [[nodiscard]] bool related(ElementId a, ElementId b) const {
    return rep_.at(a) == rep_.at(b);
  }
  [[nodiscard]] std::size_t class_count() const;
  // Classes sorted by representative, each sorted ascending.
  [[nodiscard]] std::vector<std::vector<ElementId>> classes() const;

  // Every pair related here is related in `other`.
  [[nodiscard]] bool is_contained_in(const Congruence& other) const;
  // Multiplicatively stable on `m`.
  [[nodiscard]] bool is_compatible_with(const FiniteMonoid& m) const;

  bool operator==(const Congruence&) const = default;

 private:
  explicit Congruence(std::vector<ElementId> rep) : rep_(std::move(rep)) {}
  static Congruence from_representatives(std::vector<ElementId> rep);
  friend Congruence congruence_closure(
      const FiniteMonoid&, const std::vector<std::pair<ElementId, ElementId>>&);

  std::vector<ElementId> rep_;
};

// A map of pointed monoids given by its values on every element. The
// constructor rejects anything that does not preserve product, zero and one.
class MonoidMap {
 public:
  MonoidMap(FiniteMonoid source, FiniteMonoid target,
            std::vector<ElementId> image);

  [[nodiscard]] const FiniteMonoid& source() const noexcept { return source_; }
  [[nodiscard]] const FiniteMonoid& target() const noexcept { return target_; }
  [[nodiscard]] ElementId operator()(ElementId a) const { return image_.at(a); }

 private:
  FiniteMonoid source_;
  FiniteMonoid target_;
  std::vector<ElementId> image_;
};

// g after f.
[[nodiscard]] MonoidMap compose(const MonoidMap& g, const MonoidMap& f);

[[nodiscard]] Congruence congruence_closure(
    const FiniteMonoid& m,
    const std::vector<std::pair<ElementId, ElementId>>& generators);

// One element per class, labelled by its representative. Throws
// InvariantViolation if `c` is not stable under multiplication.
[[nodiscard]] FiniteMonoid quotient(const FiniteMonoid& m, const Congruence& c);

// The projection m -> m/c.
[[nodiscard]] MonoidMap quotient_map(const FiniteMonoid& m,
                                     const Congruence& c);

// Integral, and every element has at most n n-th roots for n up to the
// exponent of the unit group. For finite monoids this is exactly "embeds in
// the multiplicative monoid of a field".
[[nodiscard]] bool is_domain(const FiniteMonoid& m);

[[nodiscard]] Congruence congruence_kernel(const MonoidMap& f);
[[nodiscard]] Congruence pullback(const MonoidMap& f, const Congruence& d);

// Null ideal {a : (a, 0) in c}.
[[nodiscard]] std::vector<ElementId> null_ideal(const FiniteMonoid& m,
                                                const Congruence& c);

// Symbolic description of F[T] or F[T^+-1] over F = mu_m u {0}. Never
// enumerated; finite work goes through the quotients below.
struct LaurentMonoid {
  enum class Exponents { kNonNegative, kAll };

  std::uint64_t coefficient_level;  // m, F = mu_m u {0}
  Exponents exponents;

  // Canonical nonzero element coeff * T^exponent, coeff = k/m in Q/Z.
  struct Element {
    std::uint64_t coeff;
    std::int64_t exponent;
    bool operator==(const Element&) const = default;
  };

  [[nodiscard]] Element multiply(const Element& x, const Element& y) const;
  [[nodiscard]] bool contains(const Element& x) const;
};

namespace monoids {

// mu_n u {0}; element i (1 <= i <= n) is z^(i-1).
[[nodiscard]] FiniteMonoid cyclic_with_zero(std::uint64_t n);

// (Z/p x Z/q) u {0}.
[[nodiscard]] FiniteMonoid product_with_zero(std::uint64_t p, std::uint64_t q);

// F[T^+-1] / <T^n ~ s^a> with F = mu_m u {0}, s = e^(2 pi i / m). Elements
// are 0 and s^j T^i with 0 <= j < m, 0 <= i < n.
[[nodiscard]] FiniteMonoid laurent_quotient(std::uint64_t m, std::uint64_t n,
                                            std::uint64_t a);

// F_1[T] / <T^k ~ 0> = {0, 1, T, ..., T^(k-1)}.
[[nodiscard]] FiniteMonoid truncated_polynomial(std::uint64_t k);

}  // namespace monoids

template <typename Tag>
Congruence Congruence::from_tags(const std::vector<Tag>& labels) {
  std::vector<ElementId> rep(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    rep[i] = static_cast<ElementId>(i);
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[j] == labels[i]) {
        rep[i] = rep[j];
        break;
      }
    }
  }
  return Congruence(std::move(rep));
}

}  // namespace f1curve
