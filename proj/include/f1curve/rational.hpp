#pragma once

#include <string>
#include <string_view>

#include "f1curve/integer.hpp"

namespace f1curve {

// A nonzero rational a/b in lowest terms, b >= 1; the sign lives on a.
class Rat {
 public:
  // Reduces. Throws ArgumentError if a == 0 or b == 0.
  Rat(Integer a, Integer b);
  explicit Rat(Integer a) : Rat(std::move(a), Integer(1)) {}

  // "a/b" or "a", optional leading sign on either part.
  [[nodiscard]] static Rat parse(std::string_view text);

  [[nodiscard]] const Integer& a() const noexcept { return a_; }
  [[nodiscard]] const Integer& b() const noexcept { return b_; }
  [[nodiscard]] Integer abs_a() const { return a_ < 0 ? Integer(-a_) : a_; }
  [[nodiscard]] int sign() const noexcept { return a_ < 0 ? -1 : 1; }
  // max(|a|, b)
  [[nodiscard]] Integer height() const;
  // q = 1 or q = -1.
  [[nodiscard]] bool is_exceptional() const;
  // |q| < 1
  [[nodiscard]] bool below_one() const { return abs_a() < b_; }
  [[nodiscard]] Rat inverse() const;

  [[nodiscard]] std::string to_string() const;

  bool operator==(const Rat&) const = default;

 private:
  Integer a_;
  Integer b_;
};

}  // namespace f1curve
