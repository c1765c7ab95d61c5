#pragma once

// Exact degree arithmetic: formal sums  sum_p c_p log(p) + c_arch  with
// rational coefficients. The archimedean unit is deg([inf]) = 1, so c_arch is
// just a rational constant. Floating point enters only in evaluate().

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "f1curve/factor.hpp"
#include "f1curve/integer.hpp"

namespace f1curve {

// Compare Coefficients only against Coefficients: boost 1.74's mixed
// rational/int operator== recurses forever under C++20 rewritten comparisons.
using Coefficient = boost::rational<std::int64_t>;

class DegreeLedger {
 public:
  struct Term {
    UInt128 prime;
    Coefficient coefficient;
    bool operator==(const Term&) const = default;
  };

  DegreeLedger() = default;

  [[nodiscard]] static DegreeLedger constant(Coefficient c);
  // c * log(p)
  [[nodiscard]] static DegreeLedger log_prime(UInt128 p, Coefficient c = 1);
  // log(n) from a factorization of n.
  [[nodiscard]] static DegreeLedger log_of(const Factorization& f);
  // log(n); n >= 1, subject to factorize() limits.
  [[nodiscard]] static DegreeLedger log_of(const Integer& n);

  // Sorted by prime; never holds a zero coefficient.
  [[nodiscard]] const std::vector<Term>& terms() const noexcept {
    return terms_;
  }
  [[nodiscard]] Coefficient arch() const noexcept { return arch_; }
  [[nodiscard]] Coefficient coefficient(UInt128 p) const;
  [[nodiscard]] bool is_zero() const noexcept {
    return terms_.empty() && arch_ == Coefficient(0);
  }
  [[nodiscard]] bool is_constant() const noexcept { return terms_.empty(); }

  DegreeLedger& operator+=(const DegreeLedger& other);
  DegreeLedger& operator-=(const DegreeLedger& other);
  DegreeLedger& operator*=(Coefficient c);

  friend DegreeLedger operator+(DegreeLedger x, const DegreeLedger& y) {
    return x += y;
  }
  friend DegreeLedger operator-(DegreeLedger x, const DegreeLedger& y) {
    return x -= y;
  }
  friend DegreeLedger operator*(Coefficient c, DegreeLedger x) {
    return x *= c;
  }
  friend DegreeLedger operator-(DegreeLedger x) { return x *= -1; }

  // sum c_p ln p + c_arch in double precision.
  [[nodiscard]] double evaluate() const;

  // "2^-3 3^2 arch^-1"; the zero ledger is "0". Coefficients print as
  // integers or n/d.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] static DegreeLedger parse(std::string_view text);

  bool operator==(const DegreeLedger&) const = default;

 private:
  void add_term(UInt128 p, Coefficient c);

  std::vector<Term> terms_;
  Coefficient arch_{0};
};

[[nodiscard]] std::string to_string(const Coefficient& c);

}  // namespace f1curve
