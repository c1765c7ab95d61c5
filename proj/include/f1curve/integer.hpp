#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace f1curve {

using Integer = boost::multiprecision::cpp_int;
using UInt128 = unsigned __int128;

[[nodiscard]] std::string to_string(UInt128 n);
// Throws ArgumentError on malformed input or overflow.
[[nodiscard]] UInt128 parse_u128(std::string_view text);

// Throws MagnitudeError if n is negative or does not fit in 128 bits.
[[nodiscard]] UInt128 to_u128(const Integer& n);
[[nodiscard]] Integer to_integer(UInt128 n);

[[nodiscard]] UInt128 mulmod(UInt128 a, UInt128 b, UInt128 m);

// Montgomery arithmetic modulo an odd m, R = 2^128. Values passed to mul()
// must be in Montgomery form (see to_form); gcd(x R, m) = gcd(x, m), so rho
// can run entirely in this representation.
class Montgomery {
 public:
  explicit Montgomery(UInt128 odd_modulus);
  [[nodiscard]] UInt128 modulus() const noexcept { return m_; }
  [[nodiscard]] UInt128 to_form(UInt128 x) const { return mul(x % m_, r2_); }
  [[nodiscard]] UInt128 from_form(UInt128 x) const { return reduce(0, x); }
  [[nodiscard]] UInt128 mul(UInt128 a, UInt128 b) const;
  [[nodiscard]] UInt128 one() const noexcept { return r1_; }

 private:
  // (hi * 2^128 + lo) / R mod m, for inputs below m * R.
  [[nodiscard]] UInt128 reduce(UInt128 hi, UInt128 lo) const;

  UInt128 m_;
  UInt128 inv_;  // -m^-1 mod R
  UInt128 r1_;   // R mod m
  UInt128 r2_;   // R^2 mod m
};
[[nodiscard]] UInt128 powmod(UInt128 base, UInt128 exp, UInt128 m);

// Multiplicative order of r modulo the prime p; r must be nonzero mod p.
[[nodiscard]] UInt128 multiplicative_order(UInt128 r, UInt128 p);

}  // namespace f1curve
