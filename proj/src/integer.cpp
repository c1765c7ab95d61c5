#include "f1curve/integer.hpp"

#include <algorithm>

#include "f1curve/errors.hpp"
#include "f1curve/factor.hpp"

namespace f1curve {

std::string to_string(UInt128 n) {
  if (n == 0) {
    return "0";
  }
  std::string digits;
  while (n > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

UInt128 parse_u128(std::string_view text) {
  if (text.empty()) {
    throw ArgumentError("empty integer");
  }
  const UInt128 max = ~UInt128{0};
  UInt128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ArgumentError("not a non-negative integer: " + std::string(text));
    }
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (max - digit) / 10) {
      throw ArgumentError("integer exceeds 128 bits: " + std::string(text));
    }
    value = value * 10 + digit;
  }
  return value;
}

UInt128 to_u128(const Integer& n) {
  static const Integer kLimit = Integer(1) << 128;
  if (n < 0 || n >= kLimit) {
    throw MagnitudeError("value outside [0, 2^128): " + n.str());
  }
  const auto lo = static_cast<std::uint64_t>(n & 0xFFFFFFFFFFFFFFFFULL);
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  return (static_cast<UInt128>(hi) << 64) | lo;
}

Integer to_integer(UInt128 n) {
  Integer result = static_cast<std::uint64_t>(n >> 64);
  result <<= 64;
  result |= static_cast<std::uint64_t>(n);
  return result;
}

namespace {

constexpr UInt128 kU64Limit = static_cast<UInt128>(1) << 64;

UInt128 addmod(UInt128 a, UInt128 b, UInt128 m) {
  return a >= m - b ? a - (m - b) : a + b;
}

}  // namespace

UInt128 mulmod(UInt128 a, UInt128 b, UInt128 m) {
  if (m < kU64Limit) {
    return (a % m) * (b % m) % m;
  }
  a %= m;
  b %= m;
  UInt128 result = 0;
  while (b > 0) {
    if (b & 1U) {
      result = addmod(result, a, m);
    }
    a = addmod(a, a, m);
    b >>= 1U;
  }
  return result;
}

namespace {

struct Wide {
  UInt128 hi;
  UInt128 lo;
};

Wide mul_wide(UInt128 a, UInt128 b) {
  const auto a0 = static_cast<std::uint64_t>(a);
  const auto a1 = static_cast<std::uint64_t>(a >> 64);
  const auto b0 = static_cast<std::uint64_t>(b);
  const auto b1 = static_cast<std::uint64_t>(b >> 64);
  const UInt128 p00 = static_cast<UInt128>(a0) * b0;
  const UInt128 p01 = static_cast<UInt128>(a0) * b1;
  const UInt128 p10 = static_cast<UInt128>(a1) * b0;
  const UInt128 p11 = static_cast<UInt128>(a1) * b1;
  const UInt128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) +
                      static_cast<std::uint64_t>(p10);
  return {p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64),
          (mid << 64) | static_cast<std::uint64_t>(p00)};
}

}  // namespace

Montgomery::Montgomery(UInt128 odd_modulus) : m_(odd_modulus) {
  if (m_ % 2 == 0 || m_ < 3) {
    throw ArgumentError("Montgomery modulus must be odd and at least 3");
  }
  // Newton iteration doubles the correct low bits each step.
  UInt128 inv = m_;
  for (int i = 0; i < 7; ++i) {
    inv *= 2 - m_ * inv;
  }
  inv_ = -inv;
  r1_ = (static_cast<UInt128>(0) - m_) % m_;
  r2_ = r1_;
  for (int i = 0; i < 128; ++i) {
    r2_ = addmod(r2_, r2_, m_);
  }
}

UInt128 Montgomery::reduce(UInt128 hi, UInt128 lo) const {
  const UInt128 u = lo * inv_;
  const Wide um = mul_wide(u, m_);
  // lo + um.lo is 0 mod R; only its carry survives.
  const UInt128 low_sum = lo + um.lo;
  const UInt128 carry = low_sum < lo ? 1 : 0;
  UInt128 t = hi + um.hi;
  const bool overflow = t < hi;
  t += carry;
  const bool overflow2 = t < carry;
  if (overflow || overflow2 || t >= m_) {
    t -= m_;
  }
  return t;
}

UInt128 Montgomery::mul(UInt128 a, UInt128 b) const {
  const Wide w = mul_wide(a, b);
  return reduce(w.hi, w.lo);
}

UInt128 powmod(UInt128 base, UInt128 exp, UInt128 m) {
  if (m == 1) {
    return 0;
  }
  if (m >= kU64Limit && m % 2 == 1) {
    const Montgomery mont(m);
    UInt128 result = mont.one();
    UInt128 b = mont.to_form(base);
    while (exp > 0) {
      if (exp & 1U) {
        result = mont.mul(result, b);
      }
      b = mont.mul(b, b);
      exp >>= 1U;
    }
    return mont.from_form(result);
  }
  UInt128 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) {
      result = mulmod(result, base, m);
    }
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

UInt128 multiplicative_order(UInt128 r, UInt128 p) {
  if (p < 2) {
    throw ArgumentError("modulus must be a prime");
  }
  r %= p;
  if (r == 0) {
    throw ArgumentError("zero has no multiplicative order");
  }
  UInt128 order = p - 1;
  for (const auto& [q, e] : factorize_u128(p - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (powmod(r, order / q, p) != 1) {
        break;
      }
      order /= q;
    }
  }
  return order;
}

}  // namespace f1curve
