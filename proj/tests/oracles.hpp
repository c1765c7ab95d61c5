#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code paths with the library routines they check.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "f1curve/monoid.hpp"

namespace f1curve::testing {

using Pair = std::pair<ElementId, ElementId>;

// Smallest congruence containing `gens`, as an explicit pair set, by closing
// under reflexivity, symmetry, transitivity and multiplication until nothing
// changes.
inline std::set<Pair> naive_closure(const FiniteMonoid& m,
                                    const std::vector<Pair>& gens) {
  const auto n = static_cast<ElementId>(m.size());
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (ElementId a = 0; a < n; ++a) {
    rel[a][a] = 1;
  }
  for (auto [a, b] : gens) {
    rel[a][b] = rel[b][a] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId a = 0; a < n; ++a) {
      for (ElementId b = 0; b < n; ++b) {
        if (!rel[a][b]) {
          continue;
        }
        for (ElementId c = 0; c < n; ++c) {
          const ElementId ca = m.mul(c, a);
          const ElementId cb = m.mul(c, b);
          if (!rel[ca][cb]) {
            rel[ca][cb] = rel[cb][ca] = 1;
            changed = true;
          }
          if (rel[b][c] && !rel[a][c]) {
            rel[a][c] = rel[c][a] = 1;
            changed = true;
          }
        }
      }
    }
  }
  std::set<Pair> out;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (rel[a][b]) {
        out.insert({a, b});
      }
    }
  }
  return out;
}

inline std::set<Pair> pairs_of(const Congruence& c) {
  std::set<Pair> out;
  const auto n = static_cast<ElementId>(c.carrier_size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (c.related(a, b)) {
        out.insert({a, b});
      }
    }
  }
  return out;
}

// Multiplicative order of r mod p by repeated multiplication.
inline std::uint64_t naive_order(std::uint64_t r, std::uint64_t p) {
  r %= p;
  std::uint64_t x = r;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * r % p;
    ++k;
  }
  return k;
}

inline std::uint64_t naive_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k;
    std::uint64_t b = n;
    while (b != 0) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    count += a == 1 ? 1 : 0;
  }
  return count;
}

}  // namespace f1curve::testing
