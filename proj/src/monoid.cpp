#include "f1curve/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), ElementId{0});
  }

  ElementId find(ElementId a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Smaller root wins, so roots are class minima.
  bool unite(ElementId a, ElementId b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (b < a) {
      std::swap(a, b);
    }
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<ElementId> parent_;
};

void check_id(const FiniteMonoid& m, ElementId a) {
  if (a >= m.size()) {
    throw ArgumentError("element id " + std::to_string(a) +
                        " out of range for monoid of size " +
                        std::to_string(m.size()));
  }
}

}  // namespace

// FiniteMonoid

FiniteMonoid::FiniteMonoid(std::vector<std::string> labels,
                           std::vector<ElementId> table, ElementId zero,
                           ElementId one)
    : labels_(std::move(labels)),
      table_(std::move(table)),
      zero_(zero),
      one_(one) {
  const std::size_t n = labels_.size();
  if (n == 0 || table_.size() != n * n) {
    throw ArgumentError("multiplication table must be size x size");
  }
  if (zero_ >= n || one_ >= n) {
    throw ArgumentError("zero/one id out of range");
  }
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != n) {
      throw ArgumentError("duplicate element labels");
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    if (mul(a, zero_) != zero_ || mul(zero_, a) != zero_) {
      throw ArgumentError("zero is not absorbing at " + labels_[a]);
    }
    if (mul(a, one_) != a || mul(one_, a) != a) {
      throw ArgumentError("one is not neutral at " + labels_[a]);
    }
    for (ElementId b = 0; b < n; ++b) {
      if (mul(a, b) >= n) {
        throw ArgumentError("table entry out of range");
      }
      if (mul(a, b) != mul(b, a)) {
        throw ArgumentError("table is not commutative at (" + labels_[a] +
                            ", " + labels_[b] + ")");
      }
    }
  }
}

ElementId FiniteMonoid::pow(ElementId a, std::uint64_t n) const {
  ElementId result = one_;
  ElementId base = a;
  while (n > 0) {
    if (n & 1U) {
      result = mul(result, base);
    }
    base = mul(base, base);
    n >>= 1U;
  }
  return result;
}

ElementId FiniteMonoid::id(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw ArgumentError("no element labelled " + std::string(label));
  }
  return static_cast<ElementId>(it - labels_.begin());
}

bool FiniteMonoid::is_unit(ElementId a) const {
  for (ElementId b = 0; b < size(); ++b) {
    if (mul(a, b) == one_) {
      return true;
    }
  }
  return false;
}

std::vector<ElementId> FiniteMonoid::units() const {
  std::vector<ElementId> result;
  for (ElementId a = 0; a < size(); ++a) {
    if (is_unit(a)) {
      result.push_back(a);
    }
  }
  return result;
}

std::optional<std::string> FiniteMonoid::axiom_violation() const {
  const auto n = static_cast<ElementId>(size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) {
        return "not commutative at (" + labels_[a] + ", " + labels_[b] + ")";
      }
      const ElementId ab = mul(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          return "not associative at (" + labels_[a] + ", " + labels_[b] +
                 ", " + labels_[c] + ")";
        }
      }
    }
    if (mul(a, zero_) != zero_) {
      return "zero not absorbing at " + labels_[a];
    }
    if (mul(a, one_) != a) {
      return "one not neutral at " + labels_[a];
    }
  }
  return std::nullopt;
}

// Congruence

Congruence Congruence::trivial(std::size_t size) {
  std::vector<ElementId> rep(size);
  std::iota(rep.begin(), rep.end(), ElementId{0});
  return Congruence(std::move(rep));
}

Congruence Congruence::from_representatives(std::vector<ElementId> rep) {
  return Congruence(std::move(rep));
}

std::size_t Congruence::class_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    count += rep_[i] == i ? 1 : 0;
  }
  return count;
}

std::vector<std::vector<ElementId>> Congruence::classes() const {
  std::vector<std::vector<ElementId>> result;
  std::vector<std::size_t> slot(rep_.size(), 0);
  for (ElementId i = 0; i < rep_.size(); ++i) {
    if (rep_[i] == i) {
      slot[i] = result.size();
      result.push_back({i});
    } else {
      result[slot[rep_[i]]].push_back(i);
    }
  }
  return result;
}

bool Congruence::is_contained_in(const Congruence& other) const {
  if (other.carrier_size() != carrier_size()) {
    throw ArgumentError("congruences live on different carriers");
  }
  for (ElementId i = 0; i < rep_.size(); ++i) {
    if (!other.related(i, rep_[i])) {
      return false;
    }
  }
  return true;
}

bool Congruence::is_compatible_with(const FiniteMonoid& m) const {
  if (m.size() != carrier_size()) {
    return false;
  }
  for (ElementId x = 0; x < m.size(); ++x) {
    if (rep_[x] == x) {
      continue;
    }
    for (ElementId c = 0; c < m.size(); ++c) {
      if (!related(m.mul(c, x), m.mul(c, rep_[x]))) {
        return false;
      }
    }
  }
  return true;
}

// MonoidMap

MonoidMap::MonoidMap(FiniteMonoid source, FiniteMonoid target,
                     std::vector<ElementId> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(image)) {
  if (image_.size() != source_.size()) {
    throw ArgumentError("map must assign an image to every element");
  }
  for (ElementId y : image_) {
    check_id(target_, y);
  }
  if (image_[source_.zero()] != target_.zero() ||
      image_[source_.one()] != target_.one()) {
    throw ArgumentError("map does not preserve zero and one");
  }
  for (ElementId a = 0; a < source_.size(); ++a) {
    for (ElementId b = a; b < source_.size(); ++b) {
      if (image_[source_.mul(a, b)] != target_.mul(image_[a], image_[b])) {
        throw ArgumentError("map is not multiplicative at (" +
                            source_.label(a) + ", " + source_.label(b) + ")");
      }
    }
  }
}

MonoidMap compose(const MonoidMap& g, const MonoidMap& f) {
  if (!(f.target() == g.source())) {
    throw ArgumentError("maps are not composable");
  }
  std::vector<ElementId> image(f.source().size());
  for (ElementId a = 0; a < image.size(); ++a) {
    image[a] = g(f(a));
  }
  return {f.source(), g.target(), std::move(image)};
}

// Operations

Congruence congruence_closure(
    const FiniteMonoid& m,
    const std::vector<std::pair<ElementId, ElementId>>& generators) {
  UnionFind uf(m.size());
  for (auto [a, b] : generators) {
    check_id(m, a);
    check_id(m, b);
    uf.unite(a, b);
  }
  // The relation is generated by the pairs (x, root(x)); saturating those
  // until nothing merges makes the whole partition multiplicatively stable.
  const auto n = static_cast<ElementId>(m.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId x = 0; x < n; ++x) {
      const ElementId r = uf.find(x);
      if (r == x) {
        continue;
      }
      for (ElementId c = 0; c < n; ++c) {
        changed |= uf.unite(m.mul(c, x), m.mul(c, r));
      }
    }
  }
  std::vector<ElementId> rep(n);
  for (ElementId x = 0; x < n; ++x) {
    rep[x] = uf.find(x);
  }
  return Congruence::from_representatives(std::move(rep));
}

FiniteMonoid quotient(const FiniteMonoid& m, const Congruence& c) {
  if (c.carrier_size() != m.size()) {
    throw ArgumentError("congruence does not live on this monoid");
  }
  std::vector<ElementId> index(m.size(), 0);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < m.size(); ++x) {
    if (c.representative(x) == x) {
      index[x] = static_cast<ElementId>(reps.size());
      reps.push_back(x);
    }
  }
  const std::size_t k = reps.size();
  std::vector<ElementId> table(k * k, 0);
  // (representative(x), representative(y)) precedes (x, y) in this scan, so
  // each cell is first written from its representative pair.
  for (ElementId x = 0; x < m.size(); ++x) {
    for (ElementId y = 0; y < m.size(); ++y) {
      const ElementId cell = index[c.representative(x)] * k +
                             index[c.representative(y)];
      const ElementId value = index[c.representative(m.mul(x, y))];
      const bool first = x == c.representative(x) && y == c.representative(y);
      if (first) {
        table[cell] = value;
      } else if (table[cell] != value) {
        throw InvariantViolation("quotient table conflict at (" +
                                 m.label(x) + ", " + m.label(y) +
                                 "): relation is not a congruence");
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(k);
  for (ElementId r : reps) {
    labels.push_back(m.label(r));
  }
  return {std::move(labels), std::move(table),
          index[c.representative(m.zero())], index[c.representative(m.one())]};
}

MonoidMap quotient_map(const FiniteMonoid& m, const Congruence& c) {
  FiniteMonoid q = quotient(m, c);
  std::vector<ElementId> index(m.size(), 0);
  ElementId next = 0;
  for (ElementId x = 0; x < m.size(); ++x) {
    if (c.representative(x) == x) {
      index[x] = next++;
    }
  }
  std::vector<ElementId> image(m.size());
  for (ElementId x = 0; x < m.size(); ++x) {
    image[x] = index[c.representative(x)];
  }
  return {m, std::move(q), std::move(image)};
}

bool is_domain(const FiniteMonoid& m) {
  const auto n = static_cast<ElementId>(m.size());
  if (m.zero() == m.one()) {
    return false;
  }
  // Integral: multiplication by any nonzero a is injective.
  std::vector<char> hit(n);
  for (ElementId a = 0; a < n; ++a) {
    if (a == m.zero()) {
      continue;
    }
    std::fill(hit.begin(), hit.end(), 0);
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = m.mul(a, b);
      if (hit[ab]) {
        return false;
      }
      hit[ab] = 1;
    }
  }
  // A finite integral monoid is a group with zero, so every nonzero element
  // is a unit and x -> x^n is periodic in n with the group exponent.
  std::uint64_t exponent = 1;
  for (ElementId a = 0; a < n; ++a) {
    if (a == m.zero()) {
      continue;
    }
    std::uint64_t order = 1;
    for (ElementId x = a; x != m.one(); x = m.mul(x, a)) {
      ++order;
    }
    exponent = std::lcm(exponent, order);
  }
  std::vector<ElementId> power(n);
  std::iota(power.begin(), power.end(), ElementId{0});
  std::vector<std::uint64_t> roots(n);
  for (std::uint64_t k = 1; k <= exponent; ++k) {
    if (k > 1) {
      for (ElementId x = 0; x < n; ++x) {
        power[x] = m.mul(power[x], x);
      }
    }
    std::fill(roots.begin(), roots.end(), 0);
    for (ElementId x = 0; x < n; ++x) {
      if (++roots[power[x]] > k) {
        return false;
      }
    }
  }
  return true;
}

Congruence congruence_kernel(const MonoidMap& f) {
  std::vector<ElementId> tags(f.source().size());
  for (ElementId x = 0; x < tags.size(); ++x) {
    tags[x] = f(x);
  }
  return Congruence::from_tags(tags);
}

Congruence pullback(const MonoidMap& f, const Congruence& d) {
  if (d.carrier_size() != f.target().size()) {
    throw ArgumentError("congruence does not live on the codomain");
  }
  std::vector<ElementId> tags(f.source().size());
  for (ElementId x = 0; x < tags.size(); ++x) {
    tags[x] = d.representative(f(x));
  }
  return Congruence::from_tags(tags);
}

std::vector<ElementId> null_ideal(const FiniteMonoid& m, const Congruence& c) {
  std::vector<ElementId> result;
  for (ElementId x = 0; x < m.size(); ++x) {
    if (c.related(x, m.zero())) {
      result.push_back(x);
    }
  }
  return result;
}

// LaurentMonoid

LaurentMonoid::Element LaurentMonoid::multiply(const Element& x,
                                               const Element& y) const {
  if (!contains(x) || !contains(y)) {
    throw ArgumentError("element outside the Laurent monoid");
  }
  return {(x.coeff + y.coeff) % coefficient_level, x.exponent + y.exponent};
}

bool LaurentMonoid::contains(const Element& x) const {
  return x.coeff < coefficient_level &&
         (exponents == Exponents::kAll || x.exponent >= 0);
}

// Builders

namespace monoids {

namespace {

void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) {
    throw ArgumentError(std::string(what) + " must be positive");
  }
}

std::string power_label(const char* base, std::uint64_t e) {
  if (e == 0) {
    return "1";
  }
  if (e == 1) {
    return base;
  }
  return std::string(base) + "^" + std::to_string(e);
}

}  // namespace

FiniteMonoid cyclic_with_zero(std::uint64_t n) {
  require_positive(n, "order");
  const std::size_t size = n + 1;
  std::vector<std::string> labels{"0"};
  for (std::uint64_t i = 0; i < n; ++i) {
    labels.push_back(power_label("z", i));
  }
  std::vector<ElementId> table(size * size, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      table[(i + 1) * size + (j + 1)] = static_cast<ElementId>((i + j) % n + 1);
    }
  }
  return {std::move(labels), std::move(table), 0, 1};
}

FiniteMonoid product_with_zero(std::uint64_t p, std::uint64_t q) {
  require_positive(p, "order");
  require_positive(q, "order");
  const std::size_t size = p * q + 1;
  auto id = [q](std::uint64_t i, std::uint64_t j) {
    return static_cast<ElementId>(1 + i * q + j);
  };
  std::vector<std::string> labels{"0"};
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < q; ++j) {
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  std::vector<ElementId> table(size * size, 0);
  for (std::uint64_t i1 = 0; i1 < p; ++i1) {
    for (std::uint64_t j1 = 0; j1 < q; ++j1) {
      for (std::uint64_t i2 = 0; i2 < p; ++i2) {
        for (std::uint64_t j2 = 0; j2 < q; ++j2) {
          table[id(i1, j1) * size + id(i2, j2)] =
              id((i1 + i2) % p, (j1 + j2) % q);
        }
      }
    }
  }
  return {std::move(labels), std::move(table), 0, id(0, 0)};
}

FiniteMonoid laurent_quotient(std::uint64_t m, std::uint64_t n,
                              std::uint64_t a) {
  require_positive(m, "coefficient level");
  require_positive(n, "period");
  a %= m;
  const std::size_t size = m * n + 1;
  auto id = [m](std::uint64_t j, std::uint64_t i) {
    return static_cast<ElementId>(1 + i * m + j);
  };
  std::vector<std::string> labels(size);
  labels[0] = "0";
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < m; ++j) {
      std::string s = power_label("s", j);
      std::string t = power_label("T", i);
      if (j == 0) {
        labels[id(j, i)] = t;
      } else if (i == 0) {
        labels[id(j, i)] = s;
      } else {
        labels[id(j, i)] = s + "*" + t;
      }
    }
  }
  std::vector<ElementId> table(size * size, 0);
  for (std::uint64_t i1 = 0; i1 < n; ++i1) {
    for (std::uint64_t j1 = 0; j1 < m; ++j1) {
      for (std::uint64_t i2 = 0; i2 < n; ++i2) {
        for (std::uint64_t j2 = 0; j2 < m; ++j2) {
          std::uint64_t i = i1 + i2;
          std::uint64_t j = j1 + j2;
          if (i >= n) {
            i -= n;
            j += a;
          }
          table[id(j1, i1) * size + id(j2, i2)] = id(j % m, i);
        }
      }
    }
  }
  return {std::move(labels), std::move(table), 0, id(0, 0)};
}

FiniteMonoid truncated_polynomial(std::uint64_t k) {
  require_positive(k, "truncation degree");
  const std::size_t size = k + 1;
  std::vector<std::string> labels{"0"};
  for (std::uint64_t i = 0; i < k; ++i) {
    labels.push_back(power_label("T", i));
  }
  std::vector<ElementId> table(size * size, 0);
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::uint64_t j = 0; j < k; ++j) {
      table[(i + 1) * size + (j + 1)] =
          i + j < k ? static_cast<ElementId>(i + j + 1) : 0;
    }
  }
  return {std::move(labels), std::move(table), 0, 1};
}

}  // namespace monoids

}  // namespace f1curve
