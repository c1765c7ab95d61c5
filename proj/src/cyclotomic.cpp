#include "f1curve/cyclotomic.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

using u128 = unsigned __int128;

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("not a non-negative integer: " + std::string(text));
  }
  return value;
}

}  // namespace

// Root

Root Root::fraction(std::uint64_t k, std::uint64_t n) {
  if (n == 0) {
    throw ArgumentError("root denominator must be positive");
  }
  k %= n;
  if (k == 0) {
    return unity();
  }
  const std::uint64_t g = std::gcd(k, n);
  return Root(k / g, n / g);
}

Root Root::operator*(const Root& other) const {
  if (is_zero() || other.is_zero()) {
    return zero();
  }
  const std::uint64_t l = std::lcm(den_, other.den_);
  const u128 sum = static_cast<u128>(num_) * (l / den_) +
                   static_cast<u128>(other.num_) * (l / other.den_);
  return fraction(static_cast<std::uint64_t>(sum % l), l);
}

Root Root::pow(std::uint64_t e) const {
  if (is_zero()) {
    return e == 0 ? unity() : zero();
  }
  return fraction(
      static_cast<std::uint64_t>(static_cast<u128>(num_) * e % den_), den_);
}

std::string Root::to_string() const {
  if (is_zero()) {
    return "0";
  }
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Root Root::parse(std::string_view text) {
  if (text == "0") {
    return zero();
  }
  if (text == "1") {
    return unity();
  }
  if (text == "-1") {
    return minus_one();
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw ArgumentError("expected a root as k/n: " + std::string(text));
  }
  return fraction(parse_u64(text.substr(0, slash)),
                  parse_u64(text.substr(slash + 1)));
}

std::strong_ordering Root::operator<=>(const Root& other) const noexcept {
  if (is_zero() || other.is_zero()) {
    return other.is_zero() <=> is_zero();
  }
  if (auto c = den_ <=> other.den_; c != 0) {
    return c;
  }
  return num_ <=> other.num_;
}

std::uint64_t order(const Root& z) {
  if (z.is_zero()) {
    throw ArgumentError("zero has no multiplicative order");
  }
  return z.denominator();
}

// CycloMonoid

CycloMonoid CycloMonoid::level(std::uint64_t m) {
  if (m == 0) {
    throw ArgumentError("level must be positive");
  }
  return CycloMonoid(m);
}

std::uint64_t CycloMonoid::finite_level() const {
  if (!level_) {
    throw ArgumentError("F1^inf has no finite level");
  }
  return *level_;
}

bool CycloMonoid::contains(const Root& z) const noexcept {
  return z.is_zero() || !level_ || *level_ % z.denominator() == 0;
}

std::vector<Root> CycloMonoid::units() const {
  const std::uint64_t m = finite_level();
  std::vector<Root> result;
  result.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    result.push_back(Root::fraction(k, m));
  }
  std::sort(result.begin(), result.end());
  return result;
}

Root CycloMonoid::generator() const {
  return Root::fraction(1, finite_level());
}

std::uint64_t CycloMonoid::exponent_of(const Root& z) const {
  const std::uint64_t m = finite_level();
  if (z.is_zero() || !contains(z)) {
    throw ArgumentError("root " + z.to_string() + " is not a unit of " +
                        name());
  }
  return z.numerator() * (m / z.denominator());
}

std::string CycloMonoid::name() const {
  if (!level_) {
    return "F1^inf";
  }
  if (*level_ == 1) {
    return "F1";
  }
  return "F1^" + std::to_string(*level_);
}

std::uint64_t ord_rel(const Root& z, const CycloMonoid& f) {
  const std::uint64_t n = order(z);
  if (!f.is_finite()) {
    return 1;
  }
  return n / std::gcd(n, f.finite_level());
}

// GaloisLevel

GaloisLevel::GaloisLevel(std::uint64_t modulus,
                         std::vector<std::uint64_t> members)
    : modulus_(modulus) {
  if (modulus == 0) {
    throw ArgumentError("modulus must be positive");
  }
  for (auto& g : members) {
    g %= modulus;
    if (std::gcd(g, modulus) != 1 && modulus != 1) {
      throw ArgumentError("residue " + std::to_string(g) +
                          " is not a unit mod " + std::to_string(modulus));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::uint64_t one = 1 % modulus;
  if (!std::binary_search(members.begin(), members.end(), one)) {
    throw ArgumentError("subgroup must contain 1");
  }
  for (auto g : members) {
    for (auto h : members) {
      const auto gh =
          static_cast<std::uint64_t>(static_cast<u128>(g) * h % modulus);
      if (!std::binary_search(members.begin(), members.end(), gh)) {
        throw ArgumentError("residues are not closed under multiplication mod " +
                            std::to_string(modulus));
      }
    }
  }
  members_ = std::move(members);
}

GaloisLevel GaloisLevel::trivial(std::uint64_t modulus) {
  return {modulus, {1}};
}

GaloisLevel GaloisLevel::full(std::uint64_t modulus) {
  std::vector<std::uint64_t> units;
  for (std::uint64_t g = 0; g < modulus; ++g) {
    if (std::gcd(g, modulus) == 1) {
      units.push_back(g);
    }
  }
  return {modulus, std::move(units)};
}

GaloisLevel GaloisLevel::generated_by(
    std::uint64_t modulus, const std::vector<std::uint64_t>& generators) {
  if (modulus == 0) {
    throw ArgumentError("modulus must be positive");
  }
  std::set<std::uint64_t> group{1 % modulus};
  std::vector<std::uint64_t> frontier{1 % modulus};
  for (auto g : generators) {
    if (std::gcd(g % modulus, modulus) != 1 && modulus != 1) {
      throw ArgumentError("generator " + std::to_string(g) +
                          " is not a unit mod " + std::to_string(modulus));
    }
  }
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto g : generators) {
      const auto y =
          static_cast<std::uint64_t>(static_cast<u128>(x) * g % modulus);
      if (group.insert(y).second) {
        frontier.push_back(y);
      }
    }
  }
  return {modulus, {group.begin(), group.end()}};
}

std::vector<GaloisLevel> GaloisLevel::all_subgroups(std::uint64_t modulus) {
  const auto units = full(modulus).members();
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> queue{trivial(modulus).members()};
  seen.insert(queue.front());
  // Every subgroup is reached by adjoining one generator at a time.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto u : units) {
      auto gens = queue[i];
      gens.push_back(u);
      auto next = generated_by(modulus, gens).members();
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<GaloisLevel> result;
  for (const auto& members : seen) {
    result.emplace_back(modulus, members);
  }
  std::sort(result.begin(), result.end(),
            [](const GaloisLevel& x, const GaloisLevel& y) {
              if (x.members().size() != y.members().size()) {
                return x.members().size() < y.members().size();
              }
              return x.members() < y.members();
            });
  return result;
}

std::uint64_t GaloisLevel::action_level() const noexcept {
  return std::lcm<std::uint64_t>(2, modulus_);
}

Root galois_act(std::uint64_t g, std::uint64_t modulus, const Root& z) {
  if (modulus == 0) {
    throw ArgumentError("modulus must be positive");
  }
  g %= modulus;
  if (std::gcd(g, modulus) != 1 && modulus != 1) {
    throw ArgumentError(std::to_string(g) + " is not a unit mod " +
                        std::to_string(modulus));
  }
  if (z.is_zero()) {
    return z;
  }
  const std::uint64_t level = std::lcm<std::uint64_t>(2, modulus);
  if (level % z.denominator() != 0) {
    throw ArgumentError("root " + z.to_string() +
                        " is outside the action level " + std::to_string(level));
  }
  // Lift to a unit mod lcm(2, N).
  std::uint64_t lift = g;
  if (modulus % 2 == 1 && lift % 2 == 0) {
    lift += modulus;
  }
  return z.pow(lift);
}

CycloMonoid fixed_submonoid(const GaloisLevel& gamma) {
  const std::uint64_t level = gamma.action_level();
  std::uint64_t fixed_level = 1;
  for (std::uint64_t k = 0; k < level; ++k) {
    const Root z = Root::fraction(k, level);
    const bool fixed = std::all_of(
        gamma.members().begin(), gamma.members().end(), [&](std::uint64_t g) {
          return galois_act(g, gamma.modulus(), z) == z;
        });
    if (fixed) {
      fixed_level = std::lcm(fixed_level, order(z));
    }
  }
  return CycloMonoid::level(fixed_level);
}

std::vector<Root> orbit(const GaloisLevel& gamma, const Root& z) {
  std::vector<Root> result;
  result.reserve(gamma.members().size());
  for (auto g : gamma.members()) {
    result.push_back(galois_act(g, gamma.modulus(), z));
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) {
        n /= p;
      }
      result -= result / p;
    }
  }
  if (n > 1) {
    result -= result / n;
  }
  return result;
}

}  // namespace f1curve
