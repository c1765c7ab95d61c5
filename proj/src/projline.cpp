#include "f1curve/projline.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

std::uint64_t parse_positive(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ArgumentError("expected a positive integer, got '" +
                        std::string(text) + "'");
  }
  return value;
}

void require_point(const CycloMonoid& f, const ProjPoint& p) {
  if (!is_point_of(f, p)) {
    throw ArgumentError("not a point over " + f.name());
  }
}

// Carrier F[T^+-1] / <T^period ~ 1>; element ids follow
// monoids::laurent_quotient.
ElementId laurent_id(std::uint64_t m, std::uint64_t period, std::uint64_t j,
                     std::uint64_t i) {
  return static_cast<ElementId>(1 + (i % period) * m + (j % m));
}

Congruence point_congruence(const FiniteMonoid& carrier, std::uint64_t m,
                            std::uint64_t period, const CycloMonoid& f,
                            const ProjPoint& p) {
  const ElementId t_power = laurent_id(m, period, 0, p.n());
  const ElementId lambda = laurent_id(m, period, f.exponent_of(p.lambda()), 0);
  return congruence_closure(carrier, {{t_power, lambda}});
}

}  // namespace

// ProjPoint

ProjPoint ProjPoint::pt(std::uint64_t n, Root lambda) {
  if (n == 0) {
    throw ArgumentError("[n, lambda] needs n >= 1");
  }
  if (lambda.is_zero()) {
    throw ArgumentError("[n, lambda] needs a nonzero lambda");
  }
  return {Kind::kPt, n, lambda};
}

std::string ProjPoint::to_string(const CycloMonoid& f) const {
  switch (kind_) {
    case Kind::kGeneric:
      return "generic";
    case Kind::kZero:
      return "[0]";
    case Kind::kInfinity:
      return "[inf]";
    case Kind::kPt:
      break;
  }
  if (f == CycloMonoid::level(1) && lambda_ == Root::unity()) {
    return "[" + std::to_string(n_) + "]";
  }
  return "[" + std::to_string(n_) + "," + lambda_.to_string() + "]";
}

ProjPoint ProjPoint::parse(std::string_view text) {
  if (text == "generic") {
    return generic();
  }
  if (text == "[0]") {
    return zero();
  }
  if (text == "[inf]") {
    return infinity();
  }
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
    throw ArgumentError("cannot parse point '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    return pt(parse_positive(body), Root::unity());
  }
  return pt(parse_positive(body.substr(0, comma)),
            Root::parse(body.substr(comma + 1)));
}

std::strong_ordering ProjPoint::operator<=>(
    const ProjPoint& other) const noexcept {
  if (auto c = kind_ <=> other.kind_; c != 0) {
    return c;
  }
  if (auto c = n_ <=> other.n_; c != 0) {
    return c;
  }
  return lambda_ <=> other.lambda_;
}

// Classification

bool is_valid_point(const CycloMonoid& f, std::uint64_t n, const Root& lambda) {
  if (n == 0) {
    throw ArgumentError("n must be positive");
  }
  if (lambda.is_zero() || !f.contains(lambda)) {
    throw ArgumentError("lambda = " + lambda.to_string() +
                        " is not a unit of " + f.name());
  }
  if (!f.is_finite()) {
    return n == 1;
  }
  const std::uint64_t m = f.finite_level();
  return std::gcd(std::gcd(m, n), f.exponent_of(lambda)) == 1;
}

bool is_valid_point_by_quotient(const CycloMonoid& f, std::uint64_t n,
                                const Root& lambda) {
  if (n == 0) {
    throw ArgumentError("n must be positive");
  }
  if (lambda.is_zero() || !f.contains(lambda)) {
    throw ArgumentError("lambda = " + lambda.to_string() +
                        " is not a unit of " + f.name());
  }
  const std::uint64_t m = f.finite_level();
  const std::uint64_t period = n * order(lambda);
  const FiniteMonoid carrier = monoids::laurent_quotient(m, period, 0);
  const Congruence c =
      point_congruence(carrier, m, period, f, ProjPoint::pt(n, lambda));
  for (std::uint64_t j = 1; j < m; ++j) {
    if (c.related(laurent_id(m, period, 0, 0), laurent_id(m, period, j, 0))) {
      return false;
    }
  }
  return is_domain(quotient(carrier, c));
}

bool literal_root_condition(const CycloMonoid& f, std::uint64_t n,
                            const Root& lambda) {
  const auto units = f.units();
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    for (const Root& theta : units) {
      if (theta.pow(d) == lambda) {
        return false;
      }
    }
  }
  return true;
}

bool is_point_of(const CycloMonoid& f, const ProjPoint& p) {
  if (!p.is_pt()) {
    return true;
  }
  if (!f.contains(p.lambda())) {
    return false;
  }
  return is_valid_point(f, p.n(), p.lambda());
}

std::vector<ProjPoint> enumerate_points(const PointUniverse& u) {
  if (!u.field.is_finite()) {
    throw ArgumentError(
        "enumeration over F1^inf needs a bound on root order; enumerate a "
        "finite level instead");
  }
  if (u.bound == 0) {
    throw ArgumentError("enumeration bound must be at least 1");
  }
  std::vector<ProjPoint> points{ProjPoint::generic(), ProjPoint::zero(),
                                ProjPoint::infinity()};
  const auto units = u.field.units();
  for (std::uint64_t n = 1; n <= u.bound; ++n) {
    for (const Root& lambda : units) {
      if (is_valid_point(u.field, n, lambda)) {
        points.push_back(ProjPoint::pt(n, lambda));
      }
    }
  }
  return points;
}

// Maps

ProjPoint phi_map(const CycloMonoid& f, const ProjPoint& p) {
  if (!p.is_pt()) {
    return p;
  }
  if (p.n() != 1) {
    throw ArgumentError("Phi is defined on points [zeta] of F1^inf");
  }
  const std::uint64_t n = ord_rel(p.lambda(), f);
  return ProjPoint::pt(n, p.lambda().pow(n));
}

ProjPoint psi_map(const CycloMonoid& f, const ProjPoint& p) {
  require_point(f, p);
  if (!p.is_pt()) {
    return p;
  }
  return ProjPoint::pt(p.n() * order(p.lambda()), Root::unity());
}

std::vector<ProjPoint> fiber_phi(const CycloMonoid& f,
                                 const ProjPoint& target) {
  if (!target.is_pt()) {
    return {target};
  }
  require_point(f, target);
  const std::uint64_t level = target.n() * f.finite_level();
  std::vector<ProjPoint> fiber;
  // ord_F(zeta) = n forces zeta^(n m) = 1.
  for (std::uint64_t k = 0; k < level; ++k) {
    const Root zeta = Root::fraction(k, level);
    if (ord_rel(zeta, f) == target.n() && zeta.pow(target.n()) ==
                                              target.lambda()) {
      fiber.push_back(ProjPoint::root_point(zeta));
    }
  }
  std::sort(fiber.begin(), fiber.end());
  fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());
  return fiber;
}

GaloisQuotientReport galois_quotient(const GaloisLevel& gamma) {
  const std::uint64_t level = gamma.modulus();
  GaloisQuotientReport report{fixed_submonoid(gamma), {}, true, true, true, {}};
  const CycloMonoid& f = report.fixed_field;

  for (const auto& p :
       {ProjPoint::generic(), ProjPoint::zero(), ProjPoint::infinity()}) {
    report.table.push_back({{p}, phi_map(f, p)});
  }

  std::vector<Root> roots;
  for (std::uint64_t k = 0; k < level; ++k) {
    roots.push_back(Root::fraction(k, level));
  }
  std::sort(roots.begin(), roots.end());
  std::set<Root> seen;
  for (const Root& z : roots) {
    if (seen.count(z) != 0) {
      continue;
    }
    OrbitImage entry{{}, phi_map(f, ProjPoint::root_point(z))};
    for (const Root& w : orbit(gamma, z)) {
      seen.insert(w);
      entry.orbit.push_back(ProjPoint::root_point(w));
      if (phi_map(f, ProjPoint::root_point(w)) != entry.image) {
        report.well_defined = false;
      }
    }
    report.table.push_back(std::move(entry));
  }

  std::set<ProjPoint> images;
  for (const auto& entry : report.table) {
    if (!images.insert(entry.image).second) {
      report.injective = false;
    }
  }

  std::vector<ProjPoint> reachable{ProjPoint::generic(), ProjPoint::zero(),
                                   ProjPoint::infinity()};
  for (std::uint64_t n = 1; n <= level; ++n) {
    if (level % n != 0) {
      continue;
    }
    for (const Root& lambda : f.units()) {
      if (level % (n * order(lambda)) == 0 && is_valid_point(f, n, lambda)) {
        reachable.push_back(ProjPoint::pt(n, lambda));
      }
    }
  }
  for (const auto& p : reachable) {
    if (images.count(p) == 0) {
      report.surjective = false;
      report.missed.push_back(p);
    }
  }
  return report;
}

// Topology

bool specializes(const CycloMonoid& f, const ProjPoint& x, const ProjPoint& y) {
  if (!is_point_of(f, x) || !is_point_of(f, y)) {
    throw ArgumentError("points do not share the coefficient monoid " +
                        f.name());
  }
  using Kind = ProjPoint::Kind;
  if (x.kind() == Kind::kGeneric) {
    return true;
  }
  if (y.kind() == Kind::kGeneric) {
    return false;
  }
  if (x.kind() != Kind::kPt || y.kind() != Kind::kPt) {
    return x == y;
  }
  // <T^n ~ lambda> is contained in <T^N ~ Lambda> iff N | n and
  // Lambda^(n/N) = lambda.
  return x.n() % y.n() == 0 && y.lambda().pow(x.n() / y.n()) == x.lambda();
}

bool specializes_by_quotient(const CycloMonoid& f, const ProjPoint& x,
                             const ProjPoint& y) {
  if (!x.is_pt() || !y.is_pt()) {
    throw ArgumentError("quotient comparison needs two [n, lambda] points");
  }
  require_point(f, x);
  require_point(f, y);
  const std::uint64_t m = f.finite_level();
  const std::uint64_t period = std::lcm(x.n() * order(x.lambda()),
                                        y.n() * order(y.lambda()));
  const FiniteMonoid carrier = monoids::laurent_quotient(m, period, 0);
  return point_congruence(carrier, m, period, f, x)
      .is_contained_in(point_congruence(carrier, m, period, f, y));
}

// Degrees and residues

DegreeLedger point_degree(const ProjPoint& p) {
  switch (p.kind()) {
    case ProjPoint::Kind::kGeneric:
      throw ArgumentError("the generic point has no degree");
    case ProjPoint::Kind::kZero:
    case ProjPoint::Kind::kInfinity:
      return DegreeLedger::constant(1);
    case ProjPoint::Kind::kPt:
      break;
  }
  if (p.lambda() != Root::unity()) {
    throw ArgumentError("degrees are defined for points over F1 only");
  }
  return DegreeLedger::constant(
      Coefficient(static_cast<std::int64_t>(euler_phi(p.n()))));
}

FiniteMonoid residue_monoid(const CycloMonoid& f, const ProjPoint& p) {
  const std::uint64_t m = f.finite_level();
  switch (p.kind()) {
    case ProjPoint::Kind::kGeneric:
      throw ArgumentError(
          "the generic point has an infinite residue monoid Frac(F[T])");
    case ProjPoint::Kind::kZero:
    case ProjPoint::Kind::kInfinity:
      return monoids::cyclic_with_zero(m);
    case ProjPoint::Kind::kPt:
      break;
  }
  require_point(f, p);
  return monoids::laurent_quotient(m, p.n(), f.exponent_of(p.lambda()));
}

NullIdealPoint null_ideal_point(const ProjPoint& p) {
  switch (p.kind()) {
    case ProjPoint::Kind::kZero:
      return NullIdealPoint::kZeroIdealPoint;
    case ProjPoint::Kind::kInfinity:
      return NullIdealPoint::kInfinityIdealPoint;
    default:
      return NullIdealPoint::kGenericOfP1;
  }
}

std::string to_string(NullIdealPoint p) {
  switch (p) {
    case NullIdealPoint::kZeroIdealPoint:
      return "zero-ideal-point";
    case NullIdealPoint::kInfinityIdealPoint:
      return "infinity-ideal-point";
    case NullIdealPoint::kGenericOfP1:
      break;
  }
  return "generic-of-P1";
}

ProjPoint smirnov_inclusion(const SmirnovPoint& x) {
  switch (x.kind) {
    case SmirnovPoint::Kind::kZero:
      return ProjPoint::zero();
    case SmirnovPoint::Kind::kInfinity:
      return ProjPoint::infinity();
    case SmirnovPoint::Kind::kN:
      break;
  }
  return ProjPoint::pt(x.n, Root::unity());
}

ProjPoint smirnov_inclusion_inf(const Root& lambda) {
  return lambda.is_zero() ? ProjPoint::zero() : ProjPoint::root_point(lambda);
}

}  // namespace f1curve
