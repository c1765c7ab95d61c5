#pragma once

// Points of the strong congruence space of P^1 over F = mu_m u {0}.
//
// Besides the generic point, [0] = <X/Y ~ 0> and [inf] = <0 ~ Y/X>, every
// point is [n, lambda] = <(X/Y)^n ~ lambda> for some n >= 1 and nonzero
// lambda in F. Which pairs (n, lambda) occur is decided by whether
// F[T^+-1] / <T^n ~ lambda> is a domain. Writing lambda = s^a for the
// generator s = 1/m, its unit group is <s, t | s^m, t^n = s^a>, abelian of
// order m*n and cyclic exactly when gcd(m, n, a) = 1.
//
// Specialization: y is in the closure of x iff the congruence of x is
// contained in that of y. The generic point (trivial congruence) is dense.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "f1curve/cyclotomic.hpp"
#include "f1curve/ledger.hpp"
#include "f1curve/monoid.hpp"

namespace f1curve {

class ProjPoint {
 public:
  enum class Kind { kGeneric, kZero, kInfinity, kPt };

  [[nodiscard]] static ProjPoint generic() noexcept {
    return ProjPoint(Kind::kGeneric, 0, Root::unity());
  }
  [[nodiscard]] static ProjPoint zero() noexcept {
    return ProjPoint(Kind::kZero, 0, Root::unity());
  }
  [[nodiscard]] static ProjPoint infinity() noexcept {
    return ProjPoint(Kind::kInfinity, 0, Root::unity());
  }
  // [n, lambda]; n >= 1, lambda nonzero. Validity over a particular F is
  // checked by is_valid_point, not here.
  [[nodiscard]] static ProjPoint pt(std::uint64_t n, Root lambda);
  // [zeta] = [1, zeta], a point over F1^inf.
  [[nodiscard]] static ProjPoint root_point(Root zeta) { return pt(1, zeta); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_pt() const noexcept { return kind_ == Kind::kPt; }
  [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
  [[nodiscard]] const Root& lambda() const noexcept { return lambda_; }

  // "generic", "[0]", "[inf]", "[n]" when lambda = 1 and F = F1, otherwise
  // "[n,k/m]".
  [[nodiscard]] std::string to_string(const CycloMonoid& f) const;
  // Inverse of to_string; also accepts "[n,1]" and "[n,-1]".
  [[nodiscard]] static ProjPoint parse(std::string_view text);

  bool operator==(const ProjPoint&) const = default;
  // generic < [0] < [inf] < [n, lambda] by (n, lambda).
  std::strong_ordering operator<=>(const ProjPoint& other) const noexcept;

 private:
  ProjPoint(Kind kind, std::uint64_t n, Root lambda) noexcept
      : kind_(kind), n_(n), lambda_(lambda) {}

  Kind kind_;
  std::uint64_t n_;
  Root lambda_;
};

struct PointUniverse {
  CycloMonoid field;
  std::uint64_t bound;
};

// gcd(m, n, a) = 1 where lambda = s^a. Over F1^inf only n = 1 occurs.
// Throws ArgumentError if lambda is zero or not in F.
[[nodiscard]] bool is_valid_point(const CycloMonoid& f, std::uint64_t n,
                                  const Root& lambda);

// The defining check: close <T^n ~ lambda> inside the finite carrier
// F[T^+-1] / <T^(n * ord(lambda)) ~ 1>, take the quotient, and require it to
// be a domain into which F still embeds. Finite F only.
[[nodiscard]] bool is_valid_point_by_quotient(const CycloMonoid& f,
                                              std::uint64_t n,
                                              const Root& lambda);

// The literal hypothesis "no divisor d > 1 of n and theta in F with
// theta^d = lambda". Kept for comparison only: it rejects [n] for every
// n > 1 over F1 and is not used for classification.
[[nodiscard]] bool literal_root_condition(const CycloMonoid& f,
                                          std::uint64_t n, const Root& lambda);

// Whether p is a point of the space over f.
[[nodiscard]] bool is_point_of(const CycloMonoid& f, const ProjPoint& p);

// generic, [0], [inf], then every valid [n, lambda] with n <= bound in
// canonical order. Finite F and bound >= 1.
[[nodiscard]] std::vector<ProjPoint> enumerate_points(const PointUniverse& u);

// Phi_F: [zeta] -> [ord_F(zeta), zeta^ord_F(zeta)]; generic, [0], [inf] fixed.
[[nodiscard]] ProjPoint phi_map(const CycloMonoid& f, const ProjPoint& p);

// Psi_F: [n, lambda] -> [n * ord(lambda)] over F1; others fixed.
[[nodiscard]] ProjPoint psi_map(const CycloMonoid& f, const ProjPoint& p);

// Phi_F^-1(target) in canonical order. Finite F.
[[nodiscard]] std::vector<ProjPoint> fiber_phi(const CycloMonoid& f,
                                               const ProjPoint& target);

struct OrbitImage {
  std::vector<ProjPoint> orbit;
  ProjPoint image;
};

struct GaloisQuotientReport {
  CycloMonoid fixed_field;
  std::vector<OrbitImage> table;
  // Phi is constant on every orbit.
  bool well_defined = true;
  // Distinct orbits have distinct images.
  bool injective = true;
  // Every point of the target reachable at this level is hit. Reachable:
  // generic, [0], [inf], and valid [n, lambda] with n * ord(lambda) | N.
  bool surjective = true;
  std::vector<ProjPoint> missed;

  [[nodiscard]] bool is_bijection() const noexcept {
    return well_defined && injective && surjective;
  }
};

// b_Gamma on the roots of order dividing N, plus generic, [0] and [inf].
[[nodiscard]] GaloisQuotientReport galois_quotient(const GaloisLevel& gamma);

// y lies in the closure of x. Both must be points over f.
[[nodiscard]] bool specializes(const CycloMonoid& f, const ProjPoint& x,
                               const ProjPoint& y);

// Same relation for two [n, lambda] points, decided by comparing the two
// congruence closures inside a common finite quotient of F[T^+-1].
[[nodiscard]] bool specializes_by_quotient(const CycloMonoid& f,
                                           const ProjPoint& x,
                                           const ProjPoint& y);

// deg([0]) = deg([inf]) = 1, deg([n]) = phi(n). Points over F1 only.
[[nodiscard]] DegreeLedger point_degree(const ProjPoint& p);

// Residue monoid kappa(p): F for [0] and [inf]; for [n, lambda] the group
// with zero F[T^+-1] / <T^n ~ lambda>, cyclic of order m*n. Finite F;
// the generic point has an infinite residue monoid and is rejected.
[[nodiscard]] FiniteMonoid residue_monoid(const CycloMonoid& f,
                                          const ProjPoint& p);

// Image under the null-ideal map to P^1.
enum class NullIdealPoint { kGenericOfP1, kZeroIdealPoint, kInfinityIdealPoint };

[[nodiscard]] NullIdealPoint null_ideal_point(const ProjPoint& p);
[[nodiscard]] std::string to_string(NullIdealPoint p);

// Smirnov's P^1 over F1 is {[0], [inf]} u {[n] : n >= 1}; the map into the
// strong congruence space sends each to the point of the same name.
struct SmirnovPoint {
  enum class Kind { kZero, kInfinity, kN };
  Kind kind;
  std::uint64_t n = 0;
};
[[nodiscard]] ProjPoint smirnov_inclusion(const SmirnovPoint& x);
// The F1^inf-rational points of Smirnov's line: 0, inf, and roots lambda.
[[nodiscard]] ProjPoint smirnov_inclusion_inf(const Root& lambda);

}  // namespace f1curve
