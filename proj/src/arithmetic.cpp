#include "f1curve/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

using boost::multiprecision::pow;
using boost::multiprecision::powm;

Integer abs_of(const Integer& n) { return n < 0 ? Integer(-n) : n; }

UInt128 residue(const Integer& n, UInt128 p) {
  Integer r = n % to_integer(p);
  if (r < 0) {
    r += to_integer(p);
  }
  return to_u128(r);
}

std::uint64_t valuation_of(Integer n, UInt128 p) {
  if (n == 0) {
    throw InvariantViolation("valuation of 0");
  }
  const Integer pp = to_integer(p);
  std::uint64_t v = 0;
  Integer q;
  Integer r;
  for (;;) {
    divide_qr(n, pp, q, r);
    if (r != 0) {
      return v;
    }
    n = q;
    ++v;
  }
}

void require_prime(UInt128 p) {
  if (!is_prime(p)) {
    throw ArgumentError(to_string(p) + " is not prime");
  }
}

void require_regular(const Rat& q) {
  if (q.is_exceptional()) {
    throw ExceptionalNumberError(q.to_string());
  }
}

// a * b^-1 mod p; p does not divide b.
UInt128 ratio_mod(const Rat& q, UInt128 p) {
  const UInt128 a = residue(q.a(), p);
  const UInt128 b = residue(q.b(), p);
  return mulmod(a, powmod(b, p - 2, p), p);
}

std::uint64_t ratio_order(const Rat& q, UInt128 p) {
  if (p == 2) {
    return 1;
  }
  const UInt128 n = multiplicative_order(ratio_mod(q, p), p);
  if (n > UINT64_MAX) {
    throw MagnitudeError("order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

// v_p(a^n - b^n) for p not dividing ab, so that p | a^n - b^n.
std::uint64_t power_difference_valuation(const Integer& a, const Integer& b,
                                         std::uint64_t n, UInt128 p) {
  if (n <= 64) {
    return valuation_of(pow(a, static_cast<unsigned>(n)) -
                            pow(b, static_cast<unsigned>(n)),
                        p);
  }
  // v_p(x) = v_p(x mod p^K) whenever x is nonzero mod p^K.
  const Integer pp = to_integer(p);
  Integer pk = pp;
  while (pk < (Integer(1) << 512)) {
    pk *= pp;
  }
  auto mod = [&](const Integer& x) {
    Integer r = x % pk;
    return r < 0 ? Integer(r + pk) : r;
  };
  const Integer e(n);
  const Integer ae = powm(mod(a), e, pk);
  const Integer be = powm(mod(b), e, pk);
  const Integer r = mod(Integer(ae - be));
  if (r != 0) {
    return valuation_of(r, p);
  }
  if (n > 100000) {
    throw MagnitudeError("a^n - b^n too large to evaluate exactly");
  }
  return valuation_of(pow(a, static_cast<unsigned>(n)) -
                          pow(b, static_cast<unsigned>(n)),
                      p);
}

// log(n) - log(rad(n)), skipping the primes in `skip`.
DegreeLedger excess(const Factorization& f, const Factorization& skip = {}) {
  DegreeLedger result;
  for (const auto& [p, e] : f) {
    const bool skipped =
        std::any_of(skip.begin(), skip.end(),
                    [&](const PrimePower& s) { return s.prime == p; });
    if (!skipped && e > 1) {
      result += DegreeLedger::log_prime(p, Coefficient(e - 1));
    }
  }
  return result;
}

}  // namespace

// Place

Place Place::finite(UInt128 p) {
  require_prime(p);
  return {Kind::kFinite, p};
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::kFinite:
      return f1curve::to_string(p_);
    case Kind::kArch:
      return "arch";
    case Kind::kTrivial:
      return "trivial";
  }
  return {};
}

Place Place::parse(std::string_view text) {
  if (text == "arch" || text == "inf") {
    return arch();
  }
  if (text == "trivial") {
    return trivial();
  }
  return finite(parse_u128(text));
}

std::strong_ordering Place::operator<=>(const Place& other) const noexcept {
  if (kind_ != other.kind_) {
    return kind_ <=> other.kind_;
  }
  return p_ <=> other.p_;
}

DegreeLedger place_degree(const Place& x) {
  switch (x.kind()) {
    case Place::Kind::kFinite:
      return DegreeLedger::log_prime(x.prime());
    case Place::Kind::kArch:
      return DegreeLedger::constant(1);
    case Place::Kind::kTrivial:
      break;
  }
  throw ArgumentError("the trivial place has no degree");
}

std::int64_t valuation(const Rat& q, UInt128 p) {
  require_prime(p);
  const auto va = valuation_of(q.a(), p);
  const auto vb = valuation_of(q.b(), p);
  return static_cast<std::int64_t>(va) - static_cast<std::int64_t>(vb);
}

ProjPoint place_map(const Rat& q, const Place& x) {
  require_regular(q);
  switch (x.kind()) {
    case Place::Kind::kTrivial:
      return ProjPoint::generic();
    case Place::Kind::kArch:
      return q.below_one() ? ProjPoint::zero() : ProjPoint::infinity();
    case Place::Kind::kFinite:
      break;
  }
  const UInt128 p = x.prime();
  if (residue(q.a(), p) == 0) {
    return ProjPoint::zero();
  }
  if (residue(q.b(), p) == 0) {
    return ProjPoint::infinity();
  }
  return ProjPoint::pt(ratio_order(q, p), Root::unity());
}

Ramification ramification(const Rat& q, const Place& x) {
  const ProjPoint image = place_map(q, x);
  switch (x.kind()) {
    case Place::Kind::kTrivial:
      throw ArgumentError("ramification is not defined at the trivial place");
    case Place::Kind::kArch: {
      const Integer a = q.abs_a();
      return q.below_one() ? DegreeLedger::log_of(q.b()) - DegreeLedger::log_of(a)
                           : DegreeLedger::log_of(a) - DegreeLedger::log_of(q.b());
    }
    case Place::Kind::kFinite:
      break;
  }
  const UInt128 p = x.prime();
  switch (image.kind()) {
    case ProjPoint::Kind::kZero:
      return valuation_of(q.a(), p);
    case ProjPoint::Kind::kInfinity:
      return valuation_of(q.b(), p);
    default:
      return power_difference_valuation(q.a(), q.b(), image.n(), p);
  }
}

DegreeLedger literal_arch_ramification(const Rat& q) {
  require_regular(q);
  return DegreeLedger::log_of(q.b()) - DegreeLedger::log_of(q.abs_a());
}

bool arch_sign_adjusted(const Rat& q) {
  require_regular(q);
  return !q.below_one();
}

DegreeLedger defect_numerator(const Ramification& e, const Place& x) {
  if (const auto* index = std::get_if<std::uint64_t>(&e)) {
    if (*index == 0) {
      throw InvariantViolation("ramification index 0");
    }
    return Coefficient(static_cast<std::int64_t>(*index - 1)) * place_degree(x);
  }
  // deg([inf]) = 1, so (e - 1) deg = e - 1.
  return std::get<DegreeLedger>(e) - place_degree(x);
}

RamifiedPlace ramified_place(const Rat& q, const Place& x) {
  ProjPoint image = place_map(q, x);
  Ramification e = ramification(q, x);
  DegreeLedger numerator = defect_numerator(e, x);
  return {x, image, std::move(e), std::move(numerator)};
}

DegreeLedger map_degree(const Rat& q) {
  require_regular(q);
  const Integer a = q.abs_a();
  DegreeLedger zeros;
  for (const auto& [p, e] : factorize(a)) {
    zeros += DegreeLedger::log_prime(p, Coefficient(e));
  }
  if (q.below_one()) {
    // v_arch(q) = -log|q| > 0 with deg([inf]) = 1.
    zeros += DegreeLedger::log_of(q.b()) - DegreeLedger::log_of(a);
  }
  return zeros;
}

DegreeLedger product_formula_ledger(const Rat& q) {
  std::set<UInt128> primes;
  for (const auto& [p, e] : factorize(q.abs_a())) {
    primes.insert(p);
  }
  for (const auto& [p, e] : factorize(q.b())) {
    primes.insert(p);
  }
  DegreeLedger total;
  for (UInt128 p : primes) {
    total += DegreeLedger::log_prime(p, Coefficient(valuation(q, p)));
  }
  // v_arch(q) deg([inf]) = -log|q|.
  total -= DegreeLedger::log_of(q.abs_a()) - DegreeLedger::log_of(q.b());
  return total;
}

bool product_formula_check(const Rat& q) {
  Integer num = 1;
  Integer den = 1;
  std::set<UInt128> primes;
  for (const auto& [p, e] : factorize(q.abs_a())) {
    primes.insert(p);
  }
  for (const auto& [p, e] : factorize(q.b())) {
    primes.insert(p);
  }
  for (UInt128 p : primes) {
    const auto v = valuation(q, p);
    const Integer power = pow(to_integer(p), static_cast<unsigned>(v < 0 ? -v : v));
    (v > 0 ? num : den) *= power;
  }
  return num == q.abs_a() && den == q.b() && product_formula_ledger(q).is_zero();
}

bool product_formula_check(std::int64_t a, std::int64_t b) {
  const std::uint64_t abs_a = a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1
                                    : static_cast<std::uint64_t>(a);
  if (a == 0 || b < 1) {
    throw ArgumentError("product_formula_check expects a != 0 and b >= 1");
  }
  if (abs_a > kSmallFactorLimit || static_cast<std::uint64_t>(b) > kSmallFactorLimit) {
    return product_formula_check(Rat(Integer(a), Integer(b)));
  }
  const auto ub = static_cast<std::uint32_t>(b);
  const auto ua = static_cast<std::uint32_t>(abs_a);
  // Finite places: v_p(q) from the two factorizations, merged by prime.
  const SmallFactorization fa = factorize_small(ua);
  const SmallFactorization fb = factorize_small(ub);
  std::array<std::uint32_t, 16> primes{};
  std::array<std::int32_t, 16> coeff{};
  unsigned n = 0;
  auto add = [&](std::uint32_t p, std::int32_t c) {
    for (unsigned i = 0; i < n; ++i) {
      if (primes[i] == p) {
        coeff[i] += c;
        return;
      }
    }
    primes[n] = p;
    coeff[n++] = c;
  };
  for (unsigned i = 0; i < fa.size; ++i) {
    add(fa.primes[i], fa.exponents[i]);
  }
  for (unsigned i = 0; i < fb.size; ++i) {
    add(fb.primes[i], -static_cast<std::int32_t>(fb.exponents[i]));
  }
  // prod p^v_p(q) = |a| / b
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (unsigned i = 0; i < n; ++i) {
    for (std::int32_t k = 0; k < (coeff[i] < 0 ? -coeff[i] : coeff[i]); ++k) {
      (coeff[i] > 0 ? num : den) *= primes[i];
    }
  }
  if (num != abs_a || den != static_cast<std::uint64_t>(b)) {
    return false;
  }
  // Archimedean place: -log|q| = log b - log|a|, from fresh factorizations.
  const SmallFactorization ga = factorize_small(ua);
  const SmallFactorization gb = factorize_small(ub);
  for (unsigned i = 0; i < ga.size; ++i) {
    add(ga.primes[i], -static_cast<std::int32_t>(ga.exponents[i]));
  }
  for (unsigned i = 0; i < gb.size; ++i) {
    add(gb.primes[i], gb.exponents[i]);
  }
  return std::all_of(coeff.begin(), coeff.begin() + n,
                     [](std::int32_t c) { return c == 0; });
}

std::vector<Place> X_of(const Rat& q) {
  require_regular(q);
  const Integer a = q.a();
  const Integer b = q.b();
  const Factorization minus = factorize(abs_of(a - b));
  std::vector<Place> places;
  auto push_all = [&](const Factorization& f) {
    for (const auto& [p, e] : f) {
      places.push_back(Place::finite(p));
    }
  };
  push_all(factorize(abs_of(a)));
  push_all(factorize(b));
  push_all(minus);  // [1]-fiber: p | a - b
  for (const auto& [p, e] : factorize(abs_of(a + b))) {
    // [2]-fiber needs order exactly 2: p | a + b but p does not divide a - b.
    const bool in_minus =
        std::any_of(minus.begin(), minus.end(),
                    [&](const PrimePower& m) { return m.prime == p; });
    if (!in_minus) {
      places.push_back(Place::finite(p));
    }
  }
  places.push_back(Place::arch());
  std::sort(places.begin(), places.end());
  if (std::adjacent_find(places.begin(), places.end()) != places.end()) {
    throw InvariantViolation("X(q) fibers overlap for q = " + q.to_string());
  }
  return places;
}

DefectSum defect_sum(const Rat& q) {
  DefectSum result;
  for (const Place& x : X_of(q)) {
    result.numerator += ramified_place(q, x).defect_numerator;
  }
  result.degree = map_degree(q);
  result.value = result.numerator.evaluate() / result.degree.evaluate();
  return result;
}

DefectSum defect_sum_closed_form(const Rat& q) {
  require_regular(q);
  const Integer& a = q.a();
  const Integer& b = q.b();
  const Factorization fa = factorize(abs_of(a));
  const Factorization fb = factorize(b);
  const Factorization minus = factorize(abs_of(a - b));
  const Factorization plus = factorize(abs_of(a + b));

  DefectSum result;
  result.numerator = excess(fa) + excess(fb) + excess(minus) + excess(plus, minus);
  const DegreeLedger log_a = DegreeLedger::log_of(fa);
  const DegreeLedger log_b = DegreeLedger::log_of(fb);
  const bool below = q.below_one();
  result.numerator += below ? log_b - log_a : log_a - log_b;
  result.numerator -= DegreeLedger::constant(1);
  result.degree = below ? log_b : log_a;
  result.value = result.numerator.evaluate() / result.degree.evaluate();
  return result;
}

// Prime congruences

std::string PrimeCongruence::to_string() const {
  const std::string t = chart == Chart::kT ? "T" : "T^-1";
  if (to_zero) {
    return "<" + t + " ~ 0>";
  }
  if (n == 1) {
    return "<" + t + " ~ 1>";
  }
  const std::string power =
      chart == Chart::kT ? "T^" + std::to_string(n) : "T^-" + std::to_string(n);
  return "<" + power + " ~ 1>";
}

ProjPoint PrimeCongruence::point() const {
  if (to_zero) {
    return chart == Chart::kT ? ProjPoint::zero() : ProjPoint::infinity();
  }
  return ProjPoint::pt(n, Root::unity());
}

PrimeCongruence strong_congruence_of_prime(const Rat& q, UInt128 p) {
  require_prime(p);
  if (residue(q.b(), p) == 0) {
    throw ChartError(to_string(p) + " divides the denominator of " +
                     q.to_string() + "; use the T^-1 chart");
  }
  if (residue(q.a(), p) == 0) {
    return {PrimeCongruence::Chart::kT, true, 0};
  }
  return {PrimeCongruence::Chart::kT, false, ratio_order(q, p)};
}

PrimeCongruence strong_congruence_of_prime_inverse(const Rat& q, UInt128 p) {
  require_prime(p);
  if (residue(q.a(), p) == 0) {
    throw ChartError(to_string(p) + " divides the numerator of " +
                     q.to_string() + "; use the T chart");
  }
  if (residue(q.b(), p) == 0) {
    return {PrimeCongruence::Chart::kTInverse, true, 0};
  }
  // ord(b/a) = ord(a/b)
  return {PrimeCongruence::Chart::kTInverse, false, ratio_order(q.inverse(), p)};
}

ResidueEmbedding residue_embedding_check(const Rat& q, UInt128 p) {
  require_regular(q);
  require_prime(p);
  if (residue(q.a(), p) == 0 || residue(q.b(), p) == 0) {
    throw ArgumentError(to_string(p) + " divides the numerator or denominator of " +
                        q.to_string());
  }
  ResidueEmbedding result;
  result.n = ratio_order(q, p);
  if (result.n > 10'000'000) {
    throw MagnitudeError("residue embedding check limited to n <= 10^7");
  }
  const UInt128 r = ratio_mod(q, p);
  std::set<UInt128> images;
  UInt128 x = 1;
  bool injective = true;
  for (std::uint64_t i = 0; i < result.n; ++i) {
    injective = injective && x != 0 && images.insert(x).second;
    x = mulmod(x, r, p);
  }
  // T^n = 1 in mu_n, so multiplicativity needs r^n = 1.
  result.embeds = injective && x == 1;
  return result;
}

// Global sections

GlobalSections::GlobalSections(std::vector<Place> excluded)
    : excluded_(std::move(excluded)) {
  for (const Place& x : excluded_) {
    if (x.kind() == Place::Kind::kTrivial) {
      throw ArgumentError("the generic point cannot be removed from an open set");
    }
    arch_excluded_ = arch_excluded_ || x.kind() == Place::Kind::kArch;
  }
  std::sort(excluded_.begin(), excluded_.end());
  excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
}

bool GlobalSections::excluded_prime(UInt128 p) const {
  return std::binary_search(excluded_.begin(), excluded_.end(), Place::finite(p));
}

bool GlobalSections::contains(const Rat& lambda) const {
  if (!arch_excluded_ && lambda.abs_a() > lambda.b()) {
    return false;
  }
  const auto fb = factorize(lambda.b());
  return std::all_of(fb.begin(), fb.end(),
                     [&](const PrimePower& pp) { return excluded_prime(pp.prime); });
}

std::vector<Rat> GlobalSections::enumerate(std::uint64_t bound) const {
  std::vector<Rat> out;
  std::vector<std::uint64_t> allowed_b;
  for (std::uint64_t h = 1; h <= bound; ++h) {
    const auto fh = factorize(h);
    const bool h_allowed =
        std::all_of(fh.begin(), fh.end(),
                    [&](const PrimePower& pp) { return excluded_prime(pp.prime); });
    if (h_allowed) {
      allowed_b.push_back(h);
    }
    auto emit = [&](std::uint64_t a, std::uint64_t b) {
      if (std::gcd(a, b) != 1) {
        return;
      }
      for (int sign : {1, -1}) {
        Rat q(Integer(a) * sign, Integer(b));
        if (contains(q)) {
          out.push_back(std::move(q));
        }
      }
    };
    // Height h: |a| < h with b = h, then |a| = h with b <= h.
    if (h_allowed) {
      for (std::uint64_t a = 1; a < h; ++a) {
        emit(a, h);
      }
    }
    if (arch_excluded_ || h == 1) {
      for (std::uint64_t b : allowed_b) {
        emit(h, b);
      }
    } else if (h_allowed) {
      emit(h, h);
    }
  }
  return out;
}

}  // namespace f1curve
