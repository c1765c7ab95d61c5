#include "f1curve/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

#include "f1curve/arithmetic.hpp"
#include "f1curve/errors.hpp"
#include "f1curve/projline.hpp"

namespace f1curve::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kMaxPrimeBound = 1'000'000;
constexpr std::uint64_t kMaxProjlineParam = 10'000;
constexpr std::uint64_t kMaxProjlinePoints = 1'000'000;
constexpr std::uint64_t kMaxSectionHeight = 100'000;

std::atomic<bool> arch_note_printed{false};

json ramification_cell(const Ramification& e) {
  if (const auto* n = std::get_if<std::uint64_t>(&e)) {
    return *n;
  }
  return std::get<DegreeLedger>(e).to_string();
}

double ratio(const DegreeLedger& num, const DegreeLedger& den) {
  return num.evaluate() / den.evaluate();
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) {
      continue;
    }
    out.push_back(p);
    for (std::uint64_t k = p * p; k <= n; k += p) {
      composite[k] = true;
    }
  }
  return out;
}

void check_projline(const ProjlineOptions& opt) {
  if (opt.m < 1 || opt.m > kMaxProjlineParam) {
    throw ArgumentError("--m must be between 1 and 10000");
  }
  if (opt.bound < 1 || opt.bound > kMaxProjlineParam) {
    throw ArgumentError("--bound must be between 1 and 10000");
  }
}

}  // namespace

void note_arch_sign(std::ostream& notes) {
  if (!arch_note_printed.exchange(true)) {
    notes << "note: |q| > 1, so the archimedean ramification index is taken as "
             "|log|q|| instead of -log|q|\n";
  }
}

Report map_report(const Rat& q, std::uint64_t prime_bound, Format format,
                  std::ostream& notes) {
  if (q.is_exceptional()) {
    throw ExceptionalNumberError(q.to_string());
  }
  if (prime_bound > kMaxPrimeBound) {
    throw MagnitudeError("--primes is limited to 10^6");
  }
  const std::vector<Place> x_places = X_of(q);
  std::set<Place> places(x_places.begin(), x_places.end());
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    places.insert(Place::finite(p));
  }
  const DefectSum sum = defect_sum(q);
  const bool adjusted = arch_sign_adjusted(q);
  if (adjusted) {
    note_arch_sign(notes);
  }

  Report r;
  r.add_summary("q", q.to_string());
  r.add_summary("deg", sum.degree.to_string());
  r.add_summary("deg_value", number(sum.degree.evaluate()));
  r.add_summary("defect_numerator", sum.numerator.to_string());
  r.add_summary("S", number(sum.value));
  r.add_summary("arch_sign_adjusted", adjusted);
  r.columns = {"place", "image", "e", "deg", "defect_numerator", "delta", "in_X"};
  const CycloMonoid f1 = CycloMonoid::level(1);
  for (const Place& x : places) {
    const RamifiedPlace rp = ramified_place(q, x);
    const bool in_x = std::binary_search(x_places.begin(), x_places.end(), x);
    r.rows.push_back({x.to_string(), rp.image.to_string(f1), ramification_cell(rp.e),
                      place_degree(x).to_string(), rp.defect_numerator.to_string(),
                      number(ratio(rp.defect_numerator, sum.degree)), in_x});
  }
  if (format == Format::kCsv) {
    r.rows.push_back({"total", "", "", sum.degree.to_string(), sum.numerator.to_string(),
                      number(sum.value), ""});
  }
  return r;
}

Report scan_report(const ScanConfig& cfg, std::ostream& notes) {
  const ScanResult result = run_scan(cfg);
  // Every scanned height has some q with |q| > 1.
  note_arch_sign(notes);
  Report r;
  r.add_summary("min", cfg.height_min);
  r.add_summary("max", cfg.height_max);
  r.add_summary("top", cfg.top_k);
  r.add_summary("scanned", result.scanned);
  r.add_summary("skipped", result.skipped);
  r.columns = {"rank", "q", "a", "b", "S", "deg", "numerator", "degree"};
  std::uint64_t rank = 0;
  for (const ScanEntry& e : result.top) {
    r.rows.push_back({++rank, std::to_string(e.a) + "/" + std::to_string(e.b), e.a, e.b,
                      number(e.sum.value), number(e.sum.degree.evaluate()),
                      e.sum.numerator.to_string(), e.sum.degree.to_string()});
  }
  return r;
}

Report abc_report(const Integer& a, const Integer& b, const Integer& c,
                  std::ostream& notes) {
  if (a < 1 || b < 1 || c < 1) {
    throw ArgumentError("abc triple must be positive");
  }
  if (a + b != c) {
    throw ArgumentError("abc triple must satisfy a + b = c");
  }
  if (boost::multiprecision::gcd(a, b) != 1) {
    throw ArgumentError("abc triple must be coprime");
  }
  if (a > b) {
    throw ArgumentError("abc triple must have a <= b");
  }
  const Rat q(c, b);
  const DefectSum sum = defect_sum(q);
  if (arch_sign_adjusted(q)) {
    note_arch_sign(notes);
  }
  const Integer rad = radical(factorize(Integer(a * b * c)));
  const double log_c = DegreeLedger::log_of(c).evaluate();
  const double log_rad = DegreeLedger::log_of(rad).evaluate();

  Report r;
  r.add_summary("a", a.str());
  r.add_summary("b", b.str());
  r.add_summary("c", c.str());
  r.add_summary("q", q.to_string());
  r.add_summary("S", number(sum.value));
  r.add_summary("deg", sum.degree.to_string());
  r.add_summary("deg_value", number(sum.degree.evaluate()));
  r.add_summary("defect_numerator", sum.numerator.to_string());
  r.add_summary("rad", rad.str());
  r.add_summary("quality", number(log_c / log_rad));
  return r;
}

Report projline_enumerate(const ProjlineOptions& opt) {
  check_projline(opt);
  if (opt.m * opt.bound > kMaxProjlinePoints) {
    throw MagnitudeError("enumeration limited to m * bound <= 10^6");
  }
  const CycloMonoid f = CycloMonoid::level(opt.m);
  Report r;
  r.add_summary("field", f.name());
  r.add_summary("bound", opt.bound);
  const auto points = enumerate_points({f, opt.bound});
  r.add_summary("count", points.size());
  r.columns = {"point"};
  for (const ProjPoint& p : points) {
    r.rows.push_back({p.to_string(f)});
  }
  return r;
}

Report projline_fibers(const ProjlineOptions& opt, const std::string& target) {
  check_projline(opt);
  const CycloMonoid f = CycloMonoid::level(opt.m);
  const ProjPoint p = ProjPoint::parse(target);
  if (!is_point_of(f, p)) {
    throw ArgumentError(target + " is not a point over " + f.name());
  }
  if (p.is_pt() && p.n() * order(p.lambda()) > opt.bound * opt.m) {
    throw ArgumentError("roots in the fiber over " + target +
                        " have order above m * bound");
  }
  const auto fiber = fiber_phi(f, p);
  Report r;
  r.add_summary("field", f.name());
  r.add_summary("target", p.to_string(f));
  r.add_summary("size", fiber.size());
  r.columns = {"root"};
  for (const ProjPoint& z : fiber) {
    r.rows.push_back({z.is_pt() ? z.lambda().to_string()
                                : z.to_string(CycloMonoid::infinite())});
  }
  return r;
}

Report projline_quotient(const ProjlineOptions& opt,
                         const std::vector<std::uint64_t>& generators) {
  check_projline(opt);
  if (opt.bound > 1000) {
    throw MagnitudeError("quotient is limited to level N = bound <= 1000");
  }
  const GaloisLevel gamma = GaloisLevel::generated_by(opt.bound, generators);
  const GaloisQuotientReport report = galois_quotient(gamma);
  const CycloMonoid inf = CycloMonoid::infinite();
  Report r;
  r.add_summary("level", opt.bound);
  std::string members;
  for (std::uint64_t g : gamma.members()) {
    members += (members.empty() ? "" : " ") + std::to_string(g);
  }
  r.add_summary("gamma", members);
  r.add_summary("fixed_field", report.fixed_field.name());
  r.add_summary("well_defined", report.well_defined);
  r.add_summary("injective", report.injective);
  r.add_summary("surjective", report.surjective);
  r.add_summary("bijection", report.is_bijection());
  std::string missed;
  for (const ProjPoint& p : report.missed) {
    missed += (missed.empty() ? "" : " ") + p.to_string(report.fixed_field);
  }
  r.add_summary("missed", missed);
  r.columns = {"orbit", "image"};
  for (const OrbitImage& row : report.table) {
    std::string orbit;
    for (const ProjPoint& p : row.orbit) {
      orbit += (orbit.empty() ? "" : " ") + p.to_string(inf);
    }
    r.rows.push_back({orbit, row.image.to_string(report.fixed_field)});
  }
  return r;
}

Report projline_closure(const ProjlineOptions& opt, const std::string& x_text,
                        const std::string& y_text) {
  check_projline(opt);
  const CycloMonoid f = CycloMonoid::level(opt.m);
  const ProjPoint x = ProjPoint::parse(x_text);
  const ProjPoint y = ProjPoint::parse(y_text);
  for (const ProjPoint* p : {&x, &y}) {
    if (!is_point_of(f, *p)) {
      throw ArgumentError(p->to_string(CycloMonoid::infinite()) +
                          " is not a point over " + f.name());
    }
    if (p->is_pt() && p->n() > opt.bound) {
      throw ArgumentError("point " + p->to_string(f) + " exceeds --bound");
    }
  }
  const bool y_in_x = specializes(f, x, y);
  const bool x_in_y = specializes(f, y, x);
  Report r;
  r.add_summary("field", f.name());
  r.add_summary("x", x.to_string(f));
  r.add_summary("y", y.to_string(f));
  r.add_summary("y_in_closure_of_x", y_in_x);
  r.add_summary("x_in_closure_of_y", x_in_y);
  if (x.is_pt() && y.is_pt()) {
    const bool agree = specializes_by_quotient(f, x, y) == y_in_x &&
                       specializes_by_quotient(f, y, x) == x_in_y;
    r.add_summary("quotient_check", agree ? "agrees" : "DISAGREES");
  } else {
    r.add_summary("quotient_check", "n/a");
  }
  std::string conclusion;
  if (x == y) {
    conclusion = "same point";
  } else if (y_in_x != x_in_y) {
    const ProjPoint& inner = y_in_x ? y : x;
    const ProjPoint& outer = y_in_x ? x : y;
    conclusion = inner.to_string(f) + " lies in the closure of " + outer.to_string(f) +
                 ", so {" + outer.to_string(f) + "} is not closed: the space is not T1";
  } else {
    conclusion = "neither point lies in the closure of the other";
  }
  r.add_summary("conclusion", conclusion);
  return r;
}

Report sections_report(const std::vector<std::string>& excluded, std::uint64_t height) {
  if (height < 1) {
    throw ArgumentError("--height must be at least 1");
  }
  if (height > kMaxSectionHeight) {
    throw MagnitudeError("--height is limited to 10^5");
  }
  std::vector<Place> places;
  for (const std::string& name : excluded) {
    places.push_back(Place::parse(name));
  }
  const GlobalSections sections(places);
  std::string names;
  for (const Place& p : sections.excluded()) {
    names += (names.empty() ? "" : " ") + p.to_string();
  }
  const auto members = sections.enumerate(height);
  Report r;
  r.add_summary("excluded", names.empty() ? "none" : names);
  r.add_summary("height", height);
  r.add_summary("count", members.size() + 1);
  r.columns = {"lambda"};
  r.rows.push_back({"0"});
  for (const Rat& q : members) {
    r.rows.push_back({q.b() == 1 ? q.a().str() : q.to_string()});
  }
  return r;
}

}  // namespace f1curve::cli
