// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Oracles are brute force and live in this file or in
// oracles.hpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "f1curve/arithmetic.hpp"
#include "f1curve/cli/commands.hpp"
#include "f1curve/projline.hpp"
#include "oracles.hpp"

using namespace f1curve;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

DegreeLedger trial_division_ledger(std::uint64_t n) {
  DegreeLedger out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out += DegreeLedger::log_prime(d);
      n /= d;
    }
  }
  if (n > 1) {
    out += DegreeLedger::log_prime(n);
  }
  return out;
}

std::vector<std::uint64_t> naive_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) {
      out.push_back(n);
    }
  }
  return out;
}

std::uint64_t mod(std::int64_t x, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

// Reduced q = a/b of height <= h, both signs, excluding +-1.
void for_each_q(std::int64_t h, const std::function<void(std::int64_t, std::int64_t)>& fn) {
  for (std::int64_t b = 1; b <= h; ++b) {
    for (std::int64_t a = 1; a <= h; ++a) {
      if (std::gcd(a, b) != 1 || (a == 1 && b == 1)) {
        continue;
      }
      fn(a, b);
      fn(-a, b);
    }
  }
}

Outcome product_formula() {
  const std::int64_t limit = 10'000;
  std::uint64_t checked = 0;
  for (std::int64_t b = 1; b <= limit; ++b) {
    for (std::int64_t a = 1; a <= limit; ++a) {
      if (std::gcd(a, b) != 1) {
        continue;
      }
      for (std::int64_t s : {a, -a}) {
        if (!product_formula_check(s, b)) {
          return {false, fmt("fails at %lld/%lld", static_cast<long long>(s),
                             static_cast<long long>(b))};
        }
        ++checked;
      }
    }
  }
  // The general path on a sample, including q = +-1.
  for (const char* q : {"1", "-1", "8/9", "-9999/10000", "9973/9967"}) {
    if (!product_formula_check(Rat::parse(q))) {
      return {false, fmt("fails at %s", q)};
    }
  }
  return {true, fmt("%llu reduced q, every ledger zero", static_cast<unsigned long long>(checked))};
}

Outcome degree_identity() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
  int done = 0;
  while (done < 100'000) {
    const std::int64_t a = num(rng);
    const std::int64_t b = den(rng);
    if (a == 0) {
      continue;
    }
    const Rat q{Integer(a), Integer(b)};
    if (q.is_exceptional()) {
      continue;
    }
    const auto h = static_cast<std::uint64_t>(q.height());
    if (map_degree(q) != trial_division_ledger(h)) {
      return {false, "mismatch at " + q.to_string()};
    }
    ++done;
  }
  return {true, "100000 random q of height <= 10^6"};
}

Outcome classification() {
  int cases = 0;
  for (std::uint64_t m = 1; m <= 12; ++m) {
    const auto f = CycloMonoid::level(m);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      for (std::uint64_t a = 0; a < m; ++a) {
        const Root lambda = Root::fraction(a, m);
        if (is_valid_point(f, n, lambda) != is_valid_point_by_quotient(f, n, lambda)) {
          return {false, fmt("disagree at m=%llu n=%llu a=%llu", (unsigned long long)m,
                             (unsigned long long)n, (unsigned long long)a)};
        }
        ++cases;
      }
    }
  }
  return {true, fmt("%d triples (m, n, a), 100%% agreement", cases)};
}

Outcome euler_fibers() {
  const auto f1 = CycloMonoid::level(1);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto size = fiber_phi(f1, ProjPoint::pt(n, Root::unity())).size();
    if (size != f1curve::testing::naive_phi(n)) {
      return {false, fmt("n=%llu: fiber %zu", (unsigned long long)n, size)};
    }
  }
  return {true, "n = 1..200"};
}

Outcome galois_bijection() {
  int subgroups = 0;
  int failures = 0;
  std::string first;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (const GaloisLevel& gamma : GaloisLevel::all_subgroups(n)) {
      ++subgroups;
      const GaloisQuotientReport r = galois_quotient(gamma);
      if (r.is_bijection()) {
        continue;
      }
      ++failures;
      if (first.empty()) {
        std::string members;
        for (auto g : gamma.members()) {
          members += (members.empty() ? "" : ",") + std::to_string(g);
        }
        first = fmt("N=%llu Gamma={%s} F_Gamma=%s%s%s", (unsigned long long)n,
                    members.c_str(), r.fixed_field.name().c_str(),
                    r.injective ? "" : " not injective", r.surjective ? "" : " not surjective");
      }
    }
  }
  if (failures == 0) {
    return {true, fmt("%d subgroups", subgroups)};
  }
  return {false, fmt("b_Gamma is not a bijection for %d of %d subgroups; first: %s", failures,
                     subgroups, first.c_str())};
}

Outcome psi_homeomorphism() {
  const auto f1 = CycloMonoid::level(1);
  const auto f2 = CycloMonoid::level(2);
  const std::uint64_t bound = 100;
  std::vector<ProjPoint> domain;
  for (const auto& p : enumerate_points({f2, bound})) {
    if (p.kind() != ProjPoint::Kind::kGeneric &&
        (!p.is_pt() || p.n() * order(p.lambda()) <= bound)) {
      domain.push_back(p);
    }
  }
  auto codomain = enumerate_points({f1, bound});
  codomain.erase(codomain.begin());
  std::vector<ProjPoint> images;
  for (const auto& p : domain) {
    images.push_back(psi_map(f2, p));
  }
  std::sort(images.begin(), images.end());
  if (images != codomain) {
    return {false, "Psi is not a bijection on the truncation"};
  }
  int unreflected = 0;
  int unpreserved = 0;
  std::string example;
  for (const auto& x : domain) {
    for (const auto& y : domain) {
      const bool up = specializes(f2, x, y);
      const bool down = specializes(f1, psi_map(f2, x), psi_map(f2, y));
      if (up && !down) {
        ++unpreserved;
      }
      if (down && !up) {
        ++unreflected;
        if (example.empty() && x.is_pt() && y.is_pt() &&
            !specializes_by_quotient(f2, x, y)) {
          example = psi_map(f2, y).to_string(f1) + " in closure of " +
                    psi_map(f2, x).to_string(f1) + " but " + y.to_string(f2) +
                    " not in closure of " + x.to_string(f2);
        }
      }
    }
  }
  if (unreflected == 0 && unpreserved == 0) {
    return {true, fmt("bijection and order isomorphism on %zu points", domain.size())};
  }
  return {false, fmt("bijective and continuous, but %d specializations are not reflected "
                     "(%d not preserved), e.g. %s",
                     unreflected, unpreserved, example.c_str())};
}

Outcome non_t1() {
  const auto f2 = CycloMonoid::level(2);
  const auto x = ProjPoint::parse("[9,1]");
  const auto y = ProjPoint::parse("[3,1]");
  const bool xy = specializes(f2, x, y);
  const bool yx = specializes(f2, y, x);
  const bool qxy = specializes_by_quotient(f2, x, y);
  const bool qyx = specializes_by_quotient(f2, y, x);
  const bool pass = (xy != yx) && xy == qxy && yx == qyx;
  return {pass, fmt("[3,1] in closure of [9,1]: %s, [9,1] in closure of [3,1]: %s; "
                    "finite quotient %s",
                    xy ? "yes" : "no", yx ? "yes" : "no",
                    xy == qxy && yx == qyx ? "agrees" : "DISAGREES")};
}

Outcome defect_double_computation() {
  std::uint64_t count = 0;
  double worst = 0.0;
  double min_s = 1e300;
  std::string failure;
  for_each_q(1000, [&](std::int64_t a, std::int64_t b) {
    if (!failure.empty()) {
      return;
    }
    const Rat q{Integer(a), Integer(b)};
    const DefectSum x = defect_sum(q);
    const DefectSum y = defect_sum_closed_form(q);
    const double scale = std::max(std::abs(x.value), std::abs(y.value));
    const double rel = scale == 0.0 ? 0.0 : std::abs(x.value - y.value) / scale;
    worst = std::max(worst, rel);
    min_s = std::min(min_s, x.value);
    if (rel > 1e-9) {
      failure = q.to_string();
    }
    ++count;
  });
  if (!failure.empty()) {
    return {false, "disagree at " + failure};
  }
  return {true, fmt("%llu q, max relative difference %.2e (min S %.6f)",
                    (unsigned long long)count, worst, min_s)};
}

Outcome residue_embedding() {
  const auto primes = naive_primes(1000);
  // order[p][r] by repeated multiplication, inverse[p][b] by search
  std::map<std::uint64_t, std::vector<std::uint64_t>> orders;
  std::map<std::uint64_t, std::vector<std::uint64_t>> inverses;
  for (auto p : primes) {
    auto& ord = orders[p];
    auto& inv = inverses[p];
    ord.assign(p, 0);
    inv.assign(p, 0);
    for (std::uint64_t r = 1; r < p; ++r) {
      ord[r] = f1curve::testing::naive_order(r, p);
      for (std::uint64_t s = 1; s < p; ++s) {
        if (r * s % p == 1) {
          inv[r] = s;
          break;
        }
      }
    }
  }
  std::uint64_t pairs = 0;
  std::string failure;
  for_each_q(200, [&](std::int64_t a, std::int64_t b) {
    if (!failure.empty()) {
      return;
    }
    const Rat q{Integer(a), Integer(b)};
    for (auto p : primes) {
      const auto ra = mod(a, p);
      const auto rb = mod(b, p);
      if (ra == 0 || rb == 0) {
        continue;
      }
      const std::uint64_t naive = orders[p][ra * inverses[p][rb] % p];
      const std::uint64_t fast = strong_congruence_of_prime(q, p).n;
      const ProjPoint image = place_map(q, Place::finite(p));
      if (fast != naive || !image.is_pt() || image.n() != naive) {
        failure = fmt("%s at p=%llu", q.to_string().c_str(), (unsigned long long)p);
        return;
      }
      if (p < 100) {
        const ResidueEmbedding emb = residue_embedding_check(q, p);
        if (!emb.embeds || emb.n != naive) {
          failure = fmt("embedding %s at p=%llu", q.to_string().c_str(), (unsigned long long)p);
          return;
        }
      }
      ++pairs;
    }
  });
  if (!failure.empty()) {
    return {false, "mismatch: " + failure};
  }
  return {true, fmt("%llu pairs (q, p)", (unsigned long long)pairs)};
}

Outcome constants() {
  for (std::uint64_t bound : {1, 2, 3, 7, 10, 100, 1000, 10000}) {
    const cli::Report r = cli::sections_report({}, bound);
    std::vector<std::string> got;
    for (const auto& row : r.rows) {
      got.push_back(row[0].get<std::string>());
    }
    if (got != std::vector<std::string>{"0", "1", "-1"}) {
      return {false, fmt("bound %llu gives %zu sections", (unsigned long long)bound, got.size())};
    }
  }
  return {true, "{0, 1, -1} for bounds 1 to 10^4"};
}

Outcome determinism() {
  std::ostringstream notes;
  std::string reference;
  for (unsigned workers : {1u, 4u, 8u}) {
    cli::ScanConfig cfg;
    cfg.height_min = 2;
    cfg.height_max = 500;
    cfg.top_k = 20;
    cfg.workers = workers;
    std::ostringstream out;
    cli::scan_report(cfg, notes).render(cli::Format::kTable, out);
    if (workers == 1) {
      reference = out.str();
    } else if (out.str() != reference) {
      return {false, fmt("output differs at %u workers", workers)};
    }
  }
  return {true, "scan --min 2 --max 500 --top 20 identical at 1, 4, 8 workers"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "product formula", 60, product_formula},
      {2, "degree identity", 60, degree_identity},
      {3, "classification oracle agreement", 30, classification},
      {4, "Euler fiber law", 10, euler_fibers},
      {5, "Galois quotient bijection", 120, galois_bijection},
      {6, "Psi over F1^2 bijectivity and order isomorphism", 10, psi_homeomorphism},
      {7, "non-T1 witness", 0, non_t1},
      {8, "defect-sum double computation", 120, defect_double_computation},
      {9, "residue embedding", 60, residue_embedding},
      {10, "constants of the curve", 0, constants},
      {11, "scan determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += fmt(" [over the %.0f s limit]", c.limit_seconds);
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %2d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
