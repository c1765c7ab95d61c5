#include "f1curve/ledger.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

std::int64_t parse_i64(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ArgumentError("not an integer: " + std::string(text));
  }
  return value;
}

Coefficient parse_coefficient(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Coefficient(parse_i64(text));
  }
  const auto den = parse_i64(text.substr(slash + 1));
  if (den == 0) {
    throw ArgumentError("zero denominator in coefficient");
  }
  return {parse_i64(text.substr(0, slash)), den};
}

}  // namespace

std::string to_string(const Coefficient& c) {
  if (c.denominator() == 1) {
    return std::to_string(c.numerator());
  }
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

DegreeLedger DegreeLedger::constant(Coefficient c) {
  DegreeLedger result;
  result.arch_ = c;
  return result;
}

DegreeLedger DegreeLedger::log_prime(UInt128 p, Coefficient c) {
  DegreeLedger result;
  result.add_term(p, c);
  return result;
}

DegreeLedger DegreeLedger::log_of(const Factorization& f) {
  DegreeLedger result;
  result.terms_.reserve(f.size());
  for (const auto& [p, e] : f) {
    result.terms_.push_back({p, Coefficient(e)});
  }
  return result;
}

DegreeLedger DegreeLedger::log_of(const Integer& n) {
  return log_of(factorize(n));
}

Coefficient DegreeLedger::coefficient(UInt128 p) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const Term& t, UInt128 key) { return t.prime < key; });
  return it != terms_.end() && it->prime == p ? it->coefficient
                                              : Coefficient(0);
}

void DegreeLedger::add_term(UInt128 p, Coefficient c) {
  if (c == Coefficient(0)) {
    return;
  }
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), p,
      [](const Term& t, UInt128 key) { return t.prime < key; });
  if (it != terms_.end() && it->prime == p) {
    it->coefficient += c;
    if (it->coefficient == Coefficient(0)) {
      terms_.erase(it);
    }
  } else {
    terms_.insert(it, {p, c});
  }
}

DegreeLedger& DegreeLedger::operator+=(const DegreeLedger& other) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      const Coefficient c = a->coefficient + b->coefficient;
      if (c != Coefficient(0)) {
        merged.push_back({a->prime, c});
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  arch_ += other.arch_;
  return *this;
}

DegreeLedger& DegreeLedger::operator-=(const DegreeLedger& other) {
  return *this += -DegreeLedger(other);
}

DegreeLedger& DegreeLedger::operator*=(Coefficient c) {
  if (c == Coefficient(0)) {
    terms_.clear();
    arch_ = 0;
    return *this;
  }
  for (auto& t : terms_) {
    t.coefficient *= c;
  }
  arch_ *= c;
  return *this;
}

double DegreeLedger::evaluate() const {
  double sum = 0.0;
  for (const auto& [p, c] : terms_) {
    sum += boost::rational_cast<double>(c) *
           std::log(static_cast<double>(p));
  }
  return sum + boost::rational_cast<double>(arch_);
}

std::string DegreeLedger::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += f1curve::to_string(p) + "^" + f1curve::to_string(c);
  }
  if (arch_ != Coefficient(0)) {
    if (!out.empty()) {
      out += ' ';
    }
    out += "arch^" + f1curve::to_string(arch_);
  }
  return out;
}

DegreeLedger DegreeLedger::parse(std::string_view text) {
  DegreeLedger result;
  if (text == "0") {
    return result;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = std::min(text.find(' ', pos), text.size());
    const auto token = text.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty()) {
      continue;
    }
    const auto caret = token.find('^');
    if (caret == std::string_view::npos) {
      throw ArgumentError("ledger term without '^': " + std::string(token));
    }
    const auto base = token.substr(0, caret);
    const Coefficient c = parse_coefficient(token.substr(caret + 1));
    if (base == "arch") {
      result.arch_ += c;
    } else {
      result.add_term(parse_u128(base), c);
    }
  }
  return result;
}

}  // namespace f1curve
