#include "f1curve/rational.hpp"

#include <utility>

#include "f1curve/errors.hpp"

namespace f1curve {

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() || digits.size() > 200) {
    throw ArgumentError("not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ArgumentError("not an integer: '" + std::string(text) + "'");
    }
  }
  const Integer value{std::string(digits)};
  return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rat::Rat(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (b_ == 0) {
    throw ArgumentError("zero denominator");
  }
  if (a_ == 0) {
    throw ArgumentError("q must be nonzero");
  }
  if (b_ < 0) {
    a_ = -a_;
    b_ = -b_;
  }
  const Integer g = boost::multiprecision::gcd(a_, b_);
  if (g != 1) {
    a_ /= g;
    b_ /= g;
  }
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text));
  }
  return {parse_integer(text.substr(0, slash)),
          parse_integer(text.substr(slash + 1))};
}

Integer Rat::height() const {
  Integer m = abs_a();
  return m < b_ ? b_ : m;
}

bool Rat::is_exceptional() const { return b_ == 1 && (a_ == 1 || a_ == -1); }

Rat Rat::inverse() const { return {b_ * sign(), abs_a()}; }

std::string Rat::to_string() const { return a_.str() + "/" + b_.str(); }

}  // namespace f1curve
