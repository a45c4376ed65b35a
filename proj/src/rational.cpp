#include "msop/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace msop {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s.front() == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Density Density::ratio(const Rational& weight_gain, const Rational& cost_gain) {
  if (sgn(cost_gain) == 0) return infinite();
  return finite(weight_gain / cost_gain);
}

const Rational& Density::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite density");
  return value_;
}

Density Density::scaled(const Rational& factor) const {
  if (infinite_) return *this;
  return finite(value_ * factor);
}

Density Density::reciprocal() const {
  if (infinite_) return finite(0);
  if (sgn(value_) == 0) return infinite();
  return finite(1 / value_);
}

bool operator==(const Density& a, const Density& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Density& a, const Density& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Density::str() const { return infinite_ ? std::string("inf") : to_string(value_); }

}  // namespace msop
