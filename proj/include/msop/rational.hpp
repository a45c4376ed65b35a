#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace msop {

/// Exact arbitrary-precision rational. Every cost, weight, probability and
/// density in the library is one of these; there is no floating point on any
/// comparison path.
using Rational = mpq_class;

/// Parses `p/q` or an integer literal (optional leading '-'). Decimals are
/// rejected. Throws std::invalid_argument on malformed text or zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical `p/q` form; integers are written without a denominator.
std::string to_string(const Rational& value);

/// Marginal density of a set with respect to a base. Infinite exactly when the
/// cost increment vanishes.
class Density {
 public:
  Density() = default;

  static Density infinite() {
    Density d;
    d.infinite_ = true;
    return d;
  }
  static Density finite(Rational value) {
    Density d;
    d.value_ = std::move(value);
    return d;
  }
  /// weight_gain / cost_gain, or +inf when cost_gain == 0.
  static Density ratio(const Rational& weight_gain, const Rational& cost_gain);

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  /// Multiplies a finite density by a nonnegative factor; +inf stays +inf.
  Density scaled(const Rational& factor) const;

  /// Reciprocal with the conventions 1/inf = 0 and 1/0 = inf.
  Density reciprocal() const;

  friend bool operator==(const Density& a, const Density& b);
  friend std::strong_ordering operator<=>(const Density& a, const Density& b);

  std::string str() const;

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

}  // namespace msop
