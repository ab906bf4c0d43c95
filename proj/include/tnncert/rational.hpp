#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tnncert {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so equality is structural.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}           // NOLINT(implicit)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p", "+p", "p/q" or a plain decimal such as "-1.25".
  /// Decimals are converted exactly ("0.5" is 1/2). Throws InputError.
  static Rational parse(std::string_view text);

  std::string to_string() const;
  std::string numerator_string() const;
  std::string denominator_string() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  const mpq_class& get() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace tnncert
