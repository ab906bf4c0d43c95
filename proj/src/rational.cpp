#include "tnncert/rational.hpp"

#include <cctype>
#include <ostream>

#include "tnncert/errors.hpp"

namespace tnncert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw InputError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InputError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  mpz_class num;
  mpz_class den{1};
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto p = s.substr(0, slash);
    const auto q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad(text);
    num = mpz_class(std::string(p), 10);
    den = mpz_class(std::string(q), 10);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad(text);
    }
    std::string digits = std::string(whole) + std::string(frac);
    num = mpz_class(digits, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(s)) bad(text);
    num = mpz_class(std::string(s), 10);
  }
  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const { return value_.get_str(10); }
std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace tnncert
