#include "tensorbraid/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace tensorbraid {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = digits[i];
    const bool sign_ok = i == 0 && (ch == '-' || ch == '+') && digits.size() > 1;
    if (!sign_ok && (ch < '0' || ch > '9')) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  }
  std::string s(digits);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(trim(text.substr(0, slash)), whole);
    const mpz_class den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(whole) + "'");
    return Rational(mpq_class(num, den));
  }

  // Decimal with optional fraction and exponent, parsed exactly.
  int exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class exp = parse_integer(text.substr(e + 1), whole);
    if (!exp.fits_sint_p()) throw std::invalid_argument("exponent out of range: '" + std::string(whole) + "'");
    exponent = static_cast<int>(exp.get_si());
    text = text.substr(0, e);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    digits = std::string(text.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<int>(frac.size());
    if (digits == "-" || digits == "+" || digits.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
  } else {
    digits = std::string(text);
  }
  mpq_class value(parse_integer(digits, whole));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    value /= scale;
  } else {
    value *= scale;
  }
  return Rational(value);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite value has no rational form");
  return Rational(mpq_class(value));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero rational");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

}  // namespace tensorbraid
