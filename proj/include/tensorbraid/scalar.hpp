#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "tensorbraid/rational.hpp"

namespace tensorbraid {

// Numeric field used when specializing symbolic coefficients.  Instantiated
// for double, std::complex<double> and exact Rational.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return r.to_double(); }
  static double magnitude(double v) { return std::abs(v); }
  static bool is_zero(double v) { return v == 0.0; }
  static std::string name() { return "double"; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool exact = false;
  static std::complex<double> from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
  static double magnitude(const std::complex<double>& v) { return std::abs(v); }
  static bool is_zero(const std::complex<double>& v) { return v == std::complex<double>{}; }
  static std::string name() { return "complex"; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static double magnitude(const Rational& v) { return abs(v).to_double(); }
  static bool is_zero(const Rational& v) { return v.is_zero(); }
  static std::string name() { return "rational"; }
};

template <class T>
T integer_power(const T& base, int exponent) {
  if (exponent < 0) {
    if (ScalarTraits<T>::is_zero(base)) throw std::domain_error("zero raised to a negative power");
    return T(1) / integer_power(base, -exponent);
  }
  T result(1);
  T square = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result = result * square;
    if (e > 1) square = square * square;
  }
  return result;
}

}  // namespace tensorbraid
