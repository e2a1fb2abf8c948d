#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tensorbraid/rational.hpp"
#include "tensorbraid/scalar.hpp"

namespace tensorbraid {

// Exponent vector of a monomial q^q x^x y^y z^z.  Only q may be negative.
struct Monomial {
  int q = 0;
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.q + b.q, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  [[nodiscard]] bool is_one() const { return q == 0 && x == 0 && y == 0 && z == 0; }
};

template <class T>
struct Assignment {
  std::optional<T> q;
  std::optional<T> x;
  std::optional<T> y;
  std::optional<T> z;
};

// Raised when a specialization divides by zero (q = 0 against a negative q power).
class SingularSpecialization : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Laurent polynomial in q with polynomial dependence on x, y, z, over the
// rationals.  Terms are kept sorted by monomial, without zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Monomial& m, const Rational& coefficient = Rational(1));
  static LaurentPoly q_power(int exponent) { return monomial({exponent, 0, 0, 0}); }
  static LaurentPoly x() { return monomial({0, 1, 0, 0}); }
  static LaurentPoly y() { return monomial({0, 0, 1, 0}); }
  static LaurentPoly z() { return monomial({0, 0, 0, 1}); }
  // Builds from arbitrary terms; merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  // True when no x, y or z appears.
  [[nodiscard]] bool only_q() const;
  [[nodiscard]] int min_q_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Raises to a non-negative integer power (or any power for a single monomial
  // with unit coefficient, e.g. q^{-2}).
  [[nodiscard]] LaurentPoly pow(int exponent) const;

  // Substitutes numbers for the parameters present.  Every parameter that
  // appears must be assigned.
  template <class T>
  [[nodiscard]] T eval(const Assignment<T>& at) const;

  // Human-readable form, e.g. "1 - q^-2", "2*q", "-3/2*x*y^2".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

template <class T>
T LaurentPoly::eval(const Assignment<T>& at) const {
  T total(0);
  for (const auto& [m, c] : terms_) {
    T value = ScalarTraits<T>::from_rational(c);
    auto factor = [&](const std::optional<T>& v, int exponent, const char* name) {
      if (exponent == 0) return;
      if (!v) throw std::invalid_argument(std::string("no value assigned to parameter ") + name);
      if (exponent < 0 && ScalarTraits<T>::is_zero(*v)) {
        throw SingularSpecialization(std::string("singular specialization: ") + name + " = 0");
      }
      value = value * integer_power(*v, exponent);
    };
    factor(at.q, m.q, "q");
    factor(at.x, static_cast<int>(m.x), "x");
    factor(at.y, static_cast<int>(m.y), "y");
    factor(at.z, static_cast<int>(m.z), "z");
    total = total + value;
  }
  return total;
}

}  // namespace tensorbraid
