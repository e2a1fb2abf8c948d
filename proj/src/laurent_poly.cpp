#include "tensorbraid/laurent_poly.hpp"

#include <algorithm>

namespace tensorbraid {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial{}, constant);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& coefficient) {
  LaurentPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace_back(m, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m) {
      p.terms_.back().second += c;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!c.is_zero()) {
      p.terms_.emplace_back(m, std::move(c));
    }
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.front().first.is_one() && terms_.front().second.is_one();
}

bool LaurentPoly::only_q() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.first.x == 0 && t.first.y == 0 && t.first.z == 0;
  });
}

int LaurentPoly::min_q_exponent() const {
  int result = 0;
  for (const auto& t : terms_) result = std::min(result, t.first.q);
  return result;
}

namespace {

// Merges two sorted term lists; sign selects addition or subtraction.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, subtract ? -ib->second : ib->second);
      ++ib;
    } else {
      Rational c = subtract ? ia->second - ib->second : ia->second + ib->second;
      if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentPoly::monomial(a.terms_[0].first * b.terms_[0].first,
                                 a.terms_[0].second * b.terms_[0].second);
  }
  std::vector<LaurentPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
  }
  return LaurentPoly::from_terms(std::move(products));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p = a;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1 || !terms_.front().second.is_one() || terms_.front().first.x != 0 ||
        terms_.front().first.y != 0 || terms_.front().first.z != 0) {
      throw std::domain_error("negative power of a non-invertible Laurent polynomial");
    }
    return q_power(terms_.front().first.q * exponent);
  }
  LaurentPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

namespace {

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto add = [&out](const char* name, long e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  add("q", m.q);
  add("x", m.x);
  add("y", m.y);
  add("z", m.z);
  return out;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + '*' + mono;
    }
  }
  return out;
}

}  // namespace tensorbraid
