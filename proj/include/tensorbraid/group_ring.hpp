#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tensorbraid/braid.hpp"
#include "tensorbraid/laurent_poly.hpp"

namespace tensorbraid {

// Handle of an interned positive braid.  Equal handles denote equal braids.
struct BraidId {
  std::uint32_t value = 0;
  friend auto operator<=>(const BraidId&, const BraidId&) = default;
};

// Process-wide registry of normal forms.  Basis products, shifts and flips are
// memoized here.  All members are safe to call concurrently.
class BraidTable {
 public:
  static BraidTable& instance();

  static constexpr BraidId identity() { return BraidId{0}; }

  BraidId intern(const NormalForm& nf);
  BraidId intern(const PositiveWord& word) { return intern(normal_form(word)); }

  [[nodiscard]] NormalForm normal_form_of(BraidId id) const;
  [[nodiscard]] PositiveWord word_of(BraidId id) const;
  [[nodiscard]] std::size_t length_of(BraidId id) const;
  // Largest generator index in the braid (0 for the identity).
  [[nodiscard]] Generator max_index_of(BraidId id) const;

  BraidId product(BraidId a, BraidId b);
  BraidId shift(BraidId id, unsigned ell);
  BraidId flip(BraidId id, unsigned a);

  [[nodiscard]] std::size_t size() const;

 private:
  BraidTable();
  ~BraidTable();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Element of the ring of the positive braid monoid with Laurent-polynomial
// coefficients.  Terms are sorted by handle and never carry a zero coefficient.
class RingElement {
 public:
  using Term = std::pair<BraidId, LaurentPoly>;

  RingElement() = default;
  RingElement(const LaurentPoly& scalar);  // NOLINT(google-explicit-constructor)
  RingElement(int scalar) : RingElement(LaurentPoly(scalar)) {}  // NOLINT(google-explicit-constructor)

  static RingElement zero() { return {}; }
  static RingElement one() { return RingElement(1); }
  static RingElement basis(BraidId id, const LaurentPoly& coefficient = LaurentPoly(1));
  static RingElement word(const PositiveWord& w, const LaurentPoly& coefficient = LaurentPoly(1));
  static RingElement generator(Generator i) { return word(PositiveWord{i}); }
  static RingElement from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] LaurentPoly coefficient(const PositiveWord& w) const;
  // Smallest n with every basis braid in B_n.
  [[nodiscard]] std::size_t strand_count() const;
  [[nodiscard]] bool only_q_coefficients() const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement& operator*=(const RingElement& other) { return *this = *this * other; }
  friend bool operator==(const RingElement&, const RingElement&) = default;

  [[nodiscard]] RingElement scaled(const LaurentPoly& c) const;
  // Linear extension of sigma_i -> sigma_{i+ell}.
  [[nodiscard]] RingElement shifted(unsigned ell) const;
  // Linear extension of sigma_i -> sigma_{a-i}; every basis braid must lie in B_a.
  [[nodiscard]] RingElement flipped(unsigned a) const;

  // (word, coefficient) pairs sorted lexicographically by word.
  [[nodiscard]] std::vector<std::pair<PositiveWord, LaurentPoly>> sorted_terms() const;
  // e.g. "1 + (1 - q^-2)*[1 2]"; the identity word prints as bare coefficient.
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace tensorbraid
