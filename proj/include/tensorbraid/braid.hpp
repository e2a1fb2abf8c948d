#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tensorbraid {

// Index i >= 1 of the Artin generator sigma_i.
using Generator = std::uint16_t;

// Word in the Artin generators of the positive braid monoid.  The empty word
// is the identity braid.
class PositiveWord {
 public:
  PositiveWord() = default;
  PositiveWord(std::initializer_list<Generator> letters);
  explicit PositiveWord(std::vector<Generator> letters);

  [[nodiscard]] std::span<const Generator> letters() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] Generator max_index() const;
  // Smallest n with the word in B_n: max index + 1, or 1 for the empty word.
  [[nodiscard]] std::size_t strand_count() const { return static_cast<std::size_t>(max_index()) + 1; }

  // Space-separated generator indices, e.g. "1 2 1"; the empty word prints as "".
  [[nodiscard]] std::string to_string() const;
  static PositiveWord parse(std::string_view text);

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;
  friend auto operator<=>(const PositiveWord&, const PositiveWord&) = default;

 private:
  std::vector<Generator> letters_;
};

PositiveWord compose(const PositiveWord& first, const PositiveWord& second);
// sigma_i -> sigma_{i+shift} letterwise.
PositiveWord shift_word(const PositiveWord& word, unsigned shift);
// sigma_i -> sigma_{a-i}; every letter must satisfy i <= a - 1.
PositiveWord flip_word(const PositiveWord& word, unsigned a);

// Permutation braid: a positive braid in which any two strands cross at most
// once, encoded by its permutation in one-line notation on zero-based strands.
// Trailing fixed points are trimmed, so the encoding does not depend on the
// ambient strand count.
class SimpleElement {
 public:
  SimpleElement() = default;
  static SimpleElement generator(Generator i);
  static SimpleElement from_images(std::vector<std::uint8_t> images);

  [[nodiscard]] std::span<const std::uint8_t> images() const { return images_; }
  [[nodiscard]] bool is_identity() const { return images_.empty(); }
  [[nodiscard]] std::size_t length() const;  // number of crossings

  // Generators i with the element = X * sigma_i (right descents).
  [[nodiscard]] bool has_final(Generator i) const;
  // Generators i with the element = sigma_i * X (left descents).
  [[nodiscard]] bool has_initial(Generator i) const;
  [[nodiscard]] std::vector<Generator> finishing_set() const;
  [[nodiscard]] std::vector<Generator> starting_set() const;

  // this * sigma_i; requires !has_final(i).
  void append_generator(Generator i);
  // sigma_i^{-1} * this; requires has_initial(i).
  void strip_initial(Generator i);

  // A reduced word for this element.
  [[nodiscard]] PositiveWord word() const;

  friend bool operator==(const SimpleElement&, const SimpleElement&) = default;
  friend auto operator<=>(const SimpleElement&, const SimpleElement&) = default;

 private:
  [[nodiscard]] std::uint8_t image(std::size_t pos) const {
    return pos < images_.size() ? images_[pos] : static_cast<std::uint8_t>(pos);
  }
  void ensure_size(std::size_t n);
  void trim();

  std::vector<std::uint8_t> images_;
};

// Left-greedy Garside normal form of a positive braid.
class NormalForm {
 public:
  NormalForm() = default;
  // Validates left-weightedness and the absence of identity factors.
  explicit NormalForm(std::vector<SimpleElement> factors);

  [[nodiscard]] const std::vector<SimpleElement>& factors() const { return factors_; }
  [[nodiscard]] bool is_identity() const { return factors_.empty(); }
  [[nodiscard]] std::size_t length() const;

  // this * s, renormalized.
  void multiply_right(const SimpleElement& s);
  void multiply_right(const NormalForm& other);

  // Canonical representative word (concatenated reduced words of the factors).
  [[nodiscard]] PositiveWord word() const;
  // Compact byte encoding used as a hash key; injective on normal forms.
  [[nodiscard]] std::string key() const;

  static bool is_left_weighted(const SimpleElement& first, const SimpleElement& second);

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  std::vector<SimpleElement> factors_;
};

NormalForm normal_form(const PositiveWord& word);
// Equality of positive braids.
bool braid_equal(const PositiveWord& a, const PositiveWord& b);

}  // namespace tensorbraid

template <>
struct std::hash<tensorbraid::NormalForm> {
  std::size_t operator()(const tensorbraid::NormalForm& nf) const noexcept {
    return std::hash<std::string>{}(nf.key());
  }
};
