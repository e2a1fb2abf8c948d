#include "tensorbraid/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tensorbraid {

namespace {

void check_generator(long i) {
  if (i < 1 || i > 250) {
    throw std::invalid_argument("generator index out of range: " + std::to_string(i));
  }
}

}  // namespace

PositiveWord::PositiveWord(std::initializer_list<Generator> letters)
    : PositiveWord(std::vector<Generator>(letters)) {}

PositiveWord::PositiveWord(std::vector<Generator> letters) : letters_(std::move(letters)) {
  for (Generator g : letters_) check_generator(g);
}

Generator PositiveWord::max_index() const {
  return letters_.empty() ? Generator{0} : *std::max_element(letters_.begin(), letters_.end());
}

std::string PositiveWord::to_string() const {
  std::string out;
  for (Generator g : letters_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g);
  }
  return out;
}

PositiveWord PositiveWord::parse(std::string_view text) {
  std::vector<Generator> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t' || text[pos] == '\n') {
      ++pos;
      continue;
    }
    long value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw std::invalid_argument("malformed braid word: '" + std::string(text) + "'");
    }
    check_generator(value);
    letters.push_back(static_cast<Generator>(value));
    pos = static_cast<std::size_t>(end - text.data());
  }
  return PositiveWord(std::move(letters));
}

PositiveWord compose(const PositiveWord& first, const PositiveWord& second) {
  std::vector<Generator> letters(first.letters().begin(), first.letters().end());
  letters.insert(letters.end(), second.letters().begin(), second.letters().end());
  return PositiveWord(std::move(letters));
}

PositiveWord shift_word(const PositiveWord& word, unsigned shift) {
  std::vector<Generator> letters;
  letters.reserve(word.size());
  for (Generator g : word.letters()) letters.push_back(static_cast<Generator>(g + shift));
  return PositiveWord(std::move(letters));
}

PositiveWord flip_word(const PositiveWord& word, unsigned a) {
  std::vector<Generator> letters;
  letters.reserve(word.size());
  for (Generator g : word.letters()) {
    if (g >= a) {
      throw std::out_of_range("generator sigma_" + std::to_string(g) + " does not lie in B_" +
                              std::to_string(a));
    }
    letters.push_back(static_cast<Generator>(a - g));
  }
  return PositiveWord(std::move(letters));
}

// --- SimpleElement ---------------------------------------------------------

SimpleElement SimpleElement::generator(Generator i) {
  check_generator(i);
  SimpleElement s;
  s.append_generator(i);
  return s;
}

SimpleElement SimpleElement::from_images(std::vector<std::uint8_t> images) {
  std::vector<std::uint8_t> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw std::invalid_argument("not a permutation");
  }
  SimpleElement s;
  s.images_ = std::move(images);
  s.trim();
  return s;
}

std::size_t SimpleElement::length() const {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inversions;
    }
  }
  return inversions;
}

bool SimpleElement::has_final(Generator i) const { return image(i - 1U) > image(i); }

bool SimpleElement::has_initial(Generator i) const {
  // Value i-1 sits to the right of value i.
  if (static_cast<std::size_t>(i) >= images_.size()) return false;
  std::size_t pos_lo = 0;
  std::size_t pos_hi = 0;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] == i - 1U) pos_lo = p;
    if (images_[p] == i) pos_hi = p;
  }
  return pos_lo > pos_hi;
}

std::vector<Generator> SimpleElement::finishing_set() const {
  std::vector<Generator> out;
  for (std::size_t i = 1; i < images_.size(); ++i) {
    if (images_[i - 1] > images_[i]) out.push_back(static_cast<Generator>(i));
  }
  return out;
}

std::vector<Generator> SimpleElement::starting_set() const {
  std::vector<std::uint8_t> position(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) position[images_[p]] = static_cast<std::uint8_t>(p);
  std::vector<Generator> out;
  for (std::size_t i = 1; i < position.size(); ++i) {
    if (position[i - 1] > position[i]) out.push_back(static_cast<Generator>(i));
  }
  return out;
}

void SimpleElement::ensure_size(std::size_t n) {
  while (images_.size() < n) images_.push_back(static_cast<std::uint8_t>(images_.size()));
}

void SimpleElement::trim() {
  while (!images_.empty() && images_.back() == images_.size() - 1) images_.pop_back();
}

void SimpleElement::append_generator(Generator i) {
  ensure_size(static_cast<std::size_t>(i) + 1);
  std::swap(images_[i - 1U], images_[i]);
  trim();
}

void SimpleElement::strip_initial(Generator i) {
  for (auto& v : images_) {
    if (v == i - 1U) {
      v = static_cast<std::uint8_t>(i);
    } else if (v == i) {
      v = static_cast<std::uint8_t>(i - 1U);
    }
  }
  trim();
}

PositiveWord SimpleElement::word() const {
  std::vector<std::uint8_t> perm = images_;
  std::vector<Generator> reversed;
  for (;;) {
    std::size_t i = 1;
    while (i < perm.size() && perm[i - 1] < perm[i]) ++i;
    if (i >= perm.size()) break;
    reversed.push_back(static_cast<Generator>(i));
    std::swap(perm[i - 1], perm[i]);
  }
  return PositiveWord(std::vector<Generator>(reversed.rbegin(), reversed.rend()));
}

// --- NormalForm ------------------------------------------------------------

namespace {

std::size_t span_of(const SimpleElement& a, const SimpleElement& b) {
  return std::max(a.images().size(), b.images().size());
}

// Moves generators from the front of `second` to the back of `first` until
// the pair is left-weighted.  Returns whether anything moved.
bool make_left_weighted(SimpleElement& first, SimpleElement& second) {
  bool changed = false;
  for (;;) {
    Generator pick = 0;
    const std::size_t n = span_of(first, second);
    for (std::size_t i = 1; i < n; ++i) {
      const auto g = static_cast<Generator>(i);
      if (second.has_initial(g) && !first.has_final(g)) {
        pick = g;
        break;
      }
    }
    if (pick == 0) return changed;
    first.append_generator(pick);
    second.strip_initial(pick);
    changed = true;
  }
}

}  // namespace

bool NormalForm::is_left_weighted(const SimpleElement& first, const SimpleElement& second) {
  const std::size_t n = span_of(first, second);
  for (std::size_t i = 1; i < n; ++i) {
    const auto g = static_cast<Generator>(i);
    if (second.has_initial(g) && !first.has_final(g)) return false;
  }
  return true;
}

NormalForm::NormalForm(std::vector<SimpleElement> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].is_identity()) throw std::invalid_argument("normal form contains an identity factor");
    if (i > 0 && !is_left_weighted(factors_[i - 1], factors_[i])) {
      throw std::invalid_argument("normal form factors are not left-weighted");
    }
  }
}

std::size_t NormalForm::length() const {
  std::size_t total = 0;
  for (const auto& f : factors_) total += f.length();
  return total;
}

void NormalForm::multiply_right(const SimpleElement& s) {
  if (s.is_identity()) return;
  factors_.push_back(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = factors_.size() - 1; j > 0; --j) {
      if (make_left_weighted(factors_[j - 1], factors_[j])) changed = true;
    }
  }
  // Identity factors can only survive at the tail of a left-weighted chain.
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
}

void NormalForm::multiply_right(const NormalForm& other) {
  for (const auto& f : other.factors_) multiply_right(f);
}

PositiveWord NormalForm::word() const {
  PositiveWord out;
  for (const auto& f : factors_) out = compose(out, f.word());
  return out;
}

std::string NormalForm::key() const {
  std::string out;
  for (const auto& f : factors_) {
    out.push_back(static_cast<char>(f.images().size()));
    out.append(f.images().begin(), f.images().end());
  }
  return out;
}

NormalForm normal_form(const PositiveWord& word) {
  NormalForm nf;
  for (Generator g : word.letters()) nf.multiply_right(SimpleElement::generator(g));
  return nf;
}

bool braid_equal(const PositiveWord& a, const PositiveWord& b) {
  return a.size() == b.size() && normal_form(a) == normal_form(b);
}

}  // namespace tensorbraid
