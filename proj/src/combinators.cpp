#include "tensorbraid/combinators.hpp"

#include <stdexcept>
#include <tuple>

#include "tensorbraid/memo.hpp"

namespace tensorbraid {

PositiveWord beta_word(unsigned k, unsigned l) {
  std::vector<Generator> letters;
  for (unsigned start = k; start >= 1; --start) {
    for (unsigned i = start; i < start + l; ++i) letters.push_back(static_cast<Generator>(i));
  }
  return PositiveWord(std::move(letters));
}

PositiveWord beta_word_by_columns(unsigned k, unsigned l) {
  std::vector<Generator> letters;
  for (unsigned s = 0; s < l; ++s) {
    for (unsigned i = k + s; i >= 1 + s; --i) letters.push_back(static_cast<Generator>(i));
  }
  return PositiveWord(std::move(letters));
}

RingElement beta(unsigned k, unsigned l) {
  static Memo<std::pair<unsigned, unsigned>, RingElement> memo;
  return memo.get({k, l}, [&] { return RingElement::word(beta_word(k, l)); });
}

RingElement omega(unsigned a) {
  static Memo<unsigned, RingElement> memo;
  return memo.get(a, [&] {
    if (a <= 1) return RingElement::one();
    return beta(a - 1, 1) * omega(a - 1).shifted(1);
  });
}

RingElement shuffle(int m, int n) {
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) return RingElement::one();
  static Memo<std::pair<int, int>, RingElement> memo;
  return memo.get({m, n}, [&] {
    RingElement result = shuffle(m - 1, n);
    if (n > 0) result += shuffle(m, n - 1) * beta(static_cast<unsigned>(m), 1).shifted(static_cast<unsigned>(n - 1));
    return result;
  });
}

RingElement shuffle_second_recursion(int m, int n) {
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) return RingElement::one();
  static Memo<std::pair<int, int>, RingElement> memo;
  return memo.get({m, n}, [&] {
    RingElement result = shuffle_second_recursion(m, n - 1).shifted(1);
    if (m > 0) result += shuffle_second_recursion(m - 1, n).shifted(1) * beta(1, static_cast<unsigned>(n));
    return result;
  });
}

RingElement pochhammer(unsigned k, unsigned n, const LaurentPoly& x, const LaurentPoly& y) {
  RingElement result = RingElement::one();
  for (unsigned r = 0; r < n; ++r) {
    result *= RingElement(x) - beta(k + r, 1).scaled(y);
  }
  return result;
}

RingElement unit_pochhammer(unsigned a, unsigned b) {
  static Memo<std::pair<unsigned, unsigned>, RingElement> memo;
  return memo.get({a, b}, [&] { return pochhammer(a, b, LaurentPoly(1), LaurentPoly::q_power(-2)); });
}

RingElement tensor_block(const BlockLabel& label) {
  if (label.a < 0 || label.b < 0) {
    throw std::invalid_argument("tensor block grades must be non-negative");
  }
  if (!label.admissible()) return {};
  static Memo<BlockLabel, RingElement> memo;
  return memo.get(label, [&] {
    const auto [a, b, c] = std::tuple{static_cast<unsigned>(label.a), static_cast<unsigned>(label.b),
                                      static_cast<unsigned>(label.c)};
    return (shuffle(label.b - label.c, label.c).shifted(a) * beta(a, c) *
            unit_pochhammer(a, b - c).shifted(c))
        .scaled(LaurentPoly::q_power(1 - label.a - label.c));
  });
}

}  // namespace tensorbraid
