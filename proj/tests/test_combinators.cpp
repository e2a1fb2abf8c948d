#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "generators.hpp"
#include "tensorbraid/combinators.hpp"

using namespace tensorbraid;

namespace {

RingElement w(std::initializer_list<Generator> letters) { return RingElement::word(PositiveWord(letters)); }

const LaurentPoly q = LaurentPoly::q_power(1);
const LaurentPoly x = LaurentPoly::x(), z = LaurentPoly::z();

unsigned long long binomial(unsigned n, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The first shuffle recursion expanded into raw words, without any
// normalization or merging of terms.
std::vector<PositiveWord> expand_shuffle(int m, int n) {
  if (m < 0 || n < 0) return {};
  if (m == 0 || n == 0) return {PositiveWord{}};
  auto out = expand_shuffle(m - 1, n);
  const PositiveWord tail = shift_word(beta_word(static_cast<unsigned>(m), 1), static_cast<unsigned>(n - 1));
  for (const auto& v : expand_shuffle(m, n - 1)) out.push_back(compose(v, tail));
  return out;
}

}  // namespace

TEST_CASE("beta examples") {
  CHECK(beta(1, 3) == w({1, 2, 3}));
  CHECK(beta(3, 0) == RingElement::one());
  CHECK(beta(0, 4) == RingElement::one());
  CHECK(beta(2, 1) == w({2, 1}));
  CHECK(beta_word(2, 2) == PositiveWord{2, 3, 1, 2});
  CHECK(beta_word_by_columns(2, 2) == PositiveWord{2, 1, 3, 2});
}

TEST_CASE("omega examples") {
  CHECK(omega(0) == RingElement::one());
  CHECK(omega(1) == RingElement::one());
  CHECK(omega(2) == w({1}));
  CHECK(omega(3) == w({1, 2, 1}));
  CHECK(omega(3) == beta(2, 1) * omega(2).shifted(1) * omega(1));
  // Longest element: length a(a-1)/2, a single simple factor.
  for (unsigned a = 0; a <= 7; ++a) {
    REQUIRE(omega(a).size() == 1);
    const auto nf = BraidTable::instance().normal_form_of(omega(a).terms().front().first);
    CHECK(nf.length() == a * (a - 1) / 2);
    CHECK(nf.factors().size() <= 1);
  }
}

TEST_CASE("shuffle examples") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(shuffle(0, n) == RingElement::one());
    CHECK(shuffle(n, 0) == RingElement::one());
  }
  CHECK(shuffle(-1, 3).is_zero());
  CHECK(shuffle(2, -1).is_zero());
  CHECK(shuffle(1, 1) == RingElement(1) + w({1}));
  CHECK(shuffle(2, 1) == RingElement(1) + w({1}) + w({2, 1}));
  CHECK(shuffle_second_recursion(2, 1) == shuffle(2, 1));
}

TEST_CASE("shuffle support matches the expanded recursion") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; m + n <= 7; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto words = expand_shuffle(m, n);
      std::map<std::string, int> multiplicity;
      for (const auto& v : words) ++multiplicity[normal_form(v).key()];
      const auto sh = shuffle(m, n);
      CHECK(words.size() == binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(n)));
      CHECK(multiplicity.size() == words.size());
      CHECK(sh.size() == words.size());
      for (const auto& [id, coeff] : sh.terms()) {
        CHECK(coeff.is_one());
        CHECK(multiplicity.count(BraidTable::instance().normal_form_of(id).key()) == 1);
        // Shuffles lift permutations: every basis braid is simple.
        CHECK(BraidTable::instance().normal_form_of(id).factors().size() <= 1);
      }
    }
  }
}

TEST_CASE("pochhammer examples") {
  for (unsigned k = 0; k <= 3; ++k) CHECK(pochhammer(k, 0, x, q) == RingElement::one());
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = 0; j <= 3; ++j) CHECK(pochhammer(i, j, x, LaurentPoly()) == RingElement(x.pow(static_cast<int>(j))));
  }
  for (unsigned j = 0; j <= 5; ++j) {
    const RingElement expected = omega(j).scaled(z.pow(static_cast<int>(j)) * LaurentPoly(j % 2 == 0 ? 1 : -1));
    CHECK(pochhammer(0, j, LaurentPoly(), z) == expected);
  }
  CHECK(unit_pochhammer(1, 1) == RingElement(1) - w({1}).scaled(LaurentPoly::q_power(-2)));
  CHECK(unit_pochhammer(1, 1) == pochhammer(1, 1, LaurentPoly(1), LaurentPoly::q_power(-2)));
}

TEST_CASE("block examples") {
  CHECK(tensor_block(0, 0, 0) == RingElement(q));
  CHECK(tensor_block(1, 1, 1) == w({1}).scaled(LaurentPoly::q_power(-1)));
  CHECK(tensor_block(1, 1, 0) == RingElement(1) - w({1}).scaled(LaurentPoly::q_power(-2)));
  CHECK(tensor_block(2, 3, 5).is_zero());
  CHECK(tensor_block(2, 3, -1).is_zero());
  CHECK_THROWS_AS(tensor_block(-1, 2, 0), std::invalid_argument);
  CHECK(BlockLabel{1, 2, 2}.admissible());
  CHECK_FALSE(BlockLabel{1, 2, 3}.admissible());
  // Top block: the diagonal braid up to a power of q.
  for (int a = 0; a <= 3; ++a) {
    for (int c = 0; a + c <= 4; ++c) {
      CHECK(tensor_block(a, c, c) == beta(static_cast<unsigned>(a), static_cast<unsigned>(c)).scaled(LaurentPoly::q_power(1 - a - c)));
    }
  }
}

TEST_CASE("memoized constructions are consistent across threads") {
  std::vector<std::string> results(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
      workers.emplace_back([&results, t] {
        for (int m = 5; m >= 0; --m) {
          for (int n = 0; m + n <= 6; ++n) results[t] += shuffle(m, n).to_string() + tensor_block(m, n, n / 2).to_string();
        }
      });
    }
  }
  for (const auto& r : results) CHECK(r == results.front());
}
