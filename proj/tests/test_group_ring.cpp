#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "generators.hpp"
#include "tensorbraid/combinators.hpp"
#include "tensorbraid/identities.hpp"

using namespace tensorbraid;

namespace {
RingElement s(Generator i) { return RingElement::generator(i); }
RingElement w(std::initializer_list<Generator> letters) { return RingElement::word(PositiveWord(letters)); }
}  // namespace

TEST_CASE("addition examples") {
  const RingElement e = RingElement(1) + s(1);
  CHECK(e.size() == 2);
  CHECK((e + RingElement(-1) * e).is_zero());
  CHECK(shuffle(0, 4) + RingElement::zero() == RingElement::one());
}

TEST_CASE("multiplication examples") {
  const RingElement e = RingElement(1) + s(1);
  CHECK(e * e == RingElement(1) + RingElement(2) * s(1) + w({1, 1}));
  CHECK(s(1) * s(3) == s(3) * s(1));
  CHECK(s(1) * s(2) != s(2) * s(1));
  CHECK(s(1) * s(2) * s(1) == s(2) * s(1) * s(2));
}

TEST_CASE("scaling examples") {
  const LaurentPoly q = LaurentPoly::q_power(1);
  CHECK(RingElement::one().scaled(q) == RingElement(q));
  CHECK(s(2).scaled(LaurentPoly()).is_zero());
  CHECK(s(1).scaled(LaurentPoly::q_power(-2)).coefficient(PositiveWord{1}) == LaurentPoly::q_power(-2));
}

TEST_CASE("shift and flip examples") {
  CHECK((RingElement(1) + s(1)).shifted(1) == RingElement(1) + s(2));
  const RingElement e = RingElement(3) + w({1, 2});
  CHECK(e.shifted(0) == e);
  CHECK(shuffle(1, 1).shifted(2) == RingElement(1) + s(3));
  CHECK(s(1).flipped(3) == s(2));
  CHECK(RingElement::one().flipped(3) == RingElement::one());
  CHECK(omega(3).flipped(3) == omega(3));
  CHECK_THROWS_AS(s(3).flipped(3), std::out_of_range);
}

TEST_CASE("equality examples") {
  CHECK(RingElement::word(beta_word(2, 2)) == RingElement::word(beta_word_by_columns(2, 2)));
  CHECK(RingElement::one() != s(1));
  CHECK(shuffle(2, 1) == shuffle_second_recursion(2, 1));
}

TEST_CASE("serialization is sorted by word") {
  const RingElement e = w({2, 1}) + RingElement(1) + s(1).scaled(LaurentPoly(1) - LaurentPoly::q_power(-2));
  const auto terms = e.sorted_terms();
  REQUIRE(terms.size() == 3);
  CHECK(terms[0].first.empty());
  CHECK(terms[1].first == PositiveWord{1});
  CHECK(terms[2].first == PositiveWord{2, 1});
  CHECK(e.to_string() == "1 + (1 - q^-2)*[1] + [2 1]");
  CHECK(RingElement().to_string() == "0");
}

TEST_CASE("ring axioms and shift endomorphism on random elements") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_ring_element(rng, 4, 3, 4);
    const auto b = random_ring_element(rng, 4, 3, 4);
    const auto c = random_ring_element(rng, 4, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    const unsigned ell = static_cast<unsigned>(tbtest::uniform(rng, 0, 3));
    CHECK((a * b).shifted(ell) == a.shifted(ell) * b.shifted(ell));
    CHECK((a + b).shifted(ell) == a.shifted(ell) + b.shifted(ell));
    if (a != b) CHECK(a.shifted(ell) != b.shifted(ell));
    CHECK(a.flipped(4).flipped(4) == a);
    CHECK((a * b).flipped(4) == a.flipped(4) * b.flipped(4));
  }
}

TEST_CASE("basis table is safe under concurrent use") {
  std::vector<std::string> results(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < results.size(); ++t) {
      workers.emplace_back([&results, t] {
        std::mt19937_64 rng(77);
        for (int i = 0; i < 60; ++i) {
          const auto a = random_ring_element(rng, 6, 3, 6), b = random_ring_element(rng, 6, 3, 6);
          results[t] += (a * b.shifted(i % 2)).to_string() + "\n";
        }
      });
    }
  }
  for (const auto& r : results) CHECK(r == results.front());
}
