#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "generators.hpp"

using namespace tensorbraid;

TEST_CASE("compose concatenates") {
  CHECK(compose(PositiveWord{1}, PositiveWord{2}) == PositiveWord{1, 2});
  CHECK(compose(PositiveWord{}, PositiveWord{3}) == PositiveWord{3});
  CHECK(compose(PositiveWord{1, 2}, PositiveWord{1}) == PositiveWord{1, 2, 1});
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(PositiveWord{1, 2, 1}) == normal_form(PositiveWord{2, 1, 2}));
  CHECK(normal_form(PositiveWord{1, 3}) == normal_form(PositiveWord{3, 1}));
  CHECK(normal_form(PositiveWord{}).factors().empty());
  CHECK(normal_form(PositiveWord{1, 2}) != normal_form(PositiveWord{2, 1}));
  CHECK(normal_form(PositiveWord{1, 1}).factors().size() == 2);
  CHECK(normal_form(PositiveWord{1, 2, 1}).factors().size() == 1);
}

TEST_CASE("shift and flip") {
  CHECK(shift_word(PositiveWord{1}, 2) == PositiveWord{3});
  CHECK(shift_word(PositiveWord{}, 5).empty());
  CHECK(shift_word(PositiveWord{1, 2}, 1) == PositiveWord{2, 3});
  CHECK(shift_word(PositiveWord{1, 2}, 0) == PositiveWord{1, 2});
  CHECK(flip_word(PositiveWord{1}, 3) == PositiveWord{2});
  CHECK(flip_word(PositiveWord{1, 2}, 3) == PositiveWord{2, 1});
  CHECK(braid_equal(flip_word(PositiveWord{1, 2, 1}, 3), PositiveWord{1, 2, 1}));
  CHECK_THROWS_AS(flip_word(PositiveWord{3}, 3), std::out_of_range);
}

TEST_CASE("text form") {
  CHECK(PositiveWord{1, 2, 1}.to_string() == "1 2 1");
  CHECK(PositiveWord::parse("3 1  2") == PositiveWord{3, 1, 2});
  CHECK(PositiveWord::parse("").empty());
  CHECK_THROWS(PositiveWord::parse("1 0"));
  CHECK_THROWS(PositiveWord::parse("1 x"));
}

TEST_CASE("normal form agrees with brute-force equivalence classes") {
  // Every word of length <= 5 over sigma_1..sigma_3: equal normal forms iff
  // the words lie in the same class of the rewriting graph.
  std::vector<PositiveWord> words{PositiveWord{}};
  for (std::size_t start = 0, length = 0; length < 5; ++length) {
    const std::size_t end = words.size();
    for (std::size_t i = start; i < end; ++i) {
      for (Generator g = 1; g <= 3; ++g) words.push_back(compose(words[i], PositiveWord{g}));
    }
    start = end;
  }
  std::map<std::vector<Generator>, std::size_t> class_of;
  std::size_t classes = 0;
  for (const auto& w : words) {
    std::vector<Generator> letters(w.letters().begin(), w.letters().end());
    if (class_of.count(letters)) continue;
    for (const auto& v : tbtest::equivalence_class(w)) class_of[v] = classes;
    ++classes;
  }
  std::map<std::string, std::size_t> class_of_form;
  for (const auto& w : words) {
    const auto key = normal_form(w).key();
    const std::vector<Generator> letters(w.letters().begin(), w.letters().end());
    const auto [it, inserted] = class_of_form.emplace(key, class_of[letters]);
    CHECK(it->second == class_of[letters]);
  }
  CHECK(class_of_form.size() == classes);
}

TEST_CASE("random rewrites preserve the normal form") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = tbtest::random_word(rng, 5, 10);
    const auto v = tbtest::random_rewrite(w, rng, static_cast<unsigned>(tbtest::uniform(rng, 1, 12)));
    CHECK(normal_form(w) == normal_form(v));
    CHECK(normal_form(shift_word(w, 2)) == normal_form(shift_word(v, 2)));
  }
}

TEST_CASE("normal form structure") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = tbtest::random_word(rng, 5, 12);
    const auto nf = normal_form(w);
    CHECK(nf.length() == w.size());
    for (const auto& f : nf.factors()) CHECK_FALSE(f.is_identity());
    for (std::size_t i = 0; i + 1 < nf.factors().size(); ++i) {
      CHECK(NormalForm::is_left_weighted(nf.factors()[i], nf.factors()[i + 1]));
    }
    // Idempotent, and a reading of the form represents the same braid.
    CHECK(normal_form(nf.word()) == nf);
    CHECK(braid_equal(nf.word(), w));
  }
}

TEST_CASE("product of normal forms depends only on the forms") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = tbtest::random_word(rng, 4, 7), v = tbtest::random_word(rng, 4, 7);
    const auto u2 = tbtest::random_rewrite(u, rng, 6), v2 = tbtest::random_rewrite(v, rng, 6);
    NormalForm left = normal_form(u);
    left.multiply_right(normal_form(v));
    CHECK(left == normal_form(compose(u2, v2)));
  }
}

TEST_CASE("ambient strand count does not change the form") {
  // Padding a permutation with fixed points describes the same simple braid.
  CHECK(SimpleElement::from_images({1, 0, 2, 3}) == SimpleElement::generator(1));
  CHECK(SimpleElement::from_images({0, 1, 2}).is_identity());
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = tbtest::random_word(rng, 3, 8);
    // w lives in B_4: its factors never touch a fifth point, and it commutes
    // with sigma_5 inside B_6.
    const auto nf = normal_form(w);
    for (const auto& f : nf.factors()) CHECK(f.images().size() <= 4);
    CHECK(normal_form(compose(w, PositiveWord{5})) == normal_form(compose(PositiveWord{5}, w)));
  }
}
