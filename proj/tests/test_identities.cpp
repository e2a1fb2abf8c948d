#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "tensorbraid/combinators.hpp"
#include "tensorbraid/identities.hpp"

using namespace tensorbraid;

namespace {

bool holds(const VerificationReport& r) {
  if (r.holds) CHECK(r.difference.is_zero());
  return r.holds;
}

}  // namespace

TEST_CASE("beta verifiers at listed points") {
  CHECK(holds(verify_beta_forms(1, 1)));
  CHECK(holds(verify_beta_forms(2, 2)));
  CHECK(holds(verify_beta_forms(3, 2)));
  CHECK(holds(verify_beta_identities(0, 0, 0, 0)));
  CHECK(holds(verify_beta_identities(1, 1, 1, 1)));
  CHECK(holds(verify_beta_identities(1, 2, 1, 2)));
}

TEST_CASE("exchange rule with random operands") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(holds(verify_beta_exchange(2, 3, seed)));
  // psi must live in B_k; sigma_k is outside it.
  CHECK_THROWS_AS(verify_beta_exchange(2, 2, RingElement::generator(1), RingElement::generator(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_beta_exchange(1, 2, RingElement::generator(2), RingElement::one()), std::invalid_argument);
}

TEST_CASE("omega conjugation at listed points") {
  std::mt19937_64 rng(5);
  CHECK(holds(verify_omega_conjugation(1, RingElement(LaurentPoly::q_power(2)))));
  CHECK(holds(verify_omega_conjugation(3, RingElement::generator(1))));
  CHECK(holds(verify_omega_conjugation(4, random_ring_element(rng, 4, 5, 5))));
  CHECK(holds(verify_omega_conjugation(5, 9, 20)));
  CHECK_THROWS_AS(verify_omega_conjugation(3, RingElement::generator(3)), std::out_of_range);
}

TEST_CASE("shuffle verifiers at listed points") {
  CHECK(holds(verify_shuffle_consistency(0, 5)));
  CHECK(holds(verify_shuffle_consistency(1, 1)));
  CHECK(holds(verify_shuffle_consistency(3, 2)));
  CHECK(holds(verify_shuffle_consistency(-1, 2)));
  CHECK(holds(verify_shuffle_support(3, 3)));
  CHECK(holds(verify_shaiden(0, 2, 3)));
  CHECK(holds(verify_shaiden(1, 1, 1)));
  CHECK(holds(verify_shaiden(2, 2, 1)));
}

TEST_CASE("pochhammer verifiers at listed points") {
  for (unsigned k = 0; k <= 3; ++k) {
    CHECK(holds(verify_lemma_robrbin(k, 0)));
    CHECK(holds(verify_cobith(k, 0)));
  }
  CHECK(holds(verify_lemma_robrbin(0, 1)));
  CHECK(holds(verify_lemma_robrbin(1, 2)));
  CHECK(holds(verify_cobith(0, 2)));
  CHECK(holds(verify_cobith(2, 2)));
  CHECK(holds(verify_pochhammer_split(1, 4, 2)));
  CHECK_THROWS_AS(verify_pochhammer_split(1, 2, 3), std::invalid_argument);
}

TEST_CASE("vandermonde verifiers at listed points") {
  for (int a = 0; a <= 3; ++a) {
    CHECK(holds(verify_vandermonde("1bis", {a, 3, 1})));
    CHECK(holds(verify_vandermonde("1bis", {a, 1, 3})));
  }
  for (int c = 0; c <= 2; ++c) {
    for (int j = 0; j <= 2; ++j) CHECK(holds(verify_vandermonde("2", {0, c, j})));
  }
  CHECK(holds(verify_vandermonde("1", {1, 1, 1, 1})));
  CHECK(holds(verify_vandermonde("2", {2, 1, 2})));
  CHECK(holds(verify_vandermonde_reductions(2, 3)));
  CHECK_THROWS_AS(verify_vandermonde("3", {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(verify_vandermonde("1", {1, 1, 1}), std::invalid_argument);
  CHECK(holds(verify_X_recursion(0, 1, 0)));
  CHECK(holds(verify_X_recursion(1, 1, 1)));
  CHECK(holds(verify_X_recursion(0, 2, 1)));
  CHECK_THROWS_AS(verify_X_recursion(1, 0, 1), std::invalid_argument);
}

TEST_CASE("implicit summation ranges agree with the vanishing convention") {
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned n = 0; k + n <= 4; ++n) {
      CHECK(holds(verify_lemma_robrbin(k, n, SummationRange::Vanishing)));
      CHECK(holds(verify_cobith(k, n, SummationRange::Vanishing)));
    }
  }
  CHECK(holds(verify_vandermonde("2", {2, 1, 2}, SummationRange::Vanishing)));
  CHECK(holds(verify_vandermonde("1", {2, 2, 1, 1}, SummationRange::Vanishing)));
}

TEST_CASE("Yang-Baxter system at listed points") {
  CHECK(holds(verify_sytso(0, 0, 0, 0, 0)));
  CHECK(holds(verify_sytso(1, 1, 1, 1, 1)));
  CHECK(holds(verify_sytso(1, 2, 1, 0, 1)));
  CHECK(holds(verify_sytso2(0, 0, 0, 0)));
  CHECK(holds(verify_sytso2(1, 1, 1, 1)));
  CHECK(holds(verify_sytso2(2, 2, 1, 1)));
  const auto sides = sytso_sides(0, 0, 0, 0, 0);
  CHECK(sides.lhs == RingElement(LaurentPoly::q_power(3)));
  // Sides are not trivially zero.
  CHECK_FALSE(sytso_sides(1, 2, 1, 0, 1).lhs.is_zero());
}

TEST_CASE("empty summation ranges give zero on both sides") {
  // e > c leaves the left range empty; the right one must vanish too.
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; b <= 2; ++b) {
      const auto sides = sytso_sides(a, b, 1, 2, 0);
      CHECK(sides.lhs.is_zero());
      CHECK(sides.rhs.is_zero());
      CHECK(holds(verify_sytso_ranges(a, b, 1, 2, 0)));
    }
  }
}

TEST_CASE("sweeps") {
  const auto trivial = sweep("shaiden", 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.front().holds);
  for (const auto& r : sweep("shaiden", 6)) CHECK(holds(r));
  for (const auto& r : sweep("sytso", 4)) CHECK(holds(r));
  CHECK_THROWS_AS(sweep("nosuch", 3), std::invalid_argument);
  CHECK(identity_names().size() >= 15);
}

TEST_CASE("sweep content does not depend on the number of workers") {
  const auto one = sweep("beta_exchange", 4, 1, 3);
  const auto three = sweep("beta_exchange", 4, 3, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].params == three[i].params);
    CHECK(one[i].holds == three[i].holds);
  }
}

TEST_CASE("report records") {
  const auto record = nlohmann::json::parse(report_record(verify_shaiden(1, 1, 1)));
  CHECK(record["identity"] == "shaiden");
  CHECK(record["params"] == nlohmann::json::array({1, 1, 1}));
  CHECK(record["holds"] == true);
  CHECK(record.contains("elapsed_ms"));
  CHECK(record["difference"] == "0");
  CHECK(record["difference_terms"].empty());
  VerificationReport failing{"shaiden", {1, 2, 0}, false, RingElement::generator(2) - RingElement(LaurentPoly::q_power(1)), {}};
  const auto bad = nlohmann::json::parse(report_record(failing));
  CHECK(bad["holds"] == false);
  CHECK(bad["difference"] != "0");
  CHECK(bad["difference_terms"].size() == 2);
}
