#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "tensorbraid/combinators.hpp"
#include "tensorbraid/identities.hpp"
#include "tensorbraid/local_rep.hpp"

using namespace tensorbraid;

namespace {

const std::string data_dir = TENSORBRAID_DATA_DIR;

template <class T>
DenseMatrix<T> scaled(const T& s, const DenseMatrix<T>& m) {
  return s * m;
}

}  // namespace

TEST_CASE("load shipped R-matrices") {
  for (const char* name : {"identity_n2", "flip_n2", "identity_n3", "flip_n3", "diagonal_n2"}) {
    CAPTURE(name);
    const auto r = load_rmatrix<Rational>(data_dir + "/" + name + ".json");
    CHECK(r.matrix.rows() == r.dim * r.dim);
    CHECK(check_rmatrix(r, 1e-9).ok);
    CHECK(check_rmatrix(load_rmatrix<double>(data_dir + "/" + name + ".json"), 1e-9).ok);
  }
  CHECK(load_rmatrix<double>(data_dir + "/flip_n2.json").matrix == flip_rmatrix<double>(2).matrix);
  CHECK(load_rmatrix<Rational>(data_dir + "/identity_n3.json").matrix == identity_rmatrix<Rational>(3).matrix);
}

TEST_CASE("malformed R-matrix documents") {
  CHECK_THROWS_AS(parse_rmatrix<double>("{"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<double>(R"({"dim": 2})"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<double>(R"({"dim": 2, "entries": [1, 0, 0, 1]})"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<double>(R"({"dim": 1, "entries": [[1, 0]]})"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<double>(R"({"dim": 0, "entries": []})"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<Rational>(R"({"dim": 1, "entries": ["1/0"]})"), FormatError);
  CHECK_THROWS_AS(parse_rmatrix<Rational>(R"({"dim": 1, "entries": [true]})"), FormatError);
  CHECK_THROWS_AS(load_rmatrix<double>(data_dir + "/does_not_exist.json"), FormatError);
  const auto r = parse_rmatrix<Rational>(R"({"dim": 1, "entries": [0.1]})");
  CHECK(r.matrix(0, 0) == Rational(1, 10));
  const auto round = parse_rmatrix<Rational>(rmatrix_to_json(load_rmatrix<Rational>(data_dir + "/diagonal_n2.json")));
  CHECK(round.matrix == load_rmatrix<Rational>(data_dir + "/diagonal_n2.json").matrix);
}

TEST_CASE("check_rmatrix rejects non-solutions") {
  // A generic matrix fails the braid relation.
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    DenseMatrix<double> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = dist(rng);
    }
    CHECK_FALSE(check_rmatrix(RMatrix<double>{2, m}, 1e-9).ok);
  }
  // A singular solution of the braid relation is rejected too.
  CHECK_FALSE(check_rmatrix(RMatrix<Rational>{2, DenseMatrix<Rational>(4, 4)}, 1e-9).ok);
  CHECK_THROWS_AS(check_rmatrix(identity_rmatrix<double>(2), 0.0), std::invalid_argument);
}

TEST_CASE("rep_word examples") {
  const auto r = load_rmatrix<double>(data_dir + "/diagonal_n2.json");
  CHECK(rep_word(PositiveWord{1}, 2, 3.0, r).matrix == scaled(3.0, r.matrix));
  CHECK(rep_word(PositiveWord{}, 3, 2.0, r).matrix == DenseMatrix<double>::identity(8));
  CHECK(max_abs_difference(rep_word(PositiveWord{1, 2, 1}, 3, 0.7, r).matrix,
                           rep_word(PositiveWord{2, 1, 2}, 3, 0.7, r).matrix) <= 1e-12);
  CHECK_THROWS_AS(rep_word(PositiveWord{2}, 2, 1.0, r), std::out_of_range);
  CHECK_THROWS_AS(rep_word(PositiveWord{1}, 2, 0.0, r), std::invalid_argument);
}

TEST_CASE("rep_elem examples") {
  const auto flip = flip_rmatrix<Rational>(2);
  const Rational q(3);
  CHECK(rep_elem(shuffle(1, 1), 2, q, flip).matrix == DenseMatrix<Rational>::identity(4) + q * flip.matrix);
  CHECK(rep_elem(RingElement::zero(), 2, q, flip).matrix == DenseMatrix<Rational>(4, 4));
  CHECK(rep_elem(unit_pochhammer(1, 1), 2, Rational(1), flip).matrix == DenseMatrix<Rational>::identity(4) - flip.matrix);
  CHECK_THROWS_AS(rep_elem(RingElement(LaurentPoly::x()), 1, q, flip), std::invalid_argument);
  const auto json = nlohmann::json::parse(operator_to_json(rep_elem(shuffle(1, 1), 2, q, flip), 2));
  CHECK(json["n"] == 2);
  CHECK(json["entries"].size() == 16);
}

TEST_CASE("rep_elem is a representation") {
  std::mt19937_64 rng(42);
  const auto r = load_rmatrix<Rational>(data_dir + "/diagonal_n2.json");
  const Rational q(2, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_ring_element(rng, 3, 3, 4), b = random_ring_element(rng, 3, 3, 4);
    CHECK(rep_elem(a * b, 3, q, r).matrix == rep_elem(a, 3, q, r).matrix * rep_elem(b, 3, q, r).matrix);
    CHECK(rep_elem(a + b, 3, q, r).matrix == rep_elem(a, 3, q, r).matrix + rep_elem(b, 3, q, r).matrix);
  }
}

TEST_CASE("shift acts as padding on the left factors") {
  std::mt19937_64 rng(43);
  const auto r = load_rmatrix<double>(data_dir + "/diagonal_n2.json");
  for (int trial = 0; trial < 30; ++trial) {
    const auto e = random_ring_element(rng, 3, 3, 4);
    for (unsigned ell = 0; ell <= 2; ++ell) {
      const auto shifted = rep_elem(e.shifted(ell), 3 + ell, 1.5, r).matrix;
      const auto padded = kronecker(DenseMatrix<double>::identity(1u << ell), rep_elem(e, 3, 1.5, r).matrix);
      CHECK(max_abs_difference(shifted, padded) <= 1e-9 * std::max(1.0, max_abs_entry(padded)));
      // Extra strands on the right are padding as well.
      const auto wide = rep_elem(e, 4, 1.5, r).matrix;
      CHECK(max_abs_difference(wide, kronecker(rep_elem(e, 3, 1.5, r).matrix, DenseMatrix<double>::identity(2))) <=
            1e-9 * std::max(1.0, max_abs_entry(wide)));
    }
  }
}
