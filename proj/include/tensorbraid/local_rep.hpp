#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "tensorbraid/dense.hpp"
#include "tensorbraid/group_ring.hpp"

namespace tensorbraid {

// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Braiding on V with dim V = N, as an N^2 x N^2 matrix.  Composite indices
// flatten as (i1, i2) -> i1 * N + i2.
template <class T>
struct RMatrix {
  std::size_t dim = 0;
  DenseMatrix<T> matrix;
};

// rho(w) acting on V^{(x)n}.
template <class T>
struct DenseOperator {
  std::size_t n = 0;
  DenseMatrix<T> matrix;
};

template <class T>
T parse_scalar(std::string_view text);
template <class T>
T scalar_from_json(const nlohmann::json& value);
template <class T>
nlohmann::json scalar_to_json(const T& value);

// {"dim": N, "entries": [...]}: N^4 numbers row-major, flat or as N^2 rows.
// Entries are JSON numbers or strings ("3/4", "-0.25").
template <class T>
RMatrix<T> parse_rmatrix(std::string_view text);
template <class T>
RMatrix<T> load_rmatrix(const std::filesystem::path& path);
template <class T>
std::string rmatrix_to_json(const RMatrix<T>& r);

// Reads a matrix stored under `entries` with the given shape.
template <class T>
DenseMatrix<T> matrix_from_json(const nlohmann::json& entries, std::size_t rows, std::size_t cols);
template <class T>
nlohmann::json matrix_to_json(const DenseMatrix<T>& m);

template <class T>
struct RMatrixCheck {
  double ybe_residual = 0.0;
  bool invertible = false;
  bool ok = false;
};

// (R x 1)(1 x R)(R x 1) against (1 x R)(R x 1)(1 x R), plus numeric invertibility.
template <class T>
RMatrixCheck<T> check_rmatrix(const RMatrix<T>& r, double tol);

// Local representation sigma_i -> q * (1^{i-1} x R x 1^{n-i-1}).
template <class T>
DenseOperator<T> rep_word(const PositiveWord& word, std::size_t n, const T& q, const RMatrix<T>& r);
// Linear extension; coefficients are specialized at q and may not contain x, y, z.
template <class T>
DenseOperator<T> rep_elem(const RingElement& e, std::size_t n, const T& q, const RMatrix<T>& r);

template <class T>
std::string operator_to_json(const DenseOperator<T>& op, std::size_t dim);

// Fixture builders.
template <class T>
RMatrix<T> identity_rmatrix(std::size_t dim);
template <class T>
RMatrix<T> flip_rmatrix(std::size_t dim);

}  // namespace tensorbraid
