#include "tensorbraid/local_rep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tensorbraid {

namespace {

std::size_t int_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

// Shortest decimal that round-trips the double; lets "0.1" in a JSON number
// load as exactly 1/10.
std::string shortest_decimal(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw FormatError("cannot format number");
  return std::string(buffer, end);
}

// M <- M * R_i where R_i acts on tensor factors i, i+1 (1-based) of V^{(x)n}.
template <class T>
void multiply_right_local(DenseMatrix<T>& m, const DenseMatrix<T>& r, std::size_t dim, std::size_t n,
                          std::size_t i) {
  const std::size_t left = int_power(dim, i - 1);
  const std::size_t right = int_power(dim, n - i - 1);
  const std::size_t pair = dim * dim;
  std::vector<T> buffer(pair, T(0));
  for (std::size_t row = 0; row < m.rows(); ++row) {
    for (std::size_t a = 0; a < left; ++a) {
      for (std::size_t g = 0; g < right; ++g) {
        auto col = [&](std::size_t p) { return (a * pair + p) * right + g; };
        for (std::size_t p = 0; p < pair; ++p) {
          T acc(0);
          for (std::size_t pp = 0; pp < pair; ++pp) {
            const T& lhs = m(row, col(pp));
            if (ScalarTraits<T>::is_zero(lhs)) continue;
            acc = acc + lhs * r(pp, p);
          }
          buffer[p] = acc;
        }
        for (std::size_t p = 0; p < pair; ++p) m(row, col(p)) = buffer[p];
      }
    }
  }
}

}  // namespace

template <>
double parse_scalar<double>(std::string_view text) {
  return Rational::parse(text).to_double();
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  return Rational::parse(text);
}

template <class T>
T scalar_from_json(const nlohmann::json& value) {
  if (value.is_string()) {
    try {
      return parse_scalar<T>(value.get<std::string>());
    } catch (const std::exception& e) {
      throw FormatError(std::string("bad matrix entry: ") + e.what());
    }
  }
  if (value.is_number_integer()) return T(static_cast<long>(value.get<long long>()));
  if (value.is_number_float()) {
    if constexpr (ScalarTraits<T>::exact) {
      return Rational::parse(shortest_decimal(value.get<double>()));
    } else {
      return value.get<double>();
    }
  }
  throw FormatError("matrix entry must be a number or a numeric string");
}

template <>
nlohmann::json scalar_to_json<double>(const double& value) {
  return value;
}

template <>
nlohmann::json scalar_to_json<Rational>(const Rational& value) {
  return value.to_string();
}

template <class T>
DenseMatrix<T> matrix_from_json(const nlohmann::json& entries, std::size_t rows, std::size_t cols) {
  if (!entries.is_array()) throw FormatError("'entries' must be an array");
  std::vector<T> data;
  data.reserve(rows * cols);
  const bool nested = !entries.empty() && entries.front().is_array();
  if (nested) {
    if (entries.size() != rows) throw FormatError("entry array has the wrong number of rows");
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != cols) throw FormatError("entry array is not square / rectangular as declared");
      for (const auto& v : row) data.push_back(scalar_from_json<T>(v));
    }
  } else {
    if (entries.size() != rows * cols) {
      throw FormatError("entry array has " + std::to_string(entries.size()) + " values, expected " +
                        std::to_string(rows * cols));
    }
    for (const auto& v : entries) data.push_back(scalar_from_json<T>(v));
  }
  return DenseMatrix<T>(rows, cols, std::move(data));
}

template <class T>
nlohmann::json matrix_to_json(const DenseMatrix<T>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : m.data()) out.push_back(scalar_to_json(v));
  return out;
}

template <class T>
RMatrix<T> parse_rmatrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed R-matrix document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw FormatError("R-matrix document needs 'dim' and 'entries'");
  }
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    throw FormatError("'dim' must be a positive integer");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
  RMatrix<T> r{dim, matrix_from_json<T>(doc["entries"], dim * dim, dim * dim)};
  return r;
}

template <class T>
RMatrix<T> load_rmatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_rmatrix<T>(buffer.str());
}

template <class T>
std::string rmatrix_to_json(const RMatrix<T>& r) {
  return nlohmann::json{{"dim", r.dim}, {"entries", matrix_to_json(r.matrix)}}.dump();
}

template <class T>
RMatrixCheck<T> check_rmatrix(const RMatrix<T>& r, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const auto id = DenseMatrix<T>::identity(r.dim);
  const auto r12 = kronecker(r.matrix, id);
  const auto r23 = kronecker(id, r.matrix);
  RMatrixCheck<T> out;
  out.ybe_residual = max_abs_difference(r12 * r23 * r12, r23 * r12 * r23);
  out.invertible = matrix_rank(r.matrix, tol) == r.matrix.rows();
  out.ok = out.invertible && out.ybe_residual <= tol;
  return out;
}

template <class T>
DenseOperator<T> rep_word(const PositiveWord& word, std::size_t n, const T& q, const RMatrix<T>& r) {
  if (ScalarTraits<T>::is_zero(q)) throw std::invalid_argument("local representation needs q != 0");
  if (!word.empty() && word.max_index() >= n) {
    throw std::out_of_range("generator sigma_" + std::to_string(word.max_index()) + " does not act on " +
                            std::to_string(n) + " tensor factors");
  }
  const DenseMatrix<T> qr = q * r.matrix;
  DenseOperator<T> out{n, DenseMatrix<T>::identity(int_power(r.dim, n))};
  for (Generator g : word.letters()) multiply_right_local(out.matrix, qr, r.dim, n, g);
  return out;
}

template <class T>
DenseOperator<T> rep_elem(const RingElement& e, std::size_t n, const T& q, const RMatrix<T>& r) {
  const std::size_t size = int_power(r.dim, n);
  DenseOperator<T> out{n, DenseMatrix<T>(size, size)};
  auto& table = BraidTable::instance();
  Assignment<T> at;
  at.q = q;
  for (const auto& [id, coeff] : e.terms()) {
    if (!coeff.only_q()) throw std::invalid_argument("coefficient " + coeff.to_string() + " depends on x, y or z");
    const T c = coeff.eval(at);
    out.matrix += c * rep_word(table.word_of(id), n, q, r).matrix;
  }
  return out;
}

template <class T>
std::string operator_to_json(const DenseOperator<T>& op, std::size_t dim) {
  return nlohmann::json{{"dim", dim}, {"n", op.n}, {"entries", matrix_to_json(op.matrix)}}.dump();
}

template <class T>
RMatrix<T> identity_rmatrix(std::size_t dim) {
  return {dim, DenseMatrix<T>::identity(dim * dim)};
}

template <class T>
RMatrix<T> flip_rmatrix(std::size_t dim) {
  DenseMatrix<T> m(dim * dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(j * dim + i, i * dim + j) = T(1);
  }
  return {dim, m};
}

#define TENSORBRAID_INSTANTIATE(T)                                                                  \
  template T scalar_from_json<T>(const nlohmann::json&);                                            \
  template DenseMatrix<T> matrix_from_json<T>(const nlohmann::json&, std::size_t, std::size_t);     \
  template nlohmann::json matrix_to_json<T>(const DenseMatrix<T>&);                                 \
  template RMatrix<T> parse_rmatrix<T>(std::string_view);                                           \
  template RMatrix<T> load_rmatrix<T>(const std::filesystem::path&);                                \
  template std::string rmatrix_to_json<T>(const RMatrix<T>&);                                       \
  template RMatrixCheck<T> check_rmatrix<T>(const RMatrix<T>&, double);                             \
  template DenseOperator<T> rep_word<T>(const PositiveWord&, std::size_t, const T&, const RMatrix<T>&); \
  template DenseOperator<T> rep_elem<T>(const RingElement&, std::size_t, const T&, const RMatrix<T>&);  \
  template std::string operator_to_json<T>(const DenseOperator<T>&, std::size_t);                   \
  template RMatrix<T> identity_rmatrix<T>(std::size_t);                                             \
  template RMatrix<T> flip_rmatrix<T>(std::size_t);

TENSORBRAID_INSTANTIATE(double)
TENSORBRAID_INSTANTIATE(Rational)

#undef TENSORBRAID_INSTANTIATE

}  // namespace tensorbraid
