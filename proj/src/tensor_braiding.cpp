#include "tensorbraid/tensor_braiding.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tensorbraid {

namespace {

std::size_t int_power(std::size_t base, std::size_t exponent) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

template <class T>
DenseMatrix<T> pad_left(std::size_t dim, unsigned strands, const DenseMatrix<T>& m) {
  if (strands == 0) return m;
  return kronecker(DenseMatrix<T>::identity(int_power(dim, strands)), m);
}

template <class T>
DenseMatrix<T> pad_right(const DenseMatrix<T>& m, std::size_t dim, unsigned strands) {
  if (strands == 0) return m;
  return kronecker(m, DenseMatrix<T>::identity(int_power(dim, strands)));
}

template <class T>
bool within(double residual, double tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return residual == 0.0;
  } else {
    return residual <= tol;
  }
}

// Folds one comparison into the report, keeping the worst relative residual.
template <class T>
void record(NumericReport& report, const DenseMatrix<T>& lhs, const DenseMatrix<T>& rhs, std::vector<int> tuple) {
  const double residual = max_abs_difference(lhs, rhs);
  const double scale = std::max({1.0, max_abs_entry(lhs), max_abs_entry(rhs)});
  const double relative = residual / scale;
  report.max_residual = std::max(report.max_residual, residual);
  if (report.worst.empty() || relative > report.relative_residual) {
    report.relative_residual = relative;
    report.worst = std::move(tuple);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json parse_document(std::string_view text, const char* what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed ") + what + ": " + e.what());
  }
}

long long require_count(const nlohmann::json& doc, const char* key, long long minimum) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < minimum) {
    throw FormatError(std::string("'") + key + "' must be an integer >= " + std::to_string(minimum));
  }
  return doc[key].get<long long>();
}

}  // namespace

template <class T>
GradedOperator<T> GradedOperator<T>::from_blocks(std::size_t dim, T q, unsigned max_grade, Blocks blocks,
                                                 Triangularity policy) {
  if (dim == 0) throw std::invalid_argument("dimension must be positive");
  if (ScalarTraits<T>::is_zero(q)) throw std::invalid_argument("q must be non-zero");
  for (const auto& [label, m] : blocks) {
    if (label.a < 0 || label.b < 0 || label.c < 0) throw std::invalid_argument("negative block grade");
    if (static_cast<unsigned>(label.a + label.b) > max_grade) {
      throw std::invalid_argument("block grade exceeds max_grade");
    }
    if (policy == Triangularity::Enforced && label.c > label.b) {
      throw std::invalid_argument("block {" + std::to_string(label.a) + "," + std::to_string(label.b) + "," +
                                  std::to_string(label.c) + "} violates triangularity");
    }
    const std::size_t size = int_power(dim, static_cast<std::size_t>(label.a + label.b));
    if (m.rows() != size || m.cols() != size) throw std::invalid_argument("block has the wrong size");
  }
  GradedOperator op;
  op.dim_ = dim;
  op.q_ = std::move(q);
  op.max_grade_ = max_grade;
  op.blocks_ = std::move(blocks);
  return op;
}

template <class T>
const DenseMatrix<T>* GradedOperator<T>::block(const BlockLabel& label) const {
  const auto it = blocks_.find(label);
  return it == blocks_.end() ? nullptr : &it->second;
}

std::size_t block_count(unsigned max_grade) {
  std::size_t count = 0;
  for (unsigned b = 0; b <= max_grade; ++b) {
    for (unsigned c = 0; b + c <= max_grade; ++c) count += c + 1;
  }
  return count;
}

template <class T>
GradedOperator<T> assemble(const RMatrix<T>& r, const T& q, unsigned max_grade, double tol) {
  if (ScalarTraits<T>::is_zero(q)) throw std::invalid_argument("q must be non-zero");
  const auto check = check_rmatrix(r, tol);
  if (!check.ok) {
    throw std::invalid_argument(check.invertible ? "R-matrix does not satisfy the braid relation"
                                                 : "R-matrix is not invertible");
  }
  typename GradedOperator<T>::Blocks blocks;
  for (int b = 0; b <= static_cast<int>(max_grade); ++b) {
    for (int c = 0; b + c <= static_cast<int>(max_grade); ++c) {
      for (int k = 0; k <= c; ++k) {
        const BlockLabel label{b, c, k};
        blocks.emplace(label, rep_elem(tensor_block(label), static_cast<std::size_t>(b + c), q, r).matrix);
      }
    }
  }
  return GradedOperator<T>::from_blocks(r.dim, q, max_grade, std::move(blocks));
}

template <class T>
std::vector<ExchangeTerm<T>> apply_exchange(const GradedOperator<T>& op, unsigned b, std::span<const T> x,
                                            unsigned c, std::span<const T> y) {
  if (b + c > op.max_grade()) {
    throw std::out_of_range("grade " + std::to_string(b + c) + " exceeds the operator's max grade " +
                            std::to_string(op.max_grade()));
  }
  if (x.size() != int_power(op.dim(), b) || y.size() != int_power(op.dim(), c)) {
    throw std::invalid_argument("tensor length does not match its grade");
  }
  std::vector<T> xy;
  xy.reserve(x.size() * y.size());
  for (const auto& xi : x) {
    for (const auto& yj : y) xy.push_back(xi * yj);
  }
  std::vector<ExchangeTerm<T>> out;
  for (const auto& [label, m] : op.blocks()) {
    if (label.a != static_cast<int>(b) || label.b != static_cast<int>(c)) continue;
    out.push_back({static_cast<unsigned>(label.c), b + c - static_cast<unsigned>(label.c), m.apply(xy)});
  }
  return out;
}

template <class T>
std::pair<DenseMatrix<T>, DenseMatrix<T>> ybe_sides(const GradedOperator<T>& op, unsigned a, unsigned b,
                                                    unsigned c, unsigned e, unsigned f) {
  const unsigned g = a + b + c;
  if (g > op.max_grade()) throw std::out_of_range("grade exceeds the operator's max grade");
  if (e + f > g) throw std::invalid_argument("output grades exceed the input grade");
  const std::size_t n = op.dim();
  const std::size_t size = int_power(n, g);
  const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c);
  const int ie = static_cast<int>(e), jf = static_cast<int>(f);

  DenseMatrix<T> lhs(size, size);
  for (int i = 0; i <= ib + ic; ++i) {
    const auto* m1 = op.block({ib, ic, i});
    const auto* m2 = op.block({ia, i, ie});
    const auto* m3 = op.block({ia + i - ie, ib + ic - i, jf});
    if (!m1 || !m2 || !m3) continue;
    lhs += pad_left(n, a, *m1) * pad_right(*m2, n, b + c - i) * pad_left(n, e, *m3);
  }

  DenseMatrix<T> rhs(size, size);
  for (int j = 0; j <= ia + ib; ++j) {
    const auto* m1 = op.block({ia, ib, j});
    const auto* m2 = op.block({ia + ib - j, ic, jf + ie - j});
    const auto* m3 = op.block({j, jf + ie - j, ie});
    if (!m1 || !m2 || !m3) continue;
    rhs += pad_right(*m1, n, c) * pad_left(n, j, *m2) * pad_right(*m3, n, g - e - f);
  }
  return {std::move(lhs), std::move(rhs)};
}

template <class T>
NumericReport check_ybe_graded(const GradedOperator<T>& op, unsigned g, double tol) {
  const auto start = std::chrono::steady_clock::now();
  if (g > op.max_grade()) throw std::out_of_range("grade exceeds the operator's max grade");
  NumericReport report;
  report.check = "ybe";
  report.params = {static_cast<int>(g)};
  for (unsigned a = 0; a <= g; ++a) {
    for (unsigned b = 0; a + b <= g; ++b) {
      const unsigned c = g - a - b;
      for (unsigned e = 0; e <= g; ++e) {
        for (unsigned f = 0; e + f <= g; ++f) {
          const auto [lhs, rhs] = ybe_sides(op, a, b, c, e, f);
          record(report, lhs, rhs,
                 {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(e),
                  static_cast<int>(f)});
        }
      }
    }
  }
  report.holds = within<T>(report.relative_residual, tol);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

template <class T>
DenseMatrix<T> tensor_power(const DenseMatrix<T>& f, unsigned n) {
  DenseMatrix<T> out = DenseMatrix<T>::identity(1);
  for (unsigned i = 0; i < n; ++i) out = kronecker(out, f);
  return out;
}

template <class T>
double intertwiner_residual(const Intertwiner<T>& f, const RMatrix<T>& r, const RMatrix<T>& r_prime) {
  if (f.source_dim != r.dim || f.target_dim != r_prime.dim) {
    throw std::invalid_argument("intertwiner dimensions do not match the R-matrices");
  }
  const auto f2 = tensor_power(f.matrix, 2);
  return max_abs_difference(f2 * r.matrix, r_prime.matrix * f2);
}

template <class T>
NumericReport check_functoriality(const GradedOperator<T>& op, const GradedOperator<T>& op_prime,
                                  const Intertwiner<T>& f, unsigned g, double tol) {
  const auto start = std::chrono::steady_clock::now();
  if (f.source_dim != op.dim() || f.target_dim != op_prime.dim()) {
    throw std::invalid_argument("intertwiner dimensions do not match the operators");
  }
  if (f.matrix.rows() != f.target_dim || f.matrix.cols() != f.source_dim) {
    throw std::invalid_argument("intertwiner matrix has the wrong shape");
  }
  if (!(op.q() == op_prime.q())) throw std::invalid_argument("operators are built at different q");
  if (g > op.max_grade() || g > op_prime.max_grade()) {
    throw std::out_of_range("grade exceeds the operators' max grade");
  }
  if (op.max_grade() >= 2 && op_prime.max_grade() >= 2) {
    const auto* r = op.block({1, 1, 1});
    const auto* rp = op_prime.block({1, 1, 1});
    if (r && rp) {
      const double pre = intertwiner_residual(f, RMatrix<T>{op.dim(), *r}, RMatrix<T>{op_prime.dim(), *rp});
      if (!within<T>(pre, tol)) {
        throw PreconditionError("map does not intertwine the R-matrices (residual " + std::to_string(pre) + ")",
                                pre);
      }
    }
  }

  NumericReport report;
  report.check = "functoriality";
  report.params = {static_cast<int>(g)};
  const auto fg = tensor_power(f.matrix, g);
  const DenseMatrix<T> zero_source(fg.cols(), fg.cols());
  const DenseMatrix<T> zero_target(fg.rows(), fg.rows());
  std::set<BlockLabel> labels;
  for (const auto* o : {&op, &op_prime}) {
    for (const auto& [label, m] : o->blocks()) {
      if (static_cast<unsigned>(label.a + label.b) == g) labels.insert(label);
    }
  }
  for (const auto& label : labels) {
    const auto* a = op.block(label);
    const auto* ap = op_prime.block(label);
    record(report, fg * (a ? *a : zero_source), (ap ? *ap : zero_target) * fg, {label.a, label.b, label.c});
  }
  report.holds = within<T>(report.relative_residual, tol);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

template <class T>
DenseMatrix<T> diagonal_block(unsigned b, unsigned c, const RMatrix<T>& r, const T& q) {
  return rep_elem(beta(b, c), b + c, q, r).matrix;
}

template <class T>
std::string graded_operator_to_json(const GradedOperator<T>& op) {
  nlohmann::json doc;
  doc["format"] = "graded-operator";
  doc["scalar"] = ScalarTraits<T>::name();
  doc["dim"] = op.dim();
  doc["q"] = scalar_to_json(op.q());
  doc["max_grade"] = op.max_grade();
  doc["blocks"] = nlohmann::json::array();
  for (const auto& [label, m] : op.blocks()) {
    doc["blocks"].push_back({{"b", label.a}, {"c", label.b}, {"k", label.c}, {"entries", matrix_to_json(m)}});
  }
  return doc.dump();
}

template <class T>
GradedOperator<T> parse_graded_operator(std::string_view text) {
  const auto doc = parse_document(text, "operator document");
  if (!doc.is_object() || doc.value("format", "") != "graded-operator") {
    throw FormatError("not a graded-operator document");
  }
  const auto dim = static_cast<std::size_t>(require_count(doc, "dim", 1));
  const auto max_grade = static_cast<unsigned>(require_count(doc, "max_grade", 0));
  if (!doc.contains("q")) throw FormatError("operator document needs 'q'");
  const T q = scalar_from_json<T>(doc["q"]);
  if (ScalarTraits<T>::is_zero(q)) throw FormatError("q must be non-zero");
  if (!doc.contains("blocks") || !doc["blocks"].is_array()) throw FormatError("'blocks' must be an array");

  typename GradedOperator<T>::Blocks blocks;
  for (const auto& record : doc["blocks"]) {
    if (!record.is_object()) throw FormatError("block record must be an object");
    const int b = static_cast<int>(require_count(record, "b", 0));
    const int c = static_cast<int>(require_count(record, "c", 0));
    const int k = static_cast<int>(require_count(record, "k", 0));
    if (k > c) throw FormatError("block {" + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(k) +
                                 "} violates triangularity");
    if (static_cast<unsigned>(b + c) > max_grade) throw FormatError("block grade exceeds max_grade");
    if (!record.contains("entries")) throw FormatError("block record needs 'entries'");
    const std::size_t size = int_power(dim, static_cast<std::size_t>(b + c));
    if (!blocks.emplace(BlockLabel{b, c, k}, matrix_from_json<T>(record["entries"], size, size)).second) {
      throw FormatError("duplicate block record");
    }
  }
  if (blocks.size() != block_count(max_grade)) {
    throw FormatError("operator document is missing blocks: found " + std::to_string(blocks.size()) + " of " +
                      std::to_string(block_count(max_grade)));
  }
  return GradedOperator<T>::from_blocks(dim, q, max_grade, std::move(blocks));
}

template <class T>
GradedOperator<T> load_graded_operator(const std::filesystem::path& path) {
  return parse_graded_operator<T>(read_file(path));
}

template <class T>
Intertwiner<T> parse_intertwiner(std::string_view text) {
  const auto doc = parse_document(text, "intertwiner document");
  if (!doc.is_object()) throw FormatError("intertwiner document must be an object");
  Intertwiner<T> f;
  f.source_dim = static_cast<std::size_t>(require_count(doc, "source_dim", 1));
  f.target_dim = static_cast<std::size_t>(require_count(doc, "target_dim", 1));
  if (!doc.contains("entries")) throw FormatError("intertwiner document needs 'entries'");
  f.matrix = matrix_from_json<T>(doc["entries"], f.target_dim, f.source_dim);
  return f;
}

template <class T>
Intertwiner<T> load_intertwiner(const std::filesystem::path& path) {
  return parse_intertwiner<T>(read_file(path));
}

std::map<BlockLabel, double> block_condition_numbers(const GradedOperator<double>& op) {
  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::map<BlockLabel, double> out;
  for (const auto& [label, m] : op.blocks()) {
    const Eigen::Map<const RowMajor> view(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                          static_cast<Eigen::Index>(m.cols()));
    const Eigen::JacobiSVD<RowMajor> svd(view);
    const auto& s = svd.singularValues();
    const double smallest = s(s.size() - 1);
    out[label] = smallest == 0.0 ? std::numeric_limits<double>::infinity() : s(0) / smallest;
  }
  return out;
}

#define TENSORBRAID_INSTANTIATE(T)                                                                          \
  template class GradedOperator<T>;                                                                         \
  template GradedOperator<T> assemble<T>(const RMatrix<T>&, const T&, unsigned, double);                    \
  template std::vector<ExchangeTerm<T>> apply_exchange<T>(const GradedOperator<T>&, unsigned,               \
                                                          std::span<const T>, unsigned, std::span<const T>); \
  template std::pair<DenseMatrix<T>, DenseMatrix<T>> ybe_sides<T>(const GradedOperator<T>&, unsigned,       \
                                                                  unsigned, unsigned, unsigned, unsigned);  \
  template NumericReport check_ybe_graded<T>(const GradedOperator<T>&, unsigned, double);                   \
  template DenseMatrix<T> tensor_power<T>(const DenseMatrix<T>&, unsigned);                                 \
  template double intertwiner_residual<T>(const Intertwiner<T>&, const RMatrix<T>&, const RMatrix<T>&);     \
  template NumericReport check_functoriality<T>(const GradedOperator<T>&, const GradedOperator<T>&,         \
                                                const Intertwiner<T>&, unsigned, double);                   \
  template DenseMatrix<T> diagonal_block<T>(unsigned, unsigned, const RMatrix<T>&, const T&);               \
  template std::string graded_operator_to_json<T>(const GradedOperator<T>&);                                \
  template GradedOperator<T> parse_graded_operator<T>(std::string_view);                                    \
  template GradedOperator<T> load_graded_operator<T>(const std::filesystem::path&);                         \
  template Intertwiner<T> parse_intertwiner<T>(std::string_view);                                           \
  template Intertwiner<T> load_intertwiner<T>(const std::filesystem::path&);

TENSORBRAID_INSTANTIATE(double)
TENSORBRAID_INSTANTIATE(Rational)

#undef TENSORBRAID_INSTANTIATE

}  // namespace tensorbraid
