#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tensorbraid/combinators.hpp"
#include "tensorbraid/dense.hpp"
#include "tensorbraid/local_rep.hpp"

namespace tensorbraid {

enum class Triangularity { Enforced, Unchecked };

// The braiding T(R) on the truncation of T(V) to total grade <= max_grade,
// stored blockwise.  Block {b, c, k} is the N^{b+c} x N^{b+c} matrix in front
// of y^{[k]} x^{[b+c-k]} in the exchange of x^{[b]} with y^{[c]}.
template <class T>
class GradedOperator {
 public:
  using Blocks = std::map<BlockLabel, DenseMatrix<T>>;

  GradedOperator() = default;
  static GradedOperator from_blocks(std::size_t dim, T q, unsigned max_grade, Blocks blocks,
                                    Triangularity policy = Triangularity::Enforced);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const T& q() const { return q_; }
  [[nodiscard]] unsigned max_grade() const { return max_grade_; }
  [[nodiscard]] const Blocks& blocks() const { return blocks_; }
  // nullptr when the block is absent (i.e. zero).
  [[nodiscard]] const DenseMatrix<T>* block(const BlockLabel& label) const;

 private:
  std::size_t dim_ = 0;
  T q_{1};
  unsigned max_grade_ = 0;
  Blocks blocks_;
};

// Blocks {b, c, k} = rho_{qR}(A^{b,c}_k) for b + c <= max_grade, 0 <= k <= c.
// Rejects q = 0 and R-matrices failing check_rmatrix at `tol`.
template <class T>
GradedOperator<T> assemble(const RMatrix<T>& r, const T& q, unsigned max_grade, double tol = 1e-9);

// Number of blocks in an assembled operator: sum over b + c <= g of (c + 1).
std::size_t block_count(unsigned max_grade);

template <class T>
struct ExchangeTerm {
  unsigned y_grade = 0;
  unsigned x_grade = 0;
  std::vector<T> components;  // length N^{y_grade + x_grade}
};

// x^{[b]} y^{[c]} -> sum_k A^{b,c}_k y^{[k]} x^{[b+c-k]}, one term per present block.
template <class T>
std::vector<ExchangeTerm<T>> apply_exchange(const GradedOperator<T>& op, unsigned b, std::span<const T> x,
                                            unsigned c, std::span<const T> y);

struct NumericReport {
  std::string check;
  std::vector<int> params;
  bool holds = false;
  double max_residual = 0.0;       // entrywise, absolute
  double relative_residual = 0.0;  // divided by max(1, largest entry of either side)
  std::vector<int> worst;          // tuple reaching relative_residual
  std::chrono::duration<double, std::milli> elapsed{};
};

// Both sides of the block Yang-Baxter system at inputs (a, b, c) and outputs
// (e, f), as N^{a+b+c} matrices built from the operator's blocks.  Sums run
// over every present block, so non-triangular blocks are not ignored.
template <class T>
std::pair<DenseMatrix<T>, DenseMatrix<T>> ybe_sides(const GradedOperator<T>& op, unsigned a, unsigned b,
                                                    unsigned c, unsigned e, unsigned f);

// Every (a, b, c) with a + b + c = g and every output split (e, f).  In
// floating point `holds` compares the relative residual with tol; exact
// scalars need a zero residual.
template <class T>
NumericReport check_ybe_graded(const GradedOperator<T>& op, unsigned g, double tol);

// Linear map f : V -> V', stored as a dim' x dim matrix.
template <class T>
struct Intertwiner {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  DenseMatrix<T> matrix;
};

template <class T>
DenseMatrix<T> tensor_power(const DenseMatrix<T>& f, unsigned n);

// Residual of (f x f) R = R' (f x f).
template <class T>
double intertwiner_residual(const Intertwiner<T>& f, const RMatrix<T>& r, const RMatrix<T>& r_prime);

class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  [[nodiscard]] double residual() const { return residual_; }

 private:
  double residual_;
};

// f^{(x)(b+c)} A^{b,c}_k = A'^{b,c}_k f^{(x)(b+c)} for b + c = g.  Throws
// PreconditionError when f does not intertwine the degree-one blocks.
template <class T>
NumericReport check_functoriality(const GradedOperator<T>& op, const GradedOperator<T>& op_prime,
                                  const Intertwiner<T>& f, unsigned g, double tol);

// Single block of the diagonal braiding: rho_{qR}(beta_{b,c}).
template <class T>
DenseMatrix<T> diagonal_block(unsigned b, unsigned c, const RMatrix<T>& r, const T& q);

template <class T>
std::string graded_operator_to_json(const GradedOperator<T>& op);
template <class T>
GradedOperator<T> parse_graded_operator(std::string_view text);
template <class T>
GradedOperator<T> load_graded_operator(const std::filesystem::path& path);

template <class T>
Intertwiner<T> parse_intertwiner(std::string_view text);
template <class T>
Intertwiner<T> load_intertwiner(const std::filesystem::path& path);

// 2-norm condition number of every block (infinity for singular blocks).
std::map<BlockLabel, double> block_condition_numbers(const GradedOperator<double>& op);

}  // namespace tensorbraid
