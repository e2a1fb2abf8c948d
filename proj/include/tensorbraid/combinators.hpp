#pragma once

#include <compare>

#include "tensorbraid/group_ring.hpp"

namespace tensorbraid {

// Grades of a block of the tensor-space braiding: the coefficient in front
// of y^{[c]} x^{[a+b-c]} when x^{[a]} is exchanged with y^{[b]}.
struct BlockLabel {
  int a = 0;
  int b = 0;
  int c = 0;

  // Triangularity: only 0 <= c <= b can be non-zero.
  [[nodiscard]] bool admissible() const { return a >= 0 && b >= 0 && c >= 0 && c <= b; }
  friend auto operator<=>(const BlockLabel&, const BlockLabel&) = default;
};

// Exchange braid of a block of k strands past a block of l strands,
//   (s_k ... s_{k+l-1})(s_{k-1} ... s_{k+l-2}) ... (s_1 ... s_l).
PositiveWord beta_word(unsigned k, unsigned l);
// The same braid written column by column,
//   (s_k ... s_1)(s_{k+1} ... s_2) ... (s_{k+l-1} ... s_l).
PositiveWord beta_word_by_columns(unsigned k, unsigned l);
RingElement beta(unsigned k, unsigned l);

// Lift of the longest permutation of S_a, built by omega_a = beta_{a-1,1} omega_{a-1}^{+1}.
RingElement omega(unsigned a);

// Braid shuffle element Sh_{m,n}, from Sh_{m,n} = Sh_{m-1,n} + Sh_{m,n-1} beta_{m,1}^{+(n-1)}.
// Vanishes when m < 0 or n < 0.
RingElement shuffle(int m, int n);
// Same element from Sh_{m,n} = Sh_{m,n-1}^{+1} + Sh_{m-1,n}^{+1} beta_{1,n}.  Used as a cross-check.
RingElement shuffle_second_recursion(int m, int n);

// P_{k,n}(x,y) = (x - beta_{k,1} y)(x - beta_{k+1,1} y) ... (x - beta_{k+n-1,1} y).
RingElement pochhammer(unsigned k, unsigned n, const LaurentPoly& x, const LaurentPoly& y);
// p_{a,b} = P_{a,b}(1, q^{-2}).
RingElement unit_pochhammer(unsigned a, unsigned b);

// A^{a,b}_c = q^{1-a-c} Sh_{b-c,c}^{+a} beta_{a,c} p_{a,b-c}^{+c}; zero unless 0 <= c <= b.
RingElement tensor_block(const BlockLabel& label);
inline RingElement tensor_block(int a, int b, int c) { return tensor_block(BlockLabel{a, b, c}); }

}  // namespace tensorbraid
