#pragma once

#include <string>
#include <vector>

#include "qtrace/qscalar.hpp"
#include "qtrace/qtensor.hpp"

namespace qtrace {

template <class R>
struct Matrix2 {
  R e11, e12, e21, e22;
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

template <class R>
Matrix2<R> mat_mul(const Matrix2<R>& x, const Matrix2<R>& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

template <class R>
R mat_trace(const Matrix2<R>& m) {
  return m.e11 + m.e22;
}

/// Pattern over {U, L}; position i (1-based) owns the variable pair (a_i, b_i).
class WordSpec {
 public:
  explicit WordSpec(std::string pattern);
  const std::string& pattern() const { return pattern_; }
  int length() const { return static_cast<int>(pattern_.size()); }

 private:
  std::string pattern_;
};

/// Triangular generators of the word: position i gives
///   'U' -> (a_i, b_i; 0, a_i^{-1})   'L' -> (a_i, 0; b_i, a_i^{-1})
/// in the tensor algebra on length(pattern) variable pairs.
std::vector<Matrix2<TElement>> build_word(const WordSpec& spec, CycloCtxPtr ctx = nullptr);

/// Left-to-right product. The factors must have pairwise disjoint variable
/// support unless the caller asserts commutation.
Matrix2<TElement> word_product(const std::vector<Matrix2<TElement>>& ms,
                               bool assume_commuting = false);

/// Entry-wise power substitution a_i, b_i -> a_i^n, b_i^n. Entries must be
/// single monomials. The result is a point at parameter q^{n^2} living in
/// the same ambient algebra.
std::vector<Matrix2<TElement>> word_shift(const std::vector<Matrix2<TElement>>& ms, int n);

/// Checks the six generator relations and the quantum determinant
/// e11 e22 - q^{-1} e12 e21 = 1 exactly in R.
template <class R>
bool validate_sl2q(const Matrix2<R>& A) {
  const R& a = A.e11;
  const R& b = A.e12;
  const R& c = A.e21;
  const R& d = A.e22;
  const R one = one_like(a);
  return b * a == qscale(a * b, 1) && c * a == qscale(a * c, 1) &&
         d * b == qscale(b * d, 1) && d * c == qscale(c * d, 1) && b * c == c * b &&
         a * d - qscale(b * c, -1) == one && d * a - qscale(b * c, 1) == one;
}

/// (e22, -q e12; -q^{-1} e21, e11): the two-sided formal inverse, which is
/// a point of the ring at the opposite parameter q^{-1}, not of the same
/// ring. Kept as a helper only; no opposite-algebra type exists here.
template <class R>
Matrix2<R> formal_inverse(const Matrix2<R>& A) {
  return {A.e22, qscale(-A.e12, 1), qscale(-A.e21, -1), A.e11};
}

/// Like validate_sl2q but with q replaced by q^{-1}, the convention the
/// formal inverse lives in.
template <class R>
bool validate_sl2q_opposite(const Matrix2<R>& A) {
  const R& a = A.e11;
  const R& b = A.e12;
  const R& c = A.e21;
  const R& d = A.e22;
  const R one = one_like(a);
  return b * a == qscale(a * b, -1) && c * a == qscale(a * c, -1) &&
         d * b == qscale(b * d, -1) && d * c == qscale(c * d, -1) && b * c == c * b &&
         a * d - qscale(b * c, 1) == one && d * a - qscale(b * c, -1) == one;
}

/// Trace of the unipotent integer specialization q = 1, a_i = b_i = 1:
/// 'U' -> (1,1;0,1), 'L' -> (1,0;1,1).
Int t_zero(const WordSpec& spec);

}  // namespace qtrace
