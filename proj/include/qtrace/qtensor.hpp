#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qtrace/qscalar.hpp"

namespace qtrace {

/// Exponent vector of the normal-ordered word a1^{alpha_1} b1^{beta_1} ...
/// ak^{alpha_k} bk^{beta_k}. alpha entries may be negative, beta entries
/// may not. Ordering is lexicographic on (alpha, beta), which fixes the
/// canonical term order everywhere.
struct TMonomial {
  std::vector<int> alpha;
  std::vector<int> beta;
  friend auto operator<=>(const TMonomial&, const TMonomial&) = default;
};

/// Element of the algebra on k pairs (a_i, b_i) with b_i a_i = q a_i b_i,
/// a_i invertible, and distinct indices commuting. Stored as a sparse map
/// from normal-ordered monomials to QLaurent coefficients; no zero
/// coefficient is ever kept.
class TElement {
 public:
  TElement() = default;

  static TElement zero(int k, CycloCtxPtr ctx = nullptr);
  static TElement constant(int k, QLaurent c, CycloCtxPtr ctx = nullptr);
  static TElement one(int k, CycloCtxPtr ctx = nullptr);
  static TElement monomial(int k, TMonomial m, QLaurent c = 1, CycloCtxPtr ctx = nullptr);
  /// a_index^exp (index is 1-based).
  static TElement gen_a(int k, int index, int exp = 1, CycloCtxPtr ctx = nullptr);
  /// b_index (index is 1-based).
  static TElement gen_b(int k, int index, CycloCtxPtr ctx = nullptr);

  int var_count() const { return k_; }
  const CycloCtxPtr& context() const { return ctx_; }
  const std::map<TMonomial, QLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend TElement operator+(const TElement& x, const TElement& y);
  friend TElement operator-(const TElement& x, const TElement& y);
  /// Product with the normal-order rule: joining (alpha, beta) and
  /// (alpha', beta') costs q^{sum_i alpha'_i * beta_i}.
  friend TElement operator*(const TElement& x, const TElement& y);
  TElement operator-() const;
  friend TElement operator*(const QLaurent& c, const TElement& x);
  bool operator==(const TElement& o) const;

 private:
  int k_ = 0;
  CycloCtxPtr ctx_;
  std::map<TMonomial, QLaurent> terms_;
  void insert_(TMonomial m, QLaurent c);
};

/// Monomial-wise power substitution (alpha, beta) -> (n alpha, n beta),
/// coefficients untouched. Not a ring homomorphism at generic q.
TElement frobenius_shift(const TElement& x, int n);

/// Substitutes q = 1 and every a_i = b_i = 1. Generic-q notion: rejects
/// elements carrying a cyclotomic context.
Int eval_counting(const TElement& x);

/// True iff every integer coefficient of every QLaurent coefficient is >= 0.
bool is_nonneg(const TElement& x);

/// 1-based indices of the variable pairs that actually occur.
std::vector<int> support(const TElement& x);

/// Canonical text form, terms in map order. Coefficient 1 is omitted,
/// single-term coefficients print bare, multi-term ones in parentheses:
/// `(1+q^2)*a1^1*b1^1*a2^-1`.
std::string render(const TElement& x);

/// Same, with caller-chosen variable names; names[i] = {a-name, b-name}
/// for pair i+1.
std::string render(const TElement& x,
                   const std::vector<std::pair<std::string, std::string>>& names);

TElement make_constant(const TElement& like, const Int& c);
inline Int make_constant(const Int&, const Int& c) { return c; }

/// Multiplies by the scalar q^e (respecting any attached context).
TElement qscale(const TElement& x, long e);

inline TElement zero_like(const TElement& like) {
  return TElement::zero(like.var_count(), like.context());
}
inline TElement one_like(const TElement& like) {
  return TElement::one(like.var_count(), like.context());
}
inline bool is_zero(const TElement& x) { return x.is_zero(); }

/// Horner evaluation of an integer polynomial in any ring that provides
/// +, * and make_constant.
template <class R>
R poly_eval(const IntPoly& p, const R& x) {
  R acc = make_constant(x, p.is_zero() ? Int(0) : p.coeff(p.degree()));
  for (int d = p.degree() - 1; d >= 0; --d) acc = acc * x + make_constant(x, p.coeff(d));
  return acc;
}

}  // namespace qtrace
