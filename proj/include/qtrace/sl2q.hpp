#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "qtrace/qscalar.hpp"

namespace qtrace {

/// Basis monomial a^i b^j c^k d^l of the quantum coordinate ring, with
/// i*l = 0: the determinant relation eliminates every a..d pair.
struct PBWMonomial {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Element of the quantum coordinate ring on a, b, c, d with
///   ba = q ab,  ca = q ac,  db = q bd,  dc = q cd,  bc = cb,
///   ad - q^{-1} bc = 1,
/// kept in PBW normal form over QLaurent coefficients.
class SL2qElement {
 public:
  SL2qElement() = default;

  static SL2qElement zero();
  static SL2qElement one();
  static SL2qElement generator(char g);  // 'a', 'b', 'c' or 'd'
  static SL2qElement monomial(PBWMonomial m, QLaurent c = 1);

  const std::map<PBWMonomial, QLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  friend SL2qElement operator+(const SL2qElement& x, const SL2qElement& y);
  friend SL2qElement operator-(const SL2qElement& x, const SL2qElement& y);
  /// Normal-form product. Monomials of the right factor are folded in one
  /// generator at a time; the mixed pair a^i ... d^l collapses through
  ///   a^i b^j c^k d^l ->
  ///     q^{-j-k} a^{i-1} b^j c^k d^{l-1} + q^{-j-k-1} a^{i-1} b^{j+1} c^{k+1} d^{l-1}.
  friend SL2qElement operator*(const SL2qElement& x, const SL2qElement& y);
  SL2qElement operator-() const;
  friend SL2qElement operator*(const QLaurent& c, const SL2qElement& x);
  bool operator==(const SL2qElement&) const = default;

 private:
  std::map<PBWMonomial, QLaurent> terms_;
  void insert_(PBWMonomial m, QLaurent c);
};

enum class ReduceOrder { leftmost, rightmost };

/// Normal form of a free word over {a, b, c, d}, by scanning for relation
/// occurrences until a fixpoint. Independent of operator*; used as its
/// cross-check. Both scan orders must give the same result.
SL2qElement pbw_nf_word(std::string_view word, ReduceOrder order = ReduceOrder::leftmost);

/// Counit: algebra map with a, d -> 1 and b, c -> 0.
QLaurent counit(const SL2qElement& x);

/// Antipode: the algebra anti-homomorphism with a -> d, d -> a, b -> -q b,
/// c -> -q^{-1} c, result PBW-normalized.
SL2qElement antipode(const SL2qElement& x);

/// Formal sum of (left, right) basis pairs with QLaurent coefficients.
using SL2qTensor = std::map<std::pair<PBWMonomial, PBWMonomial>, QLaurent>;

/// Coproduct: the algebra map with a -> a(x)a + b(x)c, b -> a(x)b + b(x)d,
/// c -> c(x)a + d(x)c, d -> c(x)b + d(x)d, extended with the componentwise
/// tensor-square product.
SL2qTensor coproduct(const SL2qElement& x);

/// Canonical text form `a^i*b^j*c^k*d^l`, keys in map order, same
/// coefficient conventions as the tensor-algebra renderer.
std::string render(const SL2qElement& x);

SL2qElement make_constant(const SL2qElement& like, const Int& c);
SL2qElement qscale(const SL2qElement& x, long e);

inline SL2qElement zero_like(const SL2qElement&) { return SL2qElement::zero(); }
inline SL2qElement one_like(const SL2qElement&) { return SL2qElement::one(); }
inline bool is_zero(const SL2qElement& x) { return x.is_zero(); }

}  // namespace qtrace
