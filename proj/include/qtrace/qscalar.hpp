#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtrace {

using Int = boost::multiprecision::cpp_int;

/// Dense one-variable polynomial over arbitrary-precision integers.
/// coeffs()[d] is the coefficient of x^d; the leading coefficient is
/// nonzero unless the polynomial is zero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(Int c);
  static IntPoly monomial(int degree, Int c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;
  std::string str(const std::string& var = "t") const;

  friend IntPoly operator+(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator-(const IntPoly& x, const IntPoly& y);
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  bool operator==(const IntPoly&) const = default;

  /// Quotient and remainder by a monic divisor. Exact over the integers.
  static void divmod(const IntPoly& num, const IntPoly& den, IntPoly& quot,
                     IntPoly& rem);

 private:
  std::vector<Int> coeffs_;
  void trim_();
};

/// m-th cyclotomic polynomial, by exact division of x^m - 1 by the
/// cyclotomic polynomials of the proper divisors of m.
IntPoly cyclo_poly(int m);

/// Fixes q as an exact primitive m-th root of unity; scalars live in
/// Z[q]/Phi_m(q). n is the multiplicative order of q^2.
struct CycloContext {
  int m = 1;
  int n = 1;
  IntPoly phi;
};

using CycloCtxPtr = std::shared_ptr<const CycloContext>;

CycloCtxPtr make_cyclo_context(int m);

/// Both null, or same m (else throws); returns the non-null one.
CycloCtxPtr merge_context(const CycloCtxPtr& a, const CycloCtxPtr& b);

/// Laurent polynomial in q with integer coefficients. When a CycloContext
/// is attached every value is kept reduced: exponents are first folded with
/// q^m = 1, then the remainder modulo Phi_m is stored, so equality is plain
/// term-wise comparison.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(int c) : QLaurent(Int(c)) {}
  QLaurent(Int c);

  static QLaurent q_power(long exp, Int coeff = 1, CycloCtxPtr ctx = nullptr);
  static QLaurent zero(CycloCtxPtr ctx);

  const std::map<long, Int>& terms() const { return terms_; }
  const CycloCtxPtr& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Re-attaches (or attaches) a context and reduces.
  QLaurent with_context(CycloCtxPtr ctx) const;

  Int eval_at_one() const;
  bool nonneg_coeffs() const;

  std::string str() const;

  friend QLaurent operator+(const QLaurent& x, const QLaurent& y);
  friend QLaurent operator-(const QLaurent& x, const QLaurent& y);
  friend QLaurent operator*(const QLaurent& x, const QLaurent& y);
  QLaurent operator-() const;
  bool operator==(const QLaurent& o) const;

 private:
  std::map<long, Int> terms_;
  CycloCtxPtr ctx_;
  void normalize_();
};

/// Clears negative exponents with q^m = 1, then reduces modulo Phi_m;
/// resulting exponents lie in [0, deg Phi_m).
QLaurent cyclo_reduce(const QLaurent& x, const CycloCtxPtr& ctx);

enum class QIntKind {
  standard,  // 1 + q + ... + q^{j-1}
  balanced,  // q^{j-1} + q^{j-3} + ... + q^{-j+1}
};

QLaurent qint(int j, QIntKind kind, CycloCtxPtr ctx = nullptr);

/// Gaussian binomial coefficient in base q^step, built by the Pascal-type
/// recurrence so no rational intermediate ever appears. All coefficients
/// are nonnegative at generic q.
QLaurent qbinom(int n, int k, int step = 1, CycloCtxPtr ctx = nullptr);

enum class ChebKind {
  first,   // T_0 = 2, T_1 = t, T_{n+1} = t T_n - T_{n-1}
  second,  // S_0 = 1, S_1 = t, S_{n+1} = t S_n - S_{n-1}
};

IntPoly cheb(int n, ChebKind kind);

}  // namespace qtrace
