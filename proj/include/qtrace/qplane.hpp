#pragma once

#include <vector>

#include "qtrace/qmatrix.hpp"
#include "qtrace/qscalar.hpp"
#include "qtrace/qtensor.hpp"
#include "qtrace/sl2q.hpp"

namespace qtrace {

/// Homogeneous degree-n element of the quantum plane over R, in the basis
/// X^{n-u} Y^u (coefficient at index u). YX = qXY; X and Y commute with R.
template <class R>
struct PlaneElement {
  int degree = 0;
  std::vector<R> coeffs;
  friend bool operator==(const PlaneElement&, const PlaneElement&) = default;
};

template <class R>
PlaneElement<R> plane_zero(int degree, const R& like) {
  return {degree, std::vector<R>(static_cast<std::size_t>(degree) + 1, zero_like(like))};
}

template <class R>
PlaneElement<R> plane_basis(int n, int u, const R& like) {
  PlaneElement<R> p = plane_zero(n, like);
  p.coeffs[static_cast<std::size_t>(u)] = one_like(like);
  return p;
}

template <class R>
PlaneElement<R> plane_add(const PlaneElement<R>& x, const PlaneElement<R>& y) {
  PlaneElement<R> r = x;
  for (std::size_t u = 0; u < r.coeffs.size(); ++u) r.coeffs[u] = r.coeffs[u] + y.coeffs[u];
  return r;
}

/// Coefficients of R collect to the front in factor order; moving Y^v past
/// X^{d2-w} costs q^{v (d2-w)}.
template <class R>
PlaneElement<R> plane_mul(const PlaneElement<R>& x, const PlaneElement<R>& y) {
  const R& like = x.coeffs.front();
  PlaneElement<R> out = plane_zero(x.degree + y.degree, like);
  for (int v = 0; v <= x.degree; ++v) {
    const R& xv = x.coeffs[static_cast<std::size_t>(v)];
    if (is_zero(xv)) continue;
    for (int w = 0; w <= y.degree; ++w) {
      const R& yw = y.coeffs[static_cast<std::size_t>(w)];
      if (is_zero(yw)) continue;
      long e = static_cast<long>(v) * (y.degree - w);
      out.coeffs[static_cast<std::size_t>(v + w)] =
          out.coeffs[static_cast<std::size_t>(v + w)] + qscale(xv * yw, e);
    }
  }
  return out;
}

template <class R>
PlaneElement<R> plane_scale_left(const PlaneElement<R>& x, const R& r) {
  PlaneElement<R> out = x;
  for (auto& c : out.coeffs) c = r * c;
  return out;
}

template <class R>
PlaneElement<R> plane_pow(const PlaneElement<R>& base, int e, const R& like) {
  PlaneElement<R> acc{0, {one_like(like)}};
  for (int t = 0; t < e; ++t) acc = plane_mul(acc, base);
  return acc;
}

/// Substitution action of a point: X -> e11 X + e12 Y, Y -> e21 X + e22 Y,
/// coefficients premultiplied from the left.
template <class R>
PlaneElement<R> apply_point(const Matrix2<R>& A, const PlaneElement<R>& p) {
  const R& like = A.e11;
  PlaneElement<R> img_x{1, {A.e11, A.e12}};
  PlaneElement<R> img_y{1, {A.e21, A.e22}};
  PlaneElement<R> out = plane_zero(p.degree, like);
  for (int u = 0; u <= p.degree; ++u) {
    const R& coeff = p.coeffs[static_cast<std::size_t>(u)];
    if (is_zero(coeff)) continue;
    PlaneElement<R> img =
        plane_mul(plane_pow(img_x, p.degree - u, like), plane_pow(img_y, u, like));
    out = plane_add(out, plane_scale_left(img, coeff));
  }
  return out;
}

/// (n+1) x (n+1) matrix of the degree-n action; entry (v, u) is the
/// coefficient of X^{n-v} Y^v in the image of X^{n-u} Y^u.
template <class R>
struct RhoMatrix {
  int degree = 0;
  std::vector<R> entries;  // row-major
  R& at(int v, int u) { return entries[static_cast<std::size_t>(v * (degree + 1) + u)]; }
  const R& at(int v, int u) const {
    return entries[static_cast<std::size_t>(v * (degree + 1) + u)];
  }
  friend bool operator==(const RhoMatrix&, const RhoMatrix&) = default;
};

template <class R>
RhoMatrix<R> rho_zero(int n, const R& like) {
  return {n, std::vector<R>(static_cast<std::size_t>((n + 1) * (n + 1)), zero_like(like))};
}

/// Column u is the image of the basis monomial X^{n-u} Y^u. The matrix of
/// a product point is the reversed-order product of the factor matrices.
template <class R>
RhoMatrix<R> rho_matrix(int n, const Matrix2<R>& A) {
  RhoMatrix<R> M = rho_zero(n, A.e11);
  for (int u = 0; u <= n; ++u) {
    PlaneElement<R> col = apply_point(A, plane_basis(n, u, A.e11));
    for (int v = 0; v <= n; ++v) M.at(v, u) = col.coeffs[static_cast<std::size_t>(v)];
  }
  return M;
}

template <class R>
RhoMatrix<R> rho_mul(const RhoMatrix<R>& A, const RhoMatrix<R>& B) {
  RhoMatrix<R> M = rho_zero(A.degree, A.entries.front());
  for (int v = 0; v <= A.degree; ++v)
    for (int u = 0; u <= A.degree; ++u) {
      R s = zero_like(A.entries.front());
      for (int w = 0; w <= A.degree; ++w) s = s + A.at(v, w) * B.at(w, u);
      M.at(v, u) = s;
    }
  return M;
}

template <class R>
R rho_trace(const RhoMatrix<R>& M) {
  R s = zero_like(M.entries.front());
  for (int v = 0; v <= M.degree; ++v) s = s + M.at(v, v);
  return s;
}

/// Closed-form matrix of the degree-n action of a triangular word
/// generator, filled directly from the quantum binomial entry formulas
/// in base q^2 (no substitution): upper-triangular for 'L' generators,
/// lower-triangular for 'U'.
RhoMatrix<TElement> rho_closed_triangular(int n, const Matrix2<TElement>& gen);

/// The identity map of the quantum coordinate ring, seen as the matrix of
/// its own generators.
Matrix2<SL2qElement> tautological_point();

}  // namespace qtrace
