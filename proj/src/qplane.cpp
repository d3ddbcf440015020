#include "qtrace/qplane.hpp"

#include <stdexcept>

namespace qtrace {

namespace {

// A build_word generator has single-monomial entries with coefficient 1:
// a_i on the diagonal, b_i off it. Recovers (index, orientation).
struct GeneratorShape {
  int index = 0;
  bool upper = false;  // 'U': b sits above the diagonal
};

bool is_single_gen(const TElement& e, int index, int a_exp, int b_exp) {
  if (e.term_count() != 1) return false;
  const auto& [m, c] = *e.terms().begin();
  if (!c.is_one()) return false;
  for (std::size_t i = 0; i < m.alpha.size(); ++i) {
    int want_a = static_cast<int>(i) + 1 == index ? a_exp : 0;
    int want_b = static_cast<int>(i) + 1 == index ? b_exp : 0;
    if (m.alpha[i] != want_a || m.beta[i] != want_b) return false;
  }
  return true;
}

GeneratorShape probe_generator(const Matrix2<TElement>& gen) {
  if (gen.e11.term_count() != 1)
    throw std::invalid_argument("rho_closed_triangular: not a word generator");
  const auto& m = gen.e11.terms().begin()->first;
  int index = 0;
  for (std::size_t i = 0; i < m.alpha.size(); ++i)
    if (m.alpha[i] != 0 || m.beta[i] != 0) index = static_cast<int>(i) + 1;
  GeneratorShape shape;
  shape.index = index;
  if (is_single_gen(gen.e11, index, 1, 0) && is_single_gen(gen.e22, index, -1, 0) &&
      gen.e21.is_zero() && is_single_gen(gen.e12, index, 0, 1)) {
    shape.upper = true;
    return shape;
  }
  if (is_single_gen(gen.e11, index, 1, 0) && is_single_gen(gen.e22, index, -1, 0) &&
      gen.e12.is_zero() && is_single_gen(gen.e21, index, 0, 1)) {
    shape.upper = false;
    return shape;
  }
  throw std::invalid_argument("rho_closed_triangular: not a word generator");
}

}  // namespace

RhoMatrix<TElement> rho_closed_triangular(int n, const Matrix2<TElement>& gen) {
  if (n < 0) throw std::invalid_argument("rho_closed_triangular: negative degree");
  const GeneratorShape shape = probe_generator(gen);
  const int k = gen.e11.var_count();
  const CycloCtxPtr& ctx = gen.e11.context();
  RhoMatrix<TElement> M = rho_zero(n, gen.e11);
  auto entry = [&](int a_exp, int b_exp, QLaurent c) {
    TMonomial m{std::vector<int>(static_cast<std::size_t>(k), 0),
                std::vector<int>(static_cast<std::size_t>(k), 0)};
    m.alpha[static_cast<std::size_t>(shape.index) - 1] = a_exp;
    m.beta[static_cast<std::size_t>(shape.index) - 1] = b_exp;
    return TElement::monomial(k, std::move(m), std::move(c), ctx);
  };
  if (shape.upper) {
    // image of X^{n-u} Y^u under (a, b; 0, a^{-1}): nonzero for v >= u
    for (int u = 0; u <= n; ++u)
      for (int v = u; v <= n; ++v) {
        QLaurent c = qbinom(n - u, n - v, 2, ctx) *
                     QLaurent::q_power(-static_cast<long>(u) * (v - u), 1, ctx);
        M.at(v, u) = entry(n - u - v, v - u, std::move(c));
      }
  } else {
    // image of X^{n-u} Y^u under (a, 0; b, a^{-1}): nonzero for v <= u
    for (int u = 0; u <= n; ++u)
      for (int v = 0; v <= u; ++v) {
        QLaurent c = qbinom(u, v, 2, ctx) *
                     QLaurent::q_power(-static_cast<long>(v) * (u - v), 1, ctx);
        M.at(v, u) = entry(n - u - v, u - v, std::move(c));
      }
  }
  return M;
}

Matrix2<SL2qElement> tautological_point() {
  return {SL2qElement::generator('a'), SL2qElement::generator('b'),
          SL2qElement::generator('c'), SL2qElement::generator('d')};
}

}  // namespace qtrace
