#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qtrace/qtensor.hpp"

using namespace qtrace;

namespace {

TElement pow_elem(const TElement& x, int e) {
  TElement acc = one_like(x);
  for (int t = 0; t < e; ++t) acc = acc * x;
  return acc;
}

TElement random_element(std::mt19937& rng, int k, CycloCtxPtr ctx = nullptr) {
  std::uniform_int_distribution<int> n_terms(1, 4);
  std::uniform_int_distribution<int> a_exp(-3, 3);
  std::uniform_int_distribution<int> b_exp(0, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<long> q_exp(-2, 2);
  TElement r = TElement::zero(k, ctx);
  int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    TMonomial m{std::vector<int>(static_cast<std::size_t>(k)),
                std::vector<int>(static_cast<std::size_t>(k))};
    for (int i = 0; i < k; ++i) {
      m.alpha[static_cast<std::size_t>(i)] = a_exp(rng);
      m.beta[static_cast<std::size_t>(i)] = b_exp(rng);
    }
    QLaurent c = QLaurent::q_power(q_exp(rng), coeff(rng), ctx);
    r = r + TElement::monomial(k, std::move(m), std::move(c), ctx);
  }
  return r;
}

}  // namespace

TEST_CASE("normal-order product of single generators") {
  const int k = 2;
  TElement a1 = TElement::gen_a(k, 1);
  TElement b1 = TElement::gen_b(k, 1);
  TElement a2 = TElement::gen_a(k, 2);

  // b1 * a1 = q a1 b1
  TMonomial ab{{1, 0}, {1, 0}};
  CHECK(b1 * a1 == TElement::monomial(k, ab, QLaurent::q_power(1)));
  // one swap inside (a1 b1)^2
  TElement a1b1 = a1 * b1;
  TMonomial sq{{2, 0}, {2, 0}};
  CHECK(a1b1 * a1b1 == TElement::monomial(k, sq, QLaurent::q_power(1)));
  // distinct indices commute
  CHECK(b1 * a2 == a2 * b1);
  TMonomial cross{{0, 1}, {1, 0}};
  CHECK(b1 * a2 == TElement::monomial(k, cross));
}

TEST_CASE("addition cancels and collects") {
  const int k = 1;
  TElement a = TElement::gen_a(k, 1);
  TElement b = TElement::gen_b(k, 1);
  CHECK((a + (-a)).is_zero());
  CHECK((a + b) + a == QLaurent(2) * a + b);
  CHECK(QLaurent::q_power(1) * a + a == (QLaurent(1) + QLaurent::q_power(1)) * a);
  CHECK_THROWS_AS(a + TElement::gen_a(2, 1), std::invalid_argument);
}

TEST_CASE("frobenius shift raises exponent vectors") {
  const int k = 2;
  CHECK(frobenius_shift(TElement::gen_a(k, 1), 3) == TElement::gen_a(k, 1, 3));
  CHECK(frobenius_shift(TElement::gen_a(k, 1, -1), 3) == TElement::gen_a(k, 1, -3));
  TMonomial b25{{0, 0}, {0, 5}};
  CHECK(frobenius_shift(TElement::gen_b(k, 2), 5) == TElement::monomial(k, b25));
  CHECK(frobenius_shift(TElement::gen_b(k, 2), 1) == TElement::gen_b(k, 2));
  CHECK_THROWS_AS(frobenius_shift(TElement::gen_a(k, 1), 0), std::invalid_argument);
  // coefficients are untouched, so the shift is not multiplicative at generic q
  TElement x = TElement::gen_a(k, 1) + TElement::gen_b(k, 1);
  CHECK(frobenius_shift(x * x, 2) != frobenius_shift(x, 2) * frobenius_shift(x, 2));
}

TEST_CASE("eval_counting sums coefficients at q=1") {
  const int k = 1;
  TElement a = TElement::gen_a(k, 1);
  TElement b = TElement::gen_b(k, 1);
  TElement ainv = TElement::gen_a(k, 1, -1);
  CHECK(eval_counting(a + b + ainv) == 3);
  CHECK(eval_counting((QLaurent(1) + QLaurent::q_power(1)) * (a * b)) == 2);
  CHECK(eval_counting(TElement::zero(k)) == 0);
  auto ctx = make_cyclo_context(4);
  CHECK_THROWS_AS(eval_counting(TElement::gen_a(1, 1, 1, ctx)), std::domain_error);
}

TEST_CASE("eval_counting is multiplicative and additive") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    TElement x = random_element(rng, 2);
    TElement y = random_element(rng, 2);
    CHECK(eval_counting(x * y) == eval_counting(x) * eval_counting(y));
    CHECK(eval_counting(x + y) == eval_counting(x) + eval_counting(y));
  }
}

TEST_CASE("is_nonneg inspects every integer coefficient") {
  const int k = 1;
  TElement a = TElement::gen_a(k, 1);
  TElement b = TElement::gen_b(k, 1);
  CHECK(is_nonneg(QLaurent::q_power(-1) * a + QLaurent::q_power(3) * b));
  CHECK(!is_nonneg(a - b));
  CHECK(!is_nonneg((QLaurent(1) - QLaurent::q_power(2)) * a));
  CHECK(is_nonneg(TElement::zero(k)));
}

namespace {

// Letter-by-letter oracle for the product q-factor: multiply single
// generators in word order, then bubble-sort into normal order, charging
// q^e each time some b_i crosses a_i^e of the same index.
struct Letter {
  int index;
  char type;  // 'a' or 'b'
  int exp;    // +-1 for 'a', +1 for 'b'
};

TElement letter_sort_product(int k, const std::vector<Letter>& word) {
  std::vector<Letter> w = word;
  long q_exp = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto key = [](const Letter& l) { return l.index * 2 + (l.type == 'b' ? 1 : 0); };
      if (key(w[i]) > key(w[i + 1])) {
        if (w[i].index == w[i + 1].index) q_exp += w[i + 1].exp;  // b_i over a_i^e
        std::swap(w[i], w[i + 1]);
        moved = true;
      }
    }
  }
  TMonomial m{std::vector<int>(static_cast<std::size_t>(k)),
              std::vector<int>(static_cast<std::size_t>(k))};
  for (const Letter& l : w) {
    if (l.type == 'a')
      m.alpha[static_cast<std::size_t>(l.index) - 1] += l.exp;
    else
      m.beta[static_cast<std::size_t>(l.index) - 1] += 1;
  }
  return TElement::monomial(k, std::move(m), QLaurent::q_power(q_exp));
}

}  // namespace

TEST_CASE("product q-factor agrees with letter-by-letter swapping") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> kdist(1, 3);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    int k = kdist(rng);
    std::uniform_int_distribution<int> idx(1, k);
    int n = len(rng);
    std::vector<Letter> word;
    TElement folded = TElement::one(k);
    for (int i = 0; i < n; ++i) {
      Letter l{idx(rng), coin(rng) ? 'a' : 'b', 1};
      if (l.type == 'a' && coin(rng)) l.exp = -1;
      word.push_back(l);
      folded = folded * (l.type == 'a' ? TElement::gen_a(k, l.index, l.exp)
                                       : TElement::gen_b(k, l.index));
    }
    CHECK(folded == letter_sort_product(k, word));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<int> kdist(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int k = kdist(rng);
    TElement x = random_element(rng, k);
    TElement y = random_element(rng, k);
    TElement z = random_element(rng, k);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * one_like(x) == x);
    CHECK(one_like(x) * x == x);
  }
}

TEST_CASE("associativity survives cyclotomic reduction") {
  std::mt19937 rng(13579);
  auto ctx = make_cyclo_context(6);
  for (int trial = 0; trial < 40; ++trial) {
    TElement x = random_element(rng, 2, ctx);
    TElement y = random_element(rng, 2, ctx);
    TElement z = random_element(rng, 2, ctx);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("quantum binomial formula at generic q") {
  const int k = 1;
  TElement x = TElement::gen_a(k, 1);
  TElement y = TElement::gen_b(k, 1);
  for (int n = 0; n <= 10; ++n) {
    TElement expanded = pow_elem(x + y, n);
    TElement expected = TElement::zero(k);
    for (int j = 0; j <= n; ++j) {
      TMonomial m{{n - j}, {j}};
      expected = expected + TElement::monomial(k, m, qbinom(n, j));
    }
    CHECK(expanded == expected);
  }
}

TEST_CASE("power identity at a primitive n-th root of unity") {
  for (int n = 2; n <= 10; ++n) {
    auto ctx = make_cyclo_context(n);
    TElement x = TElement::gen_a(1, 1, 1, ctx);
    TElement y = TElement::gen_b(1, 1, ctx);
    TElement lhs = pow_elem(x + y, n);
    TElement rhs = TElement::gen_a(1, 1, n, ctx) + pow_elem(y, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("q = -1 is not a primitive 4th root: the quartic keeps its middle term") {
  auto ctx = make_cyclo_context(2);
  TElement x = TElement::gen_a(1, 1, 1, ctx);
  TElement y = TElement::gen_b(1, 1, ctx);
  TElement lhs = pow_elem(x + y, 4);
  TMonomial x4{{4}, {0}}, x2y2{{2}, {2}}, y4{{0}, {4}};
  TElement expected = TElement::monomial(1, x4, 1, ctx) +
                      TElement::monomial(1, x2y2, 2, ctx) +
                      TElement::monomial(1, y4, 1, ctx);
  CHECK(lhs == expected);
}

TEST_CASE("poly_eval runs Horner in the host ring") {
  const int k = 1;
  TElement x = TElement::gen_a(k, 1) + TElement::gen_a(k, 1, -1);
  CHECK(poly_eval(cheb(1, ChebKind::first), x) == x);
  // T_2(a + a^-1) = a^2 + a^-2
  TElement expected = TElement::gen_a(k, 1, 2) + TElement::gen_a(k, 1, -2);
  CHECK(poly_eval(cheb(2, ChebKind::first), x) == expected);
  CHECK(poly_eval(IntPoly(), x).is_zero());
  CHECK(poly_eval(cheb(4, ChebKind::first), Int(3)) == 47);  // 81 - 36 + 2
}

TEST_CASE("support reports used variable pairs") {
  const int k = 3;
  TElement x = TElement::gen_a(k, 1) * TElement::gen_b(k, 3);
  CHECK(support(x) == std::vector<int>{1, 3});
  CHECK(support(TElement::one(k)).empty());
}

TEST_CASE("canonical rendering") {
  const int k = 2;
  TElement x = TElement::monomial(k, TMonomial{{1, -1}, {1, 0}}, QLaurent(1) + QLaurent::q_power(2));
  CHECK(render(x) == "(1+q^2)*a1^1*b1^1*a2^-1");
  TElement sum = TElement::gen_a(k, 1) - TElement::gen_b(k, 2);
  CHECK(render(sum) == "-b2^1 + a1^1");
  CHECK(render(TElement::zero(k)) == "0");
  CHECK(render(TElement::one(k)) == "1");
  CHECK(render(QLaurent(-3) * TElement::one(k)) == "-3");
  CHECK(render(QLaurent::q_power(2, 2) * TElement::gen_b(k, 1)) == "2q^2*b1^1");
  TElement xy = TElement::monomial(1, TMonomial{{2}, {2}}, 2);
  CHECK(render(xy, {{"X", "Y"}}) == "2*X^2*Y^2");
}
