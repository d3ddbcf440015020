#include "qtrace/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtrace {

WordSpec::WordSpec(std::string pattern) : pattern_(std::move(pattern)) {
  if (pattern_.empty()) throw std::invalid_argument("word pattern must be nonempty");
  for (char ch : pattern_)
    if (ch != 'U' && ch != 'L')
      throw std::invalid_argument(std::string("invalid word character '") + ch +
                                  "': pattern must match ^[UL]+$");
}

std::vector<Matrix2<TElement>> build_word(const WordSpec& spec, CycloCtxPtr ctx) {
  const int k = spec.length();
  std::vector<Matrix2<TElement>> ms;
  ms.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    TElement a = TElement::gen_a(k, i, 1, ctx);
    TElement ainv = TElement::gen_a(k, i, -1, ctx);
    TElement b = TElement::gen_b(k, i, ctx);
    TElement zero = TElement::zero(k, ctx);
    if (spec.pattern()[static_cast<std::size_t>(i) - 1] == 'U')
      ms.push_back({a, b, zero, ainv});
    else
      ms.push_back({a, zero, b, ainv});
  }
  return ms;
}

Matrix2<TElement> word_product(const std::vector<Matrix2<TElement>>& ms, bool assume_commuting) {
  if (ms.empty()) throw std::invalid_argument("word_product: empty word");
  if (!assume_commuting) {
    std::vector<bool> seen;
    for (const auto& m : ms) {
      std::vector<int> s;
      for (const TElement* e : {&m.e11, &m.e12, &m.e21, &m.e22})
        for (int i : support(*e)) s.push_back(i);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      for (int i : s) {
        if (seen.size() <= static_cast<std::size_t>(i)) seen.resize(static_cast<std::size_t>(i) + 1);
        if (seen[static_cast<std::size_t>(i)])
          throw std::invalid_argument(
              "word_product: overlapping variable support (pair " + std::to_string(i) +
              "); pass assume_commuting to override");
        seen[static_cast<std::size_t>(i)] = true;
      }
    }
  }
  Matrix2<TElement> acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = mat_mul(acc, ms[i]);
  return acc;
}

std::vector<Matrix2<TElement>> word_shift(const std::vector<Matrix2<TElement>>& ms, int n) {
  if (n < 1) throw std::invalid_argument("word_shift: n must be positive");
  std::vector<Matrix2<TElement>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) {
    for (const TElement* e : {&m.e11, &m.e12, &m.e21, &m.e22})
      if (e->term_count() > 1)
        throw std::invalid_argument("word_shift: entries must be single monomials");
    out.push_back({frobenius_shift(m.e11, n), frobenius_shift(m.e12, n),
                   frobenius_shift(m.e21, n), frobenius_shift(m.e22, n)});
  }
  return out;
}

Int t_zero(const WordSpec& spec) {
  Matrix2<Int> acc{1, 0, 0, 1};
  for (char ch : spec.pattern()) {
    Matrix2<Int> g = ch == 'U' ? Matrix2<Int>{1, 1, 0, 1} : Matrix2<Int>{1, 0, 1, 1};
    acc = mat_mul(acc, g);
  }
  return mat_trace(acc);
}

}  // namespace qtrace
