#include "qtrace/qtensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qtrace {

namespace {

void check_index(int k, int index) {
  if (index < 1 || index > k)
    throw std::invalid_argument("variable index " + std::to_string(index) +
                                " out of range for k=" + std::to_string(k));
}

void check_compatible(const TElement& x, const TElement& y) {
  if (x.var_count() != y.var_count())
    throw std::invalid_argument("variable count mismatch: k=" + std::to_string(x.var_count()) +
                                " vs k=" + std::to_string(y.var_count()));
}

}  // namespace

TElement TElement::zero(int k, CycloCtxPtr ctx) {
  if (k < 0) throw std::invalid_argument("TElement: negative variable count");
  TElement r;
  r.k_ = k;
  r.ctx_ = std::move(ctx);
  return r;
}

TElement TElement::constant(int k, QLaurent c, CycloCtxPtr ctx) {
  TElement r = zero(k, merge_context(std::move(ctx), c.context()));
  TMonomial m{std::vector<int>(static_cast<std::size_t>(k), 0),
              std::vector<int>(static_cast<std::size_t>(k), 0)};
  r.insert_(std::move(m), c.with_context(r.ctx_));
  return r;
}

TElement TElement::one(int k, CycloCtxPtr ctx) { return constant(k, 1, std::move(ctx)); }

TElement TElement::monomial(int k, TMonomial m, QLaurent c, CycloCtxPtr ctx) {
  if (m.alpha.size() != static_cast<std::size_t>(k) || m.beta.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("TElement::monomial: exponent vectors must have length k");
  for (int b : m.beta)
    if (b < 0) throw std::invalid_argument("TElement::monomial: negative b exponent");
  TElement r = zero(k, merge_context(std::move(ctx), c.context()));
  r.insert_(std::move(m), c.with_context(r.ctx_));
  return r;
}

TElement TElement::gen_a(int k, int index, int exp, CycloCtxPtr ctx) {
  check_index(k, index);
  TMonomial m{std::vector<int>(static_cast<std::size_t>(k), 0),
              std::vector<int>(static_cast<std::size_t>(k), 0)};
  m.alpha[static_cast<std::size_t>(index) - 1] = exp;
  return monomial(k, std::move(m), 1, std::move(ctx));
}

TElement TElement::gen_b(int k, int index, CycloCtxPtr ctx) {
  check_index(k, index);
  TMonomial m{std::vector<int>(static_cast<std::size_t>(k), 0),
              std::vector<int>(static_cast<std::size_t>(k), 0)};
  m.beta[static_cast<std::size_t>(index) - 1] = 1;
  return monomial(k, std::move(m), 1, std::move(ctx));
}

void TElement::insert_(TMonomial m, QLaurent c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TElement operator+(const TElement& x, const TElement& y) {
  check_compatible(x, y);
  TElement r = TElement::zero(x.k_, merge_context(x.ctx_, y.ctx_));
  for (const auto& [m, c] : x.terms_) r.insert_(m, c.with_context(r.ctx_));
  for (const auto& [m, c] : y.terms_) r.insert_(m, c.with_context(r.ctx_));
  return r;
}

TElement operator-(const TElement& x, const TElement& y) { return x + (-y); }

TElement TElement::operator-() const {
  TElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TElement operator*(const TElement& x, const TElement& y) {
  check_compatible(x, y);
  TElement r = TElement::zero(x.k_, merge_context(x.ctx_, y.ctx_));
  const std::size_t k = static_cast<std::size_t>(x.k_);
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      long swaps = 0;
      for (std::size_t i = 0; i < k; ++i)
        swaps += static_cast<long>(my.alpha[i]) * mx.beta[i];
      TMonomial m{mx.alpha, mx.beta};
      for (std::size_t i = 0; i < k; ++i) {
        m.alpha[i] += my.alpha[i];
        m.beta[i] += my.beta[i];
      }
      r.insert_(std::move(m), cx * cy * QLaurent::q_power(swaps, 1, r.ctx_));
    }
  }
  return r;
}

TElement operator*(const QLaurent& c, const TElement& x) {
  TElement r = TElement::zero(x.var_count(), merge_context(x.context(), c.context()));
  for (const auto& [m, cm] : x.terms()) r.insert_(m, c * cm);
  return r;
}

bool TElement::operator==(const TElement& o) const {
  if (k_ != o.k_) return false;
  if (static_cast<bool>(ctx_) != static_cast<bool>(o.ctx_)) return false;
  if (ctx_ && ctx_->m != o.ctx_->m) return false;
  return terms_ == o.terms_;
}

TElement frobenius_shift(const TElement& x, int n) {
  if (n < 1) throw std::invalid_argument("frobenius_shift: n must be positive");
  TElement r = zero_like(x);
  for (const auto& [m, c] : x.terms()) {
    TMonomial s = m;
    for (auto& e : s.alpha) e *= n;
    for (auto& e : s.beta) e *= n;
    r = r + TElement::monomial(x.var_count(), std::move(s), c, x.context());
  }
  return r;
}

Int eval_counting(const TElement& x) {
  if (x.context())
    throw std::domain_error("eval_counting: defined only at generic q (no cyclotomic context)");
  Int s = 0;
  for (const auto& [m, c] : x.terms()) s += c.eval_at_one();
  return s;
}

bool is_nonneg(const TElement& x) {
  if (x.context())
    throw std::domain_error("is_nonneg: defined only at generic q (no cyclotomic context)");
  for (const auto& [m, c] : x.terms())
    if (!c.nonneg_coeffs()) return false;
  return true;
}

std::vector<int> support(const TElement& x) {
  std::vector<bool> used(static_cast<std::size_t>(x.var_count()) + 1, false);
  for (const auto& [m, c] : x.terms())
    for (std::size_t i = 0; i < m.alpha.size(); ++i)
      if (m.alpha[i] != 0 || m.beta[i] != 0) used[i + 1] = true;
  std::vector<int> out;
  for (int i = 1; i <= x.var_count(); ++i)
    if (used[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

namespace {

// One rendered term: the sign is split off only when the whole coefficient
// is a single negative term, so joins read `x - y` instead of `x + -y`.
std::pair<char, std::string> render_term(const TMonomial& m, const QLaurent& c,
                                         const std::vector<std::pair<std::string, std::string>>& names) {
  std::string vars;
  for (std::size_t i = 0; i < m.alpha.size(); ++i) {
    if (m.alpha[i] != 0) {
      if (!vars.empty()) vars += "*";
      vars += names[i].first + "^" + std::to_string(m.alpha[i]);
    }
    if (m.beta[i] != 0) {
      if (!vars.empty()) vars += "*";
      vars += names[i].second + "^" + std::to_string(m.beta[i]);
    }
  }
  char sign = '+';
  std::string coeff;
  if (c.term_count() == 1) {
    std::string s = c.str();
    if (!s.empty() && s[0] == '-') {
      sign = '-';
      s.erase(0, 1);
    }
    coeff = s;
  } else {
    coeff = "(" + c.str() + ")";
  }
  if (vars.empty()) return {sign, coeff};
  if (coeff == "1") return {sign, vars};
  return {sign, coeff + "*" + vars};
}

std::string render_terms(const TElement& x,
                         const std::vector<std::pair<std::string, std::string>>& names) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    auto [sign, body] = render_term(m, c, names);
    if (first) {
      if (sign == '-') out << "-";
      first = false;
    } else {
      out << (sign == '-' ? " - " : " + ");
    }
    out << body;
  }
  return out.str();
}

}  // namespace

std::string render(const TElement& x,
                   const std::vector<std::pair<std::string, std::string>>& names) {
  if (names.size() != static_cast<std::size_t>(x.var_count()))
    throw std::invalid_argument("render: need one name pair per variable pair");
  return render_terms(x, names);
}

std::string render(const TElement& x) {
  std::vector<std::pair<std::string, std::string>> names;
  names.reserve(static_cast<std::size_t>(x.var_count()));
  for (int i = 1; i <= x.var_count(); ++i)
    names.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
  return render_terms(x, names);
}

TElement make_constant(const TElement& like, const Int& c) {
  return TElement::constant(like.var_count(), QLaurent(c), like.context());
}

TElement qscale(const TElement& x, long e) {
  return QLaurent::q_power(e, 1, x.context()) * x;
}

}  // namespace qtrace
