#include "qtrace/qscalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qtrace {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim_();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(int degree, Int c) {
  if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
  IntPoly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

void IntPoly::trim_() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (int d = degree(); d >= 0; --d) acc = acc * x + coeffs_[static_cast<std::size_t>(d)];
  return acc;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Int& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (d == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << var;
      if (d != 1) out << "^" << d;
    }
  }
  return out.str();
}

IntPoly operator+(const IntPoly& x, const IntPoly& y) {
  std::vector<Int> c(std::max(x.coeffs_.size(), y.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[i] += y.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& x, const IntPoly& y) {
  std::vector<Int> c(std::max(x.coeffs_.size(), y.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) c[i] += x.coeffs_[i];
  for (std::size_t i = 0; i < y.coeffs_.size(); ++i) c[i] -= y.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return IntPoly();
  std::vector<Int> c(x.coeffs_.size() + y.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) c[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

void IntPoly::divmod(const IntPoly& num, const IntPoly& den, IntPoly& quot, IntPoly& rem) {
  if (den.is_zero()) throw std::invalid_argument("IntPoly::divmod: division by zero");
  if (den.coeffs_.back() != 1)
    throw std::invalid_argument("IntPoly::divmod: divisor must be monic");
  std::vector<Int> r = num.coeffs_;
  const int dd = den.degree();
  std::vector<Int> q;
  if (num.degree() >= dd) q.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Int(0));
  for (int d = num.degree(); d >= dd; --d) {
    Int f = r[static_cast<std::size_t>(d)];
    if (f == 0) continue;
    q[static_cast<std::size_t>(d - dd)] = f;
    for (int i = 0; i <= dd; ++i)
      r[static_cast<std::size_t>(d - dd + i)] -= f * den.coeffs_[static_cast<std::size_t>(i)];
  }
  quot = IntPoly(std::move(q));
  rem = IntPoly(std::move(r));
}

IntPoly cyclo_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclo_poly: m must be positive");
  std::map<int, IntPoly> phi;
  for (int j = 1; j <= m; ++j) {
    if (m % j != 0) continue;
    IntPoly num = IntPoly::monomial(j) - IntPoly::constant(1);
    IntPoly den = IntPoly::constant(1);
    for (const auto& [d, pd] : phi)
      if (j % d == 0) den = den * pd;
    IntPoly q, r;
    IntPoly::divmod(num, den, q, r);
    if (!r.is_zero()) throw std::logic_error("cyclo_poly: non-exact division");
    phi[j] = q;
  }
  return phi[m];
}

CycloCtxPtr make_cyclo_context(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic context: m must be positive");
  CycloContext ctx;
  ctx.m = m;
  ctx.n = m % 2 == 0 ? m / 2 : m;
  ctx.phi = cyclo_poly(m);
  return std::make_shared<const CycloContext>(std::move(ctx));
}

CycloCtxPtr merge_context(const CycloCtxPtr& a, const CycloCtxPtr& b) {
  if (a && b && a->m != b->m)
    throw std::invalid_argument("mismatched cyclotomic contexts: m=" + std::to_string(a->m) +
                                " vs m=" + std::to_string(b->m));
  return a ? a : b;
}

QLaurent::QLaurent(Int c) {
  if (c != 0) terms_[0] = std::move(c);
}

QLaurent QLaurent::q_power(long exp, Int coeff, CycloCtxPtr ctx) {
  QLaurent r;
  if (coeff != 0) r.terms_[exp] = std::move(coeff);
  r.ctx_ = std::move(ctx);
  r.normalize_();
  return r;
}

QLaurent QLaurent::zero(CycloCtxPtr ctx) {
  QLaurent r;
  r.ctx_ = std::move(ctx);
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

QLaurent QLaurent::with_context(CycloCtxPtr ctx) const {
  if (ctx_ && ctx && ctx_->m != ctx->m) merge_context(ctx_, ctx);  // throws
  QLaurent r = *this;
  if (ctx) r.ctx_ = std::move(ctx);
  r.normalize_();
  return r;
}

Int QLaurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool QLaurent::nonneg_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

void QLaurent::normalize_() {
  if (!ctx_) {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second == 0 ? terms_.erase(it) : std::next(it);
    return;
  }
  const int m = ctx_->m;
  std::vector<Int> dense(static_cast<std::size_t>(m), Int(0));
  for (const auto& [e, c] : terms_) {
    long r = e % m;
    if (r < 0) r += m;
    dense[static_cast<std::size_t>(r)] += c;
  }
  IntPoly quot, rem;
  IntPoly::divmod(IntPoly(std::move(dense)), ctx_->phi, quot, rem);
  terms_.clear();
  for (int d = 0; d <= rem.degree(); ++d) {
    Int c = rem.coeff(d);
    if (c != 0) terms_[d] = std::move(c);
  }
}

QLaurent operator+(const QLaurent& x, const QLaurent& y) {
  QLaurent r;
  r.ctx_ = merge_context(x.ctx_, y.ctx_);
  r.terms_ = x.terms_;
  for (const auto& [e, c] : y.terms_) r.terms_[e] += c;
  r.normalize_();
  return r;
}

QLaurent operator-(const QLaurent& x, const QLaurent& y) { return x + (-y); }

QLaurent operator*(const QLaurent& x, const QLaurent& y) {
  QLaurent r;
  r.ctx_ = merge_context(x.ctx_, y.ctx_);
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) r.terms_[e1 + e2] += c1 * c2;
  r.normalize_();
  return r;
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool QLaurent::operator==(const QLaurent& o) const {
  if (static_cast<bool>(ctx_) != static_cast<bool>(o.ctx_)) return false;
  if (ctx_ && ctx_->m != o.ctx_->m) return false;
  return terms_ == o.terms_;
}

std::string QLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str();
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

QLaurent cyclo_reduce(const QLaurent& x, const CycloCtxPtr& ctx) {
  if (!ctx) throw std::invalid_argument("cyclo_reduce: null context");
  return x.with_context(ctx);
}

QLaurent qint(int j, QIntKind kind, CycloCtxPtr ctx) {
  if (j < 0) throw std::invalid_argument("qint: j must be nonnegative");
  QLaurent r = QLaurent::zero(ctx);
  for (int i = 0; i < j; ++i) {
    long e = kind == QIntKind::standard ? i : static_cast<long>(j) - 1 - 2 * i;
    r = r + QLaurent::q_power(e, 1, ctx);
  }
  return r;
}

QLaurent qbinom(int n, int k, int step, CycloCtxPtr ctx) {
  if (n < 0 || k < 0) throw std::invalid_argument("qbinom: negative argument");
  if (k > n) throw std::invalid_argument("qbinom: k > n");
  if (step < 1) throw std::invalid_argument("qbinom: step must be positive");
  // [r j] = [r-1 j-1] + q^{step*j} [r-1 j], one row at a time in place.
  std::vector<QLaurent> row(static_cast<std::size_t>(k) + 1, QLaurent::zero(ctx));
  row[0] = QLaurent(1).with_context(ctx);
  for (int r = 1; r <= n; ++r) {
    for (int j = std::min(r, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j) - 1] +
          QLaurent::q_power(static_cast<long>(step) * j, 1, ctx) * row[static_cast<std::size_t>(j)];
  }
  return row[static_cast<std::size_t>(k)];
}

IntPoly cheb(int n, ChebKind kind) {
  if (n < 0) throw std::invalid_argument("cheb: n must be nonnegative");
  IntPoly prev = IntPoly::constant(kind == ChebKind::first ? 2 : 1);
  if (n == 0) return prev;
  IntPoly cur = IntPoly::monomial(1);
  const IntPoly t = IntPoly::monomial(1);
  for (int i = 1; i < n; ++i) {
    IntPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace qtrace
