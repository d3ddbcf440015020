#include "qtrace/sl2q.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qtrace {

namespace {

QLaurent qpow(long e) { return QLaurent::q_power(e); }

using TermMap = std::map<PBWMonomial, QLaurent>;

void add_term(TermMap& out, PBWMonomial m, QLaurent c) {
  if (c.is_zero()) return;
  auto it = out.find(m);
  if (it == out.end()) {
    out.emplace(m, std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Right multiplication by a single generator, staying in normal form.
TermMap mul_gen(const TermMap& t, char g) {
  TermMap out;
  for (const auto& [m, c] : t) {
    switch (g) {
      case 'a':
        if (m.l == 0) {
          add_term(out, {m.i + 1, m.j, m.k, 0}, c * qpow(m.j + m.k));
        } else {
          // b^j c^k d^l a = b^j c^k d^{l-1} + q^{2l-1} b^{j+1} c^{k+1} d^{l-1}
          add_term(out, {0, m.j, m.k, m.l - 1}, c);
          add_term(out, {0, m.j + 1, m.k + 1, m.l - 1}, c * qpow(2L * m.l - 1));
        }
        break;
      case 'b':
        add_term(out, {m.i, m.j + 1, m.k, m.l}, c * qpow(m.l));
        break;
      case 'c':
        add_term(out, {m.i, m.j, m.k + 1, m.l}, c * qpow(m.l));
        break;
      case 'd':
        if (m.i == 0) {
          add_term(out, {0, m.j, m.k, m.l + 1}, c);
        } else {
          // a^i b^j c^k d = q^{-j-k} a^{i-1} b^j c^k + q^{-j-k-1} a^{i-1} b^{j+1} c^{k+1}
          add_term(out, {m.i - 1, m.j, m.k, 0}, c * qpow(-static_cast<long>(m.j) - m.k));
          add_term(out, {m.i - 1, m.j + 1, m.k + 1, 0}, c * qpow(-static_cast<long>(m.j) - m.k - 1));
        }
        break;
      default:
        throw std::invalid_argument(std::string("unknown generator '") + g + "'");
    }
  }
  return out;
}

}  // namespace

SL2qElement SL2qElement::zero() { return {}; }

SL2qElement SL2qElement::one() { return monomial({0, 0, 0, 0}); }

SL2qElement SL2qElement::generator(char g) {
  switch (g) {
    case 'a': return monomial({1, 0, 0, 0});
    case 'b': return monomial({0, 1, 0, 0});
    case 'c': return monomial({0, 0, 1, 0});
    case 'd': return monomial({0, 0, 0, 1});
    default: throw std::invalid_argument(std::string("unknown generator '") + g + "'");
  }
}

SL2qElement SL2qElement::monomial(PBWMonomial m, QLaurent c) {
  if (m.i < 0 || m.j < 0 || m.k < 0 || m.l < 0)
    throw std::invalid_argument("SL2qElement: negative exponent");
  if (m.i != 0 && m.l != 0)
    throw std::invalid_argument("SL2qElement: monomial with both a and d is not in normal form");
  SL2qElement r;
  r.insert_(m, std::move(c));
  return r;
}

void SL2qElement::insert_(PBWMonomial m, QLaurent c) { add_term(terms_, m, std::move(c)); }

SL2qElement operator+(const SL2qElement& x, const SL2qElement& y) {
  SL2qElement r = x;
  for (const auto& [m, c] : y.terms_) r.insert_(m, c);
  return r;
}

SL2qElement operator-(const SL2qElement& x, const SL2qElement& y) { return x + (-y); }

SL2qElement SL2qElement::operator-() const {
  SL2qElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SL2qElement operator*(const SL2qElement& x, const SL2qElement& y) {
  SL2qElement r;
  for (const auto& [my, cy] : y.terms_) {
    TermMap cur;
    for (const auto& [mx, cx] : x.terms_) add_term(cur, mx, cx * cy);
    for (int t = 0; t < my.i; ++t) cur = mul_gen(cur, 'a');
    for (int t = 0; t < my.j; ++t) cur = mul_gen(cur, 'b');
    for (int t = 0; t < my.k; ++t) cur = mul_gen(cur, 'c');
    for (int t = 0; t < my.l; ++t) cur = mul_gen(cur, 'd');
    for (auto& [m, c] : cur) r.insert_(m, std::move(c));
  }
  return r;
}

SL2qElement operator*(const QLaurent& c, const SL2qElement& x) {
  SL2qElement r;
  for (const auto& [m, cm] : x.terms()) r.insert_(m, c * cm);
  return r;
}

namespace {

// Free-word reduction. A rule occurrence rewrites one contiguous segment
// into one or two (word, q-power) replacements.
struct RuleHit {
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the segment
  // up to two replacements
  std::vector<std::pair<std::string, long>> repl;
};

bool pair_rule(char x, char y, RuleHit& hit) {
  if (x == 'b' && y == 'a') { hit.repl = {{"ab", 1}}; return true; }
  if (x == 'c' && y == 'a') { hit.repl = {{"ac", 1}}; return true; }
  if (x == 'c' && y == 'b') { hit.repl = {{"bc", 0}}; return true; }
  if (x == 'd' && y == 'b') { hit.repl = {{"bd", 1}}; return true; }
  if (x == 'd' && y == 'c') { hit.repl = {{"cd", 1}}; return true; }
  if (x == 'd' && y == 'a') { hit.repl = {{"", 0}, {"bc", 1}}; return true; }
  return false;
}

// a (b|c)* d collapses through the determinant relation.
bool det_rule(const std::string& w, std::size_t p, RuleHit& hit) {
  if (w[p] != 'a') return false;
  std::size_t r = p + 1;
  long j = 0, k = 0;
  while (r < w.size() && (w[r] == 'b' || w[r] == 'c')) {
    (w[r] == 'b' ? j : k) += 1;
    ++r;
  }
  if (r >= w.size() || w[r] != 'd') return false;
  hit.begin = p;
  hit.end = r + 1;
  std::string mid(static_cast<std::size_t>(j), 'b');
  mid.append(static_cast<std::size_t>(k), 'c');
  hit.repl = {{mid, -j - k}, {mid + "bc", -j - k - 1}};
  return true;
}

bool find_rule(const std::string& w, ReduceOrder order, RuleHit& hit) {
  if (w.size() < 2) return false;
  auto probe = [&](std::size_t p) {
    if (p + 1 < w.size() && pair_rule(w[p], w[p + 1], hit)) {
      hit.begin = p;
      hit.end = p + 2;
      return true;
    }
    return det_rule(w, p, hit);
  };
  if (order == ReduceOrder::leftmost) {
    for (std::size_t p = 0; p + 1 < w.size(); ++p)
      if (probe(p)) return true;
  } else {
    for (std::size_t p = w.size() - 1; p-- > 0;)
      if (probe(p)) return true;
  }
  return false;
}

PBWMonomial sorted_word_monomial(const std::string& w) {
  PBWMonomial m;
  for (char ch : w) {
    switch (ch) {
      case 'a': m.i++; break;
      case 'b': m.j++; break;
      case 'c': m.k++; break;
      case 'd': m.l++; break;
      default: throw std::invalid_argument(std::string("unknown generator '") + ch + "'");
    }
  }
  return m;
}

}  // namespace

SL2qElement pbw_nf_word(std::string_view word, ReduceOrder order) {
  std::map<std::string, QLaurent> pending;
  pending.emplace(std::string(word), QLaurent(1));
  SL2qElement done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string w = node.key();
    const QLaurent c = node.mapped();
    if (c.is_zero()) continue;
    RuleHit hit;
    if (!find_rule(w, order, hit)) {
      done = done + SL2qElement::monomial(sorted_word_monomial(w), c);
      continue;
    }
    for (const auto& [mid, e] : hit.repl) {
      std::string nw = w.substr(0, hit.begin) + mid + w.substr(hit.end);
      auto it = pending.find(nw);
      if (it == pending.end())
        pending.emplace(std::move(nw), c * qpow(e));
      else
        it->second = it->second + c * qpow(e);
    }
  }
  return done;
}

QLaurent counit(const SL2qElement& x) {
  QLaurent r;
  for (const auto& [m, c] : x.terms())
    if (m.j == 0 && m.k == 0) r = r + c;
  return r;
}

SL2qElement antipode(const SL2qElement& x) {
  SL2qElement r;
  for (const auto& [m, c] : x.terms()) {
    // S(a^i b^j c^k d^l) = a^l (-q^{-1} c)^k (-q b)^j d^i
    QLaurent f = c * qpow(static_cast<long>(m.j) - m.k);
    if ((m.j + m.k) % 2 != 0) f = -f;
    SL2qElement part = SL2qElement::monomial({m.l, m.j, m.k, 0}, std::move(f));
    for (int t = 0; t < m.i; ++t) part = part * SL2qElement::generator('d');
    r = r + part;
  }
  return r;
}

namespace {

void tensor_add(SL2qTensor& out, const PBWMonomial& a, const PBWMonomial& b, const QLaurent& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(std::move(key), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Componentwise product on the tensor square.
SL2qTensor tensor_mul(const SL2qTensor& x, const SL2qTensor& y) {
  SL2qTensor out;
  for (const auto& [px, cx] : x) {
    for (const auto& [py, cy] : y) {
      SL2qElement left = SL2qElement::monomial(px.first) * SL2qElement::monomial(py.first);
      SL2qElement right = SL2qElement::monomial(px.second) * SL2qElement::monomial(py.second);
      for (const auto& [lm, lc] : left.terms())
        for (const auto& [rm, rc] : right.terms())
          tensor_add(out, lm, rm, cx * cy * lc * rc);
    }
  }
  return out;
}

SL2qTensor coproduct_gen(char g) {
  SL2qTensor t;
  auto put = [&](char u, char v) {
    tensor_add(t, {u == 'a', u == 'b', u == 'c', u == 'd'},
               {v == 'a', v == 'b', v == 'c', v == 'd'}, QLaurent(1));
  };
  switch (g) {
    case 'a': put('a', 'a'); put('b', 'c'); break;
    case 'b': put('a', 'b'); put('b', 'd'); break;
    case 'c': put('c', 'a'); put('d', 'c'); break;
    case 'd': put('c', 'b'); put('d', 'd'); break;
    default: throw std::invalid_argument(std::string("unknown generator '") + g + "'");
  }
  return t;
}

}  // namespace

SL2qTensor coproduct(const SL2qElement& x) {
  SL2qTensor out;
  for (const auto& [m, c] : x.terms()) {
    SL2qTensor cur;
    tensor_add(cur, {0, 0, 0, 0}, {0, 0, 0, 0}, QLaurent(1));
    for (int t = 0; t < m.i; ++t) cur = tensor_mul(cur, coproduct_gen('a'));
    for (int t = 0; t < m.j; ++t) cur = tensor_mul(cur, coproduct_gen('b'));
    for (int t = 0; t < m.k; ++t) cur = tensor_mul(cur, coproduct_gen('c'));
    for (int t = 0; t < m.l; ++t) cur = tensor_mul(cur, coproduct_gen('d'));
    for (const auto& [pair, pc] : cur) tensor_add(out, pair.first, pair.second, c * pc);
  }
  return out;
}

std::string render(const SL2qElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    std::string vars;
    auto put = [&](char name, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      vars += "^" + std::to_string(e);
    };
    put('a', m.i);
    put('b', m.j);
    put('c', m.k);
    put('d', m.l);
    char sign = '+';
    std::string coeff;
    if (c.term_count() == 1) {
      coeff = c.str();
      if (!coeff.empty() && coeff[0] == '-') {
        sign = '-';
        coeff.erase(0, 1);
      }
    } else {
      coeff = "(" + c.str() + ")";
    }
    std::string body;
    if (vars.empty()) body = coeff;
    else if (coeff == "1") body = vars;
    else body = coeff + "*" + vars;
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

SL2qElement make_constant(const SL2qElement&, const Int& c) {
  return SL2qElement::monomial({0, 0, 0, 0}, QLaurent(c));
}

SL2qElement qscale(const SL2qElement& x, long e) { return qpow(e) * x; }

}  // namespace qtrace
