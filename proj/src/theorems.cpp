#include "qtrace/theorems.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qtrace/qplane.hpp"

namespace qtrace {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

ReportParam num_param(std::string key, long long v) {
  return {std::move(key), std::to_string(v), true};
}

ReportParam str_param(std::string key, std::string v) {
  return {std::move(key), std::move(v), false};
}

const std::vector<std::pair<std::string, std::string>> kXYNames = {{"X", "Y"}};

TElement pow_elem(const TElement& x, int e) {
  TElement acc = one_like(x);
  for (int t = 0; t < e; ++t) acc = acc * x;
  return acc;
}

std::string render_rho(const RhoMatrix<TElement>& M) {
  std::ostringstream out;
  for (int v = 0; v <= M.degree; ++v) {
    out << (v == 0 ? "[" : " [");
    for (int u = 0; u <= M.degree; ++u) out << (u == 0 ? "" : ", ") << render(M.at(v, u));
    out << "]";
    if (v != M.degree) out << "\n";
  }
  return out.str();
}

}  // namespace

bool valid_root_pair(int n, int m) {
  if (n < 1) return false;
  return m == 2 * n || (n % 2 == 1 && m == n);
}

Report check_frobenius(int n, int m) {
  if (n < 2) throw std::invalid_argument("check_frobenius: n must be >= 2");
  const auto start = Clock::now();
  CycloCtxPtr ctx = make_cyclo_context(m);
  const TElement x = TElement::gen_a(1, 1, 1, ctx);
  const TElement y = TElement::gen_b(1, 1, ctx);
  const TElement lhs = pow_elem(x + y, n);
  const TElement rhs = TElement::gen_a(1, 1, n, ctx) + pow_elem(y, n);
  const TElement diff = lhs - rhs;

  Report r;
  r.check = "frobenius";
  r.params = {num_param("n", n), num_param("m", m)};
  r.pass = diff.is_zero();
  r.lhs = render(lhs, kXYNames);
  r.rhs = render(rhs, kXYNames);
  r.residual_terms = static_cast<long long>(diff.term_count());
  if (!r.pass) r.residual = render(diff, kXYNames);
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_sn_trace(int n) {
  if (n < 0) throw std::invalid_argument("check_sn_trace: n must be >= 0");
  const auto start = Clock::now();
  const Matrix2<SL2qElement> taut = tautological_point();
  const SL2qElement lhs = rho_trace(rho_matrix(n, taut));
  const SL2qElement rhs =
      poly_eval(cheb(n, ChebKind::second), SL2qElement::generator('a') + SL2qElement::generator('d'));
  const SL2qElement diff = lhs - rhs;

  Report r;
  r.check = "sn-trace";
  r.params = {num_param("n", n)};
  r.pass = diff.is_zero();
  r.lhs = render(lhs);
  r.rhs = render(rhs);
  r.residual_terms = static_cast<long long>(diff.term_count());
  if (!r.pass) r.residual = render(diff);
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_main(const WordSpec& spec, int n, int m, bool enforce_valid) {
  if (n < 1) throw std::invalid_argument("check_main: n must be >= 1");
  if (enforce_valid && !valid_root_pair(n, m))
    throw std::invalid_argument("check_main: invalid (n, m): need m = 2n, or m = n with n odd");
  const auto start = Clock::now();
  CycloCtxPtr ctx = make_cyclo_context(m);
  const auto word = build_word(spec, ctx);
  const TElement trace = mat_trace(word_product(word));
  const TElement lhs = poly_eval(cheb(n, ChebKind::first), trace);
  const TElement rhs = mat_trace(word_product(word_shift(word, n)));
  const TElement diff = lhs - rhs;

  Report r;
  r.check = "main";
  r.params = {str_param("word", spec.pattern()), num_param("n", n), num_param("m", m)};
  r.pass = diff.is_zero();
  r.lhs = render(lhs);
  r.rhs = render(rhs);
  r.residual_terms = static_cast<long long>(diff.term_count());
  if (!r.pass) r.residual = render(diff);
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_count(const WordSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("check_count: n must be >= 1");
  const auto start = Clock::now();
  const auto word = build_word(spec);
  const TElement trace = mat_trace(word_product(word));
  const Int counted = eval_counting(poly_eval(cheb(n, ChebKind::first), trace));
  const Int expected = cheb(n, ChebKind::first).eval(t_zero(spec));

  Report r;
  r.check = "count";
  r.params = {str_param("word", spec.pattern()), num_param("n", n)};
  r.pass = counted == expected;
  r.lhs = counted.str();
  r.rhs = expected.str();
  r.residual_terms = r.pass ? 0 : 1;
  if (!r.pass) r.residual = Int(counted - expected).str();
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_positivity(const WordSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("check_positivity: n must be >= 1");
  const auto start = Clock::now();
  const auto word = build_word(spec);
  const TElement trace = mat_trace(word_product(word));
  const TElement tn = poly_eval(cheb(n, ChebKind::first), trace);
  const TElement sn = poly_eval(cheb(n, ChebKind::second), trace);

  long long negative = 0;
  for (const TElement* e : {&tn, &sn})
    for (const auto& [mono, c] : e->terms())
      if (!c.nonneg_coeffs()) ++negative;

  Report r;
  r.check = "positivity";
  r.params = {str_param("word", spec.pattern()), num_param("n", n)};
  r.pass = is_nonneg(tn) && is_nonneg(sn);
  r.lhs = render(tn);
  r.rhs = render(sn);
  r.residual_terms = negative;
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_rho_oracle(char gen_type, int n) {
  if (gen_type != 'U' && gen_type != 'L')
    throw std::invalid_argument("check_rho_oracle: generator must be 'U' or 'L'");
  if (n < 0) throw std::invalid_argument("check_rho_oracle: n must be >= 0");
  const auto start = Clock::now();
  const auto gen = build_word(WordSpec(std::string(1, gen_type))).front();
  const RhoMatrix<TElement> direct = rho_matrix(n, gen);
  const RhoMatrix<TElement> closed = rho_closed_triangular(n, gen);

  long long mismatched = 0;
  for (int v = 0; v <= n; ++v)
    for (int u = 0; u <= n; ++u)
      if (!(direct.at(v, u) == closed.at(v, u))) ++mismatched;

  Report r;
  r.check = "rho-oracle";
  r.params = {str_param("word", std::string(1, gen_type)), num_param("n", n)};
  r.pass = mismatched == 0;
  r.lhs = render_rho(closed);
  r.rhs = render_rho(direct);
  r.residual_terms = mismatched;
  r.elapsed_ms = ms_since(start);
  return r;
}

Report check_qbinom_vanishing(int n) {
  if (n < 2) throw std::invalid_argument("check_qbinom_vanishing: n must be >= 2");
  const auto start = Clock::now();
  CycloCtxPtr ctx = make_cyclo_context(n);
  std::ostringstream lhs, rhs;
  long long nonzero = 0;
  for (int k = 1; k < n; ++k) {
    const QLaurent reduced = qbinom(n, k, 1, ctx);
    if (!reduced.is_zero()) ++nonzero;
    if (k > 1) {
      lhs << "; ";
      rhs << "; ";
    }
    lhs << "k=" << k << ": " << reduced.str();
    rhs << "k=" << k << ": 0";
  }

  Report r;
  r.check = "qbinom";
  r.params = {num_param("n", n)};
  r.pass = nonzero == 0;
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.residual_terms = nonzero;
  r.elapsed_ms = ms_since(start);
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
  for (const auto& p : r.params) out << " " << p.key << "=" << p.value;
  out << " residual_terms=" << r.residual_terms << " elapsed_ms=" << r.elapsed_ms << "\n";
  out << "  lhs: " << r.lhs << "\n";
  out << "  rhs: " << r.rhs << "\n";
  if (!r.pass && !r.residual.empty()) out << "  residual: " << r.residual << "\n";
  return out.str();
}

namespace {

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : r.params) {
    if (p.numeric)
      params[p.key] = std::stoll(p.value);
    else
      params[p.key] = p.value;
  }
  j["params"] = std::move(params);
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["residual_terms"] = r.residual_terms;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string to_json_string(const Report& r) { return report_json(r).dump(2); }

std::string to_json_string(const std::vector<Report>& rs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace qtrace
