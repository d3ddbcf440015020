// Acceptance suite: every criterion is exact (symbolic equality, tolerance
// zero) plus the stated wall-clock bounds. One line per criterion; exit
// status 0 only if all of them hold.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qtrace/qplane.hpp"
#include "qtrace/theorems.hpp"

using namespace qtrace;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& label, bool pass, double seconds,
            const std::string& detail = "") {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << label << " ("
            << seconds << "s)\n";
  if (!pass) {
    ++failures;
    if (!detail.empty()) std::cout << "       " << detail << "\n";
  }
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> all_patterns_up_to(int max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& p : layer) {
      next.push_back(p + "U");
      next.push_back(p + "L");
    }
    layer = std::move(next);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<int> valid_ms(int n) {
  std::vector<int> ms = {2 * n};
  if (n % 2 == 1) ms.push_back(n);
  return ms;
}

TElement pow_elem(const TElement& x, int e) {
  TElement acc = one_like(x);
  for (int t = 0; t < e; ++t) acc = acc * x;
  return acc;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(QTRACE_GOLDEN_DIR) + "/" + name);
  std::string line;
  std::getline(in, line);
  return line;
}

void criterion_intro_trace() {
  const auto start = Clock::now();
  TElement trace = mat_trace(word_product(build_word(WordSpec("UULUL"))));
  const std::string rendered = render(trace);
  const std::string golden = read_golden("uulul_trace.txt");
  double elapsed = seconds_since(start);
  bool pass = trace.term_count() == 10 && !golden.empty() && rendered == golden && elapsed < 1.0;
  report(1, "intro word trace renders the ten listed monomials, <1s", pass, elapsed,
         "got: " + rendered);
}

void criterion_main_theorem() {
  const auto start = Clock::now();
  int configs = 0;
  std::string first_failure;
  for (const auto& pattern : all_patterns_up_to(5)) {
    for (int n = 1; n <= 5; ++n) {
      for (int m : valid_ms(n)) {
        ++configs;
        if (!check_main(WordSpec(pattern), n, m).pass && first_failure.empty())
          first_failure = pattern + " n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    }
  }
  double elapsed = seconds_since(start);
  bool pass = first_failure.empty() && configs >= 300 && elapsed < 300.0;
  report(2, "power identity for all words of length <=5, n <= 5, each admissible m (" +
                std::to_string(configs) + " configurations), <5min",
         pass, elapsed, first_failure.empty() ? "too few configs or too slow" : first_failure);
}

void criterion_two_variable_instance() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 8; ++n) {
    const int m = 2 * n;
    auto ctx = make_cyclo_context(m);
    auto word = build_word(WordSpec("UL"), ctx);
    TElement rhs = mat_trace(word_product(word_shift(word, n)));
    // X^n + Y^n + X^-n in X = a1 a2, Y = b1 b2
    TElement expected =
        TElement::monomial(2, TMonomial{{n, n}, {0, 0}}, 1, ctx) +
        TElement::monomial(2, TMonomial{{0, 0}, {n, n}}, 1, ctx) +
        TElement::monomial(2, TMonomial{{-n, -n}, {0, 0}}, 1, ctx);
    if (!(rhs == expected) || !check_main(WordSpec("UL"), n, m).pass) {
      pass = false;
      detail = "n=" + std::to_string(n) + " rhs=" + render(rhs);
      break;
    }
  }
  report(3, "T_n(X + Y + X^-1) = X^n + Y^n + X^-n for n=2..8", pass, seconds_since(start),
         detail);
}

void criterion_counts() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  const long expected[] = {10, 98, 970};
  double n3_elapsed = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto n_start = Clock::now();
    Report r = check_count(WordSpec("UULUL"), n);
    if (n == 3) n3_elapsed = seconds_since(n_start);
    if (!r.pass || r.lhs != std::to_string(expected[n - 1])) {
      pass = false;
      detail = "n=" + std::to_string(n) + " count=" + r.lhs;
    }
  }
  pass = pass && n3_elapsed < 30.0;
  report(4, "monomial counts of the intro word are 10, 98, 970, n=3 under 30s", pass,
         seconds_since(start), detail);
}

void criterion_positivity() {
  const auto start = Clock::now();
  std::string first_failure;
  for (const auto& pattern : all_patterns_up_to(4))
    for (int n = 1; n <= 4; ++n)
      if (!check_positivity(WordSpec(pattern), n).pass && first_failure.empty())
        first_failure = pattern + " n=" + std::to_string(n);
  report(5, "T_n and S_n of every trace are positive sums, words <=4, n <= 4",
         first_failure.empty(), seconds_since(start), first_failure);
}

void criterion_sn_trace() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 0; n <= 6; ++n)
    if (!check_sn_trace(n).pass) {
      pass = false;
      detail = "n=" + std::to_string(n);
    }
  // the displayed degree-2 and degree-3 normal forms
  const SL2qElement a = SL2qElement::generator('a');
  const SL2qElement d = SL2qElement::generator('d');
  const SL2qElement t = a + d;
  const Matrix2<SL2qElement> taut = tautological_point();
  if (!(rho_trace(rho_matrix(2, taut)) == t * t - SL2qElement::one())) {
    pass = false;
    detail = "degree 2 normal form";
  }
  if (!(rho_trace(rho_matrix(3, taut)) == t * t * t - QLaurent(2) * t)) {
    pass = false;
    detail = "degree 3 normal form";
  }
  report(6, "trace of the degree-n action equals S_n(a+d) for n <= 6", pass,
         seconds_since(start), detail);
}

void criterion_rho_oracle() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (char g : {'U', 'L'})
    for (int n = 0; n <= 8; ++n)
      if (!check_rho_oracle(g, n).pass) {
        pass = false;
        detail = std::string(1, g) + " n=" + std::to_string(n);
      }
  report(7, "closed-form action matrices equal direct substitution, n <= 8", pass,
         seconds_since(start), detail);
}

void criterion_binomials() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 12; ++n)
    if (!check_qbinom_vanishing(n).pass) {
      pass = false;
      detail = "vanishing n=" + std::to_string(n);
    }
  for (int n = 2; n <= 10; ++n)
    if (!check_frobenius(n, n).pass) {
      pass = false;
      detail = "frobenius n=" + std::to_string(n);
    }
  // the q = -1 quartic keeps exactly the middle term 2 X^2 Y^2
  Report counter = check_frobenius(4, 2);
  auto ctx = make_cyclo_context(2);
  TElement x = TElement::gen_a(1, 1, 1, ctx);
  TElement y = TElement::gen_b(1, 1, ctx);
  TElement residual = pow_elem(x + y, 4) - (TElement::gen_a(1, 1, 4, ctx) + pow_elem(y, 4));
  TElement expected = TElement::monomial(1, TMonomial{{2}, {2}}, 2, ctx);
  if (counter.pass || counter.residual != "2*X^2*Y^2" || !(residual == expected)) {
    pass = false;
    detail = "counterexample residual: " + counter.residual;
  }
  report(8, "binomial vanishing n=2..12, power identity n=2..10, q=-1 quartic fails by 2X^2Y^2",
         pass, seconds_since(start), detail);
}

void criterion_property_suites() {
  const auto start = Clock::now();
  bool pass = true;
  std::string detail;

  {  // ring axioms on 200 random triples
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<int> kdist(1, 3);
    std::uniform_int_distribution<int> n_terms(1, 4);
    std::uniform_int_distribution<int> a_exp(-3, 3);
    std::uniform_int_distribution<int> b_exp(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    auto random_element = [&](int k) {
      TElement r = TElement::zero(k);
      int terms = n_terms(rng);
      for (int t = 0; t < terms; ++t) {
        TMonomial m{std::vector<int>(static_cast<std::size_t>(k)),
                    std::vector<int>(static_cast<std::size_t>(k))};
        for (int i = 0; i < k; ++i) {
          m.alpha[static_cast<std::size_t>(i)] = a_exp(rng);
          m.beta[static_cast<std::size_t>(i)] = b_exp(rng);
        }
        r = r + TElement::monomial(k, std::move(m), coeff(rng));
      }
      return r;
    };
    for (int trial = 0; trial < 200 && pass; ++trial) {
      int k = kdist(rng);
      TElement x = random_element(k), y = random_element(k), z = random_element(k);
      if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z) ||
          !((x + y) * z == x * z + y * z)) {
        pass = false;
        detail = "ring axiom trial " + std::to_string(trial);
      }
    }
  }

  {  // free-word reduction is confluent on 300 random words
    std::mt19937 rng(99887766);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<int> letter(0, 3);
    const char alphabet[] = "abcd";
    for (int trial = 0; trial < 300 && pass; ++trial) {
      std::string w;
      int n = len(rng);
      for (int i = 0; i < n; ++i) w += alphabet[letter(rng)];
      SL2qElement folded = SL2qElement::one();
      for (char ch : w) folded = folded * SL2qElement::generator(ch);
      if (!(pbw_nf_word(w, ReduceOrder::leftmost) == folded) ||
          !(pbw_nf_word(w, ReduceOrder::rightmost) == folded)) {
        pass = false;
        detail = "confluence failed on word " + w;
      }
    }
  }

  {  // the action matrix of a word is the reversed product of the factors'
    for (const auto& pattern : all_patterns_up_to(4)) {
      auto word = build_word(WordSpec(pattern));
      for (int n = 1; n <= 4 && pass; ++n) {
        RhoMatrix<TElement> direct = rho_matrix(n, word_product(word));
        RhoMatrix<TElement> folded = rho_matrix(n, word.back());
        for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
          folded = rho_mul(folded, rho_matrix(n, word[static_cast<std::size_t>(i)]));
        if (!(direct == folded)) {
          pass = false;
          detail = "anti-homomorphism failed on " + pattern + " n=" + std::to_string(n);
        }
      }
      if (!pass) break;
    }
  }

  report(9, "property suites: ring axioms x200, word confluence x300, action anti-homomorphism",
         pass, seconds_since(start), detail);
}

}  // namespace

int main() {
  criterion_intro_trace();
  criterion_main_theorem();
  criterion_two_variable_instance();
  criterion_counts();
  criterion_positivity();
  criterion_sn_trace();
  criterion_rho_oracle();
  criterion_binomials();
  criterion_property_suites();
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
