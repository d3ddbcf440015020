#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtrace/qmatrix.hpp"
#include "qtrace/qscalar.hpp"

namespace qtrace {

struct ReportParam {
  std::string key;
  std::string value;
  bool numeric = false;
};

/// Structured outcome of one check. lhs and rhs carry both sides in
/// canonical text so failures are diffable; residual holds the rendered
/// difference on failure (text reports only, not part of the JSON schema).
struct Report {
  std::string check;
  std::vector<ReportParam> params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  long long residual_terms = 0;
  long long elapsed_ms = 0;
  std::string residual;
};

/// The admissible orders of q making q^2 a primitive n-th root of unity:
/// m = 2n always, and m = n when n is odd.
bool valid_root_pair(int n, int m);

/// (X+Y)^n vs X^n + Y^n for YX = qXY with q of order m. Passes exactly
/// when q is a primitive n-th root, i.e. m = n.
Report check_frobenius(int n, int m);

/// Trace of the degree-n action of the tautological point vs S_n(a+d),
/// compared in PBW normal form at generic q.
Report check_sn_trace(int n);

/// T_n(trace of the word) vs the trace of the power-substituted word, with
/// q of order m. enforce_valid rejects (n, m) pairs for which q^2 is not a
/// primitive n-th root; pass false to probe non-primitive configurations.
Report check_main(const WordSpec& spec, int n, int m, bool enforce_valid = true);

/// Number of monomials (with multiplicity) of T_n(trace) at generic q vs
/// the integer T_n(t_zero).
Report check_count(const WordSpec& spec, int n);

/// Every coefficient of T_n(trace) and S_n(trace) is nonnegative at
/// generic q.
Report check_positivity(const WordSpec& spec, int n);

/// Closed-form action matrix of a triangular generator vs direct
/// substitution, entry by entry.
Report check_rho_oracle(char gen_type, int n);

/// [n k]_q reduces to 0 at a primitive n-th root of unity for all 0<k<n.
Report check_qbinom_vanishing(int n);

std::string to_text(const Report& r);
std::string to_json_string(const Report& r);
std::string to_json_string(const std::vector<Report>& rs);

}  // namespace qtrace
