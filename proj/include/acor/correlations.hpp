#pragma once
// The general sum engine: sum over a domain of a weight times a product of
// shifted factors drawn from {mu, lambda, mu^2}, plus the maximal
// progression sums and the exact identity audits.

#include <string>
#include <vector>

#include "acor/core.hpp"

namespace acor {

// Index sets the sums run over.
struct Domain {
  enum class Kind {
    INTEGERS,            // n in [1, x]
    SHIFTED_PRIMES,      // p prime, p <= x
    SHORT_INTERVAL,      // n in [x, x+y] inclusive
    ARITH_PROGRESSION,   // n <= x, n == r (mod q)
    PRIME_ARITH_PROGRESSION  // p <= x prime, p == r (mod q)
  };
  Kind kind = Kind::INTEGERS;
  u64 x = 1;
  u64 y = 0;
  u64 q = 0;
  u64 r = 0;

  static Domain integers(u64 x) { return {Kind::INTEGERS, x, 0, 0, 0}; }
  static Domain shifted_primes(u64 x) {
    return {Kind::SHIFTED_PRIMES, x, 0, 0, 0};
  }
  static Domain short_interval(u64 x, u64 y) {
    return {Kind::SHORT_INTERVAL, x, y, 0, 0};
  }
  static Domain progression(u64 x, u64 q, u64 r) {
    return {Kind::ARITH_PROGRESSION, x, 0, q, r};
  }
  static Domain prime_progression(u64 x, u64 q, u64 r) {
    return {Kind::PRIME_ARITH_PROGRESSION, x, 0, q, r};
  }
  friend bool operator==(const Domain&, const Domain&) = default;
};

void validate(const Domain& d);

// Factor functions a term may use. MU_SQUARED is the squarefree indicator;
// mu^3 = mu * mu^2 is expressed as two factors at the same shift.
enum class CFn { MU, LAMBDA, MU_SQUARED };

struct Factor {
  i64 shift = 0;
  CFn fn = CFn::MU;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Product of shifted factors; at least one factor, shifts need not be
// distinct.
struct TermSpec {
  std::vector<Factor> factors;
  friend bool operator==(const TermSpec&, const TermSpec&) = default;
};

enum class Weight { UNIT, VON_MANGOLDT, RECIPROCAL };

struct CorrelationResult {
  Domain domain;
  Weight weight = Weight::UNIT;
  TermSpec terms;
  bool is_integer = true;
  i64 int_value = 0;      // UNIT weight: exact
  double float_value = 0.0;  // other weights: compensated sum
  double err_bound = 0.0;    // rounding-error bound for floating sums
  u64 term_count = 0;        // number of domain elements visited

  double as_double() const {
    return is_integer ? static_cast<double>(int_value) : float_value;
  }
};

// Exact sum over the domain of weight(n) * prod_i fn_i(n + shift_i).
// UNIT-weight results are exact integers; VON_MANGOLDT only combines with
// INTEGERS/SHORT_INTERVAL. Raising a shifted argument below 1 is a domain
// error.
CorrelationResult correlate(const Domain& domain, Weight weight,
                            const TermSpec& terms, const Exec& exec = {});

// Logarithmic average: sum_{n <= x} prod_i fn_i(n + shift_i) / n.
CorrelationResult log_average(const TermSpec& terms, u64 x,
                              const Exec& exec = {});

// Maximal progression sum
//   sum_{q <= sqrt(x)/(log x)^B} max_{d mod q} max_{z <= x}
//     | sum_{p <= z, p == d (q)} prod_i fn(p + a_i) |
// computed by streaming the primes once while maintaining per-(q,d) running
// sums and running maxima (the empty prefix counts, so every cell is >= 0).
struct HypothesisResult {
  double value = 0.0;
  u64 q_max = 0;        // largest modulus included
  u64 prime_count = 0;  // primes streamed
};

HypothesisResult hypothesis_sum(CFn fn, const std::vector<i64>& shifts, u64 x,
                                double B, const Exec& exec = {});

// Exact identity audits; both sides evaluated by independent code paths.
enum class AuditKind {
  MU_EQ_LAMBDA_MUSQ,    // mu(n) = lambda(n) * mu^2(n)        for n <= x
  LAMBDA_DIVISOR_SUM,   // lambda(n) = sum_{d^2|n} mu(n/d^2)  for n <= x
  MU_PARTITION,         // sum_{p<=x} mu(p+a) re-expanded over d^2 classes:
                        //   sum_d mu(d) sum_{p<=x, d^2 | p+a} lambda(p+a)
  MU_DOUBLE_DECOMP,     // sum mu(n)mu(n+t) =
                        //   sum_{d,e} mu(d)mu(e) sum_{d^2|n, e^2|n+t} lam lam
  LAMBDA_DOUBLE_DECOMP  // sum lambda(n)lambda(n+t) =
                        //   sum_{d,e} sum_{d^2|n, e^2|n+t} mu(n/d^2)mu((n+t)/e^2)
};

struct AuditReport {
  AuditKind which = AuditKind::MU_EQ_LAMBDA_MUSQ;
  u64 x = 0;
  i64 param = 0;  // shift a (MU_PARTITION) or t (double decompositions)
  bool ok = false;
  i64 lhs = 0;  // aggregate audits: the two sides; pointwise audits:
  i64 rhs = 0;  // lhs = values checked, rhs = values agreeing
  std::vector<std::string> offenders;  // first few pointwise disagreements
};

// Audits are oracle-grade: x <= 10^5 enforced.
AuditReport identity_audit(AuditKind which, u64 x, i64 param = 1,
                           const Exec& exec = {});

std::string to_string(AuditKind k);

}  // namespace acor
