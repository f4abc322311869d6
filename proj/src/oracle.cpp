// Trial-division reference implementations. Deliberately naive and slow;
// shares no machinery with the segmented sieve.

#include "acor/oracle.hpp"

#include <stdexcept>

namespace acor {
namespace {

constexpr u64 kTrialBound = 1'000'000'000'000ULL;  // 10^12

struct NaiveFactors {
  int omega_total = 0;     // with multiplicity
  int omega_distinct = 0;
  bool squarefree = true;
  u64 single_prime = 0;    // set when exactly one distinct prime
  u32 single_exp = 0;
};

NaiveFactors trial_factor(u64 n) {
  if (n == 0) throw std::domain_error("naive_value requires n >= 1");
  if (n > kTrialBound)
    throw std::domain_error("naive_value bound is 10^12 (trial division)");
  NaiveFactors f;
  u64 m = n;
  auto strip = [&](u64 p) {
    if (m % p != 0) return;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.omega_total += e;
    f.omega_distinct += 1;
    if (e > 1) f.squarefree = false;
    f.single_prime = p;
    f.single_exp = static_cast<u32>(e);
  };
  strip(2);
  for (u64 d = 3; d <= m / d; d += 2) strip(d);
  if (m > 1) {
    f.omega_total += 1;
    f.omega_distinct += 1;
    f.single_prime = m;
    f.single_exp = 1;
  }
  if (f.omega_distinct != 1) {
    f.single_prime = 0;
    f.single_exp = 0;
  }
  return f;
}

}  // namespace

i64 naive_value(Fn kind, u64 n) {
  const NaiveFactors f = trial_factor(n);
  switch (kind) {
    case Fn::MU:
      return f.squarefree ? ((f.omega_total & 1) ? -1 : 1) : 0;
    case Fn::LAMBDA:
      return (f.omega_total & 1) ? -1 : 1;
    case Fn::BIG_OMEGA:
      return f.omega_total;
    case Fn::IS_PRIME:
      return (f.omega_total == 1) ? 1 : 0;
    case Fn::MANGOLDT:
      // Collapsed to 0/1 "is prime power"; use naive_mangoldt for the pair.
      return (f.single_prime != 0) ? 1 : 0;
  }
  return 0;
}

PrimePower naive_mangoldt(u64 n) {
  const NaiveFactors f = trial_factor(n);
  return {f.single_prime, f.single_exp};
}

i64 lambda_via_identity(u64 n) {
  if (n == 0) throw std::domain_error("lambda_via_identity requires n >= 1");
  i64 sum = 0;
  for (u64 d = 1; d <= n / d; ++d)
    if (n % (d * d) == 0) sum += naive_value(Fn::MU, n / (d * d));
  return sum;
}

OracleReport check_window(Fn kind, Window w, const FunctionTable& table) {
  validate(w);
  if (w.width() > 1'000'000)
    throw std::invalid_argument("check_window width is capped at 10^6");
  if (table.kind != kind || !(table.window == w))
    throw std::invalid_argument("table does not match the checked window");

  OracleReport report;
  report.checked_window = w;
  for (u64 n = w.lo; n <= w.hi; ++n) {
    if (kind == Fn::MANGOLDT) {
      const PrimePower expect = naive_mangoldt(n);
      const PrimePower got = table.power_at(n);
      if (!(expect == got))
        report.mismatches.push_back(
            {n, "(" + std::to_string(expect.p) + "," + std::to_string(expect.k) + ")",
             "(" + std::to_string(got.p) + "," + std::to_string(got.k) + ")"});
    } else {
      const i64 expect = naive_value(kind, n);
      const i64 got = table.at(n);
      if (expect != got)
        report.mismatches.push_back(
            {n, std::to_string(expect), std::to_string(got)});
    }
    if (n == w.hi) break;  // u64 wrap guard at the top of the range
  }
  return report;
}

}  // namespace acor
