// Correlation sums over every domain kind, weighted sums, log averages,
// maximal progression sums, and the exact identity audits.

#include <cmath>
#include <vector>

#include "doctest.h"

#include "acor/core.hpp"
#include "acor/correlations.hpp"
#include "acor/sieve.hpp"

using namespace acor;

namespace {

const TermSpec kMu01{{{0, CFn::MU}, {1, CFn::MU}}};
const TermSpec kLa01{{{0, CFn::LAMBDA}, {1, CFn::LAMBDA}}};

i64 unit(const Domain& d, const TermSpec& t, const Exec& e = {}) {
  return correlate(d, Weight::UNIT, t, e).int_value;
}

}  // namespace

TEST_CASE("mu pair correlation pins") {
  CHECK(unit(Domain::integers(1'000), kMu01) == -11);
  CHECK(unit(Domain::integers(10'000), kMu01) == 12);
  const TermSpec mu02{{{0, CFn::MU}, {2, CFn::MU}}};
  CHECK(unit(Domain::integers(10'000), mu02) == -17);
}

TEST_CASE("lambda pair correlation pins") {
  CHECK(unit(Domain::integers(1'000), kLa01) == 14);
  CHECK(unit(Domain::integers(10'000), kLa01) == 112);
  CHECK(unit(Domain::short_interval(10'000'000, 1'000), kLa01) == 27);
}

TEST_CASE("single-factor sums equal summatory values") {
  const TermSpec mu0{{{0, CFn::MU}}};
  const TermSpec la0{{{0, CFn::LAMBDA}}};
  const TermSpec musq0{{{0, CFn::MU_SQUARED}}};
  CHECK(unit(Domain::integers(10'000), mu0) ==
        summatory(SumKind::MU, 10'000).int_value);
  CHECK(unit(Domain::integers(10'000), la0) ==
        summatory(SumKind::LAMBDA, 10'000).int_value);
  CHECK(unit(Domain::integers(10'000), musq0) ==
        summatory(SumKind::MU_SQUARED, 10'000).int_value);
}

TEST_CASE("shifted prime sums") {
  const Domain d = Domain::shifted_primes(10'000);
  CHECK(unit(d, {{{1, CFn::MU}}}) == -16);
  CHECK(unit(d, {{{3, CFn::MU}}}) == 30);
  CHECK(unit(d, {{{1, CFn::LAMBDA}}}) == -67);
  CHECK(unit(d, {{{3, CFn::LAMBDA}}}) == 23);
  CHECK(correlate(d, Weight::UNIT, {{{1, CFn::MU}}}, {}).term_count == 1229);
}

TEST_CASE("squarefree shifted primes at 1e6") {
  const i64 v =
      unit(Domain::shifted_primes(1'000'000), {{{1, CFn::MU_SQUARED}}});
  CHECK(v == 29290);
  // Within 2% of s0 * li(1e6).
  const double target = 0.373955815810604608 * log_integral(1e6);
  CHECK(std::fabs(static_cast<double>(v) - target) / target < 0.02);
}

TEST_CASE("progressions partition the integer domain") {
  i64 total = 0;
  u64 count = 0;
  for (u64 r : {0ULL, 1ULL, 2ULL}) {
    const CorrelationResult part =
        correlate(Domain::progression(10'000, 3, r), Weight::UNIT, kLa01, {});
    total += part.int_value;
    count += part.term_count;
  }
  CHECK(total == unit(Domain::integers(10'000), kLa01));
  CHECK(count == 10'000);
}

TEST_CASE("prime progressions partition the primes") {
  u64 count = 0;
  for (u64 r : {1ULL, 3ULL})
    count += correlate(Domain::prime_progression(10'000, 4, r), Weight::UNIT,
                       {{{0, CFn::LAMBDA}}}, {})
                 .term_count;
  // Only p = 2 is missing from the odd residue classes mod 4.
  CHECK(count + 1 == 1229);
}

TEST_CASE("von Mangoldt weighted squarefree neighbor sums") {
  const TermSpec musq1{{{1, CFn::MU_SQUARED}}};
  const CorrelationResult r1 =
      correlate(Domain::integers(10'000), Weight::VON_MANGOLDT, musq1, {});
  CHECK(!r1.is_integer);
  CHECK(r1.float_value ==
        doctest::Approx(3823.680959239055166).epsilon(1e-9));
  CHECK(r1.err_bound > 0.0);
  CHECK(r1.err_bound < 1e-9);

  const CorrelationResult r2 =
      correlate(Domain::integers(100'000), Weight::VON_MANGOLDT, musq1, {});
  CHECK(r2.float_value ==
        doctest::Approx(37419.22172673149434).epsilon(1e-9));
}

TEST_CASE("log averages") {
  const CorrelationResult mu = log_average(kMu01, 10'000);
  CHECK(mu.float_value ==
        doctest::Approx(-0.7894538966693338197).epsilon(1e-9));
  const CorrelationResult la = log_average(kLa01, 10'000);
  CHECK(la.float_value ==
        doctest::Approx(-0.8343700597111695855).epsilon(1e-9));
}

TEST_CASE("floating reductions are identical across thread counts") {
  Exec one, four;
  one.threads = 1;
  four.threads = 4;
  one.segment = four.segment = 4096;
  const TermSpec musq1{{{1, CFn::MU_SQUARED}}};
  const double a =
      correlate(Domain::integers(100'000), Weight::VON_MANGOLDT, musq1, one)
          .float_value;
  const double b =
      correlate(Domain::integers(100'000), Weight::VON_MANGOLDT, musq1, four)
          .float_value;
  CHECK(a == b);
}

TEST_CASE("weight and domain validation") {
  CHECK_THROWS(correlate(Domain::shifted_primes(100), Weight::VON_MANGOLDT,
                         kMu01, {}));
  CHECK_THROWS(correlate(Domain::integers(0), Weight::UNIT, kMu01, {}));
  CHECK_THROWS(correlate(Domain::progression(100, 4, 5), Weight::UNIT, kMu01,
                         {}));
  // A negative shift that drives arguments below 1.
  CHECK_THROWS(correlate(Domain::integers(100), Weight::UNIT,
                         {{{-1, CFn::MU}}}, {}));
  CHECK_THROWS(correlate(Domain::integers(100), Weight::UNIT, TermSpec{}, {}));
}

TEST_CASE("hypothesis sum pins") {
  const HypothesisResult mu = hypothesis_sum(CFn::MU, {1}, 1'000, 0.0);
  CHECK(mu.q_max == 31);
  CHECK(mu.value == 163.0);
  CHECK(mu.prime_count == 168);

  const HypothesisResult la = hypothesis_sum(CFn::LAMBDA, {1, 3}, 100'000, 1.0);
  CHECK(la.q_max == 27);
  CHECK(la.value == 1919.0);
  CHECK(la.value >= 0.0);
  CHECK(la.value <= static_cast<double>(la.q_max) *
                        static_cast<double>(la.prime_count));
}

TEST_CASE("hypothesis sum budget guard") {
  Exec tiny;
  tiny.hypothesis_state_budget = 8;
  CHECK_THROWS_AS(hypothesis_sum(CFn::MU, {1}, 1'000'000, 0.0, tiny),
                  std::runtime_error);
}

TEST_CASE("hypothesis sum input validation") {
  CHECK_THROWS(hypothesis_sum(CFn::MU_SQUARED, {1}, 1'000, 0.0));
  CHECK_THROWS(hypothesis_sum(CFn::MU, {}, 1'000, 0.0));
  CHECK_THROWS(hypothesis_sum(CFn::MU, {1, 1}, 1'000, 0.0));
  CHECK_THROWS(hypothesis_sum(CFn::MU, {1}, 10, 0.0));
  CHECK_THROWS(hypothesis_sum(CFn::MU, {1}, 1'000, -1.0));
}

TEST_CASE("identity audits all pass") {
  CHECK(identity_audit(AuditKind::MU_EQ_LAMBDA_MUSQ, 100'000).ok);
  CHECK(identity_audit(AuditKind::LAMBDA_DIVISOR_SUM, 100'000).ok);

  const AuditReport part = identity_audit(AuditKind::MU_PARTITION, 10'000, 1);
  CHECK(part.ok);
  CHECK(part.lhs == -16);
  CHECK(part.rhs == -16);

  const AuditReport mu2 = identity_audit(AuditKind::MU_DOUBLE_DECOMP, 1'000, 1);
  CHECK(mu2.ok);
  CHECK(mu2.lhs == -11);
  CHECK(mu2.rhs == -11);

  const AuditReport la2 =
      identity_audit(AuditKind::LAMBDA_DOUBLE_DECOMP, 1'000, 1);
  CHECK(la2.ok);
  CHECK(la2.lhs == 14);
  CHECK(la2.rhs == 14);
}

TEST_CASE("audits enforce the oracle-grade cap") {
  CHECK_THROWS(identity_audit(AuditKind::MU_EQ_LAMBDA_MUSQ, 200'000));
}
