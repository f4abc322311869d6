// The general correlation-sum engine, maximal progression sums, and the
// exact identity audits.

#include "acor/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "acor/detail.hpp"
#include "acor/sieve.hpp"

namespace acor {
namespace {

using detail::BaseRange;
using detail::base_range_of;
using detail::progression_start;
using detail::scratch_exec;

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ShiftSpan {
  i64 mn = 0;
  i64 mx = 0;
};

ShiftSpan span_of(const TermSpec& terms) {
  if (terms.factors.empty())
    throw std::invalid_argument("terms need at least one factor");
  ShiftSpan s{terms.factors[0].shift, terms.factors[0].shift};
  for (const Factor& f : terms.factors) {
    s.mn = std::min(s.mn, f.shift);
    s.mx = std::max(s.mx, f.shift);
  }
  return s;
}

i64 factor_value(const Factor& f, const FunctionTable* mu,
                 const FunctionTable* lam, u64 n) {
  const u64 arg = static_cast<u64>(static_cast<i64>(n) + f.shift);
  switch (f.fn) {
    case CFn::MU:
      return mu->at(arg);
    case CFn::LAMBDA:
      return lam->at(arg);
    case CFn::MU_SQUARED:
      return mu->at(arg) != 0 ? 1 : 0;
  }
  return 0;
}

}  // namespace

void validate(const Domain& d) {
  if (d.x < 1) throw std::invalid_argument("domain requires x >= 1");
  if (d.kind == Domain::Kind::ARITH_PROGRESSION ||
      d.kind == Domain::Kind::PRIME_ARITH_PROGRESSION) {
    if (d.q < 1 || d.r >= d.q)
      throw std::invalid_argument("progression requires 0 <= r < q");
  }
  if (d.kind == Domain::Kind::SHORT_INTERVAL &&
      d.x + d.y > kMaxWindowBound)
    throw std::invalid_argument("short interval exceeds the integer width");
}

CorrelationResult correlate(const Domain& domain, Weight weight,
                            const TermSpec& terms, const Exec& exec) {
  validate(domain);
  const ShiftSpan span = span_of(terms);
  if (weight == Weight::VON_MANGOLDT &&
      domain.kind != Domain::Kind::INTEGERS &&
      domain.kind != Domain::Kind::SHORT_INTERVAL)
    throw std::invalid_argument(
        "von Mangoldt weight combines only with integer domains");

  CorrelationResult res;
  res.domain = domain;
  res.weight = weight;
  res.terms = terms;
  res.is_integer = (weight == Weight::UNIT);

  const BaseRange range = base_range_of(domain);
  if (range.hi < range.lo) return res;  // empty domain
  if (static_cast<i64>(range.lo) + span.mn < 1)
    throw std::domain_error("shift drives an argument below 1");

  bool need_mu = false, need_lambda = false;
  for (const Factor& f : terms.factors) {
    need_mu |= (f.fn != CFn::LAMBDA);
    need_lambda |= (f.fn == CFn::LAMBDA);
  }

  const Exec scratch = scratch_exec(exec);
  const std::vector<Window> segs =
      segments_of({range.lo, range.hi}, exec.segment);

  struct Partial {
    i64 ivalue = 0;
    Kahan fvalue;
    Kahan abs_value;
    u64 count = 0;
  };
  std::vector<Partial> parts(segs.size());

  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    const Window seg = segs[si];
    Partial& part = parts[si];

    const Window shifted{static_cast<u64>(static_cast<i64>(seg.lo) + span.mn),
                         static_cast<u64>(static_cast<i64>(seg.hi) + span.mx)};
    FunctionTable mu_t, lam_t, isp_t, von_t;
    if (need_mu) mu_t = build_table(Fn::MU, shifted, scratch);
    if (need_lambda) lam_t = build_table(Fn::LAMBDA, shifted, scratch);
    if (range.primes_only) isp_t = build_table(Fn::IS_PRIME, seg, scratch);
    if (weight == Weight::VON_MANGOLDT)
      von_t = build_table(Fn::MANGOLDT, seg, scratch);

    const u64 start = progression_start(range.lo, range.stride, seg.lo);
    for (u64 n = start; n <= seg.hi; n += range.stride) {
      if (range.primes_only && isp_t.at(n) == 0) {
        if (n > seg.hi - range.stride) break;
        continue;
      }
      ++part.count;
      i64 prod = 1;
      for (const Factor& f : terms.factors) {
        prod *= factor_value(f, &mu_t, &lam_t, n);
        if (prod == 0) break;
      }
      switch (weight) {
        case Weight::UNIT:
          part.ivalue += prod;
          break;
        case Weight::VON_MANGOLDT: {
          if (prod != 0) {
            const PrimePower& pp = von_t.power_at(n);
            if (pp.is_prime_power()) {
              const double t =
                  static_cast<double>(prod) * std::log(static_cast<double>(pp.p));
              part.fvalue.add(t);
              part.abs_value.add(std::abs(t));
            }
          }
          break;
        }
        case Weight::RECIPROCAL: {
          if (prod != 0) {
            const double t =
                static_cast<double>(prod) / static_cast<double>(n);
            part.fvalue.add(t);
            part.abs_value.add(std::abs(t));
          }
          break;
        }
      }
      if (n > seg.hi - range.stride) break;  // u64 wrap guard
    }
  });

  Kahan fsum, fabs_sum;
  for (const Partial& part : parts) {
    res.int_value += part.ivalue;
    fsum.merge(part.fvalue);
    fabs_sum.merge(part.abs_value);
    res.term_count += part.count;
  }
  if (!res.is_integer) {
    res.float_value = fsum.value();
    // Compensated summation keeps the accumulation error at O(eps) relative
    // to the absolute-value sum; 4x covers the per-term input rounding too.
    res.err_bound = 4.0 * kEps * fabs_sum.value();
  }
  return res;
}

CorrelationResult log_average(const TermSpec& terms, u64 x, const Exec& exec) {
  return correlate(Domain::integers(x), Weight::RECIPROCAL, terms, exec);
}

HypothesisResult hypothesis_sum(CFn fn, const std::vector<i64>& shifts, u64 x,
                                double B, const Exec& exec) {
  if (fn == CFn::MU_SQUARED)
    throw std::invalid_argument("hypothesis_sum takes MU or LAMBDA");
  if (shifts.empty() || shifts.size() > 2)
    throw std::invalid_argument("hypothesis_sum takes one or two shifts");
  if (x < 100) throw std::invalid_argument("hypothesis_sum requires x >= 100");
  if (B < 0) throw std::invalid_argument("hypothesis_sum requires B >= 0");
  {
    std::vector<i64> sorted = shifts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("shifts must be distinct");
    if (2 + sorted.front() < 1)
      throw std::domain_error("shift drives an argument below 1");
  }

  const double bound =
      std::sqrt(static_cast<double>(x)) /
      std::pow(std::log(static_cast<double>(x)), B);
  const u64 q_max = bound < 1.0 ? 0 : static_cast<u64>(bound);

  HypothesisResult res;
  res.q_max = q_max;
  if (q_max == 0) return res;

  // Per-(q, d) running sums and running maxima, densely packed.
  const u64 cells = q_max * (q_max + 1) / 2;
  if (cells > exec.hypothesis_state_budget)
    throw std::runtime_error(
        "hypothesis_sum state exceeds the configured budget");
  std::vector<u64> offset(q_max + 1, 0);
  for (u64 q = 1; q <= q_max; ++q) offset[q] = (q * (q - 1)) / 2;
  std::vector<i64> run(cells, 0), best(cells, 0);

  // Stream the primes once, in order; the running maxima make this part
  // inherently sequential in z.
  ShiftSpan span{shifts.front(), shifts.front()};
  for (i64 a : shifts) {
    span.mn = std::min(span.mn, a);
    span.mx = std::max(span.mx, a);
  }
  const Exec scratch = scratch_exec(exec);
  for (const Window& seg : segments_of({2, x}, exec.segment)) {
    const Window shifted{static_cast<u64>(static_cast<i64>(seg.lo) + span.mn),
                         static_cast<u64>(static_cast<i64>(seg.hi) + span.mx)};
    const FunctionTable vals = build_table(
        fn == CFn::MU ? Fn::MU : Fn::LAMBDA, shifted, scratch);
    const FunctionTable isp = build_table(Fn::IS_PRIME, seg, scratch);
    for (u64 p = seg.lo; p <= seg.hi; ++p) {
      if (isp.at(p) == 0) continue;
      ++res.prime_count;
      i64 w = 1;
      for (i64 a : shifts) {
        w *= vals.at(static_cast<u64>(static_cast<i64>(p) + a));
        if (w == 0) break;
      }
      if (w == 0) continue;
      for (u64 q = 1; q <= q_max; ++q) {
        const u64 idx = offset[q] + p % q;
        run[idx] += w;
        const i64 mag = run[idx] < 0 ? -run[idx] : run[idx];
        if (mag > best[idx]) best[idx] = mag;
      }
    }
  }

  i64 total = 0;
  for (u64 q = 1; q <= q_max; ++q) {
    i64 q_best = 0;
    for (u64 d = 0; d < q; ++d) q_best = std::max(q_best, best[offset[q] + d]);
    total += q_best;
  }
  res.value = static_cast<double>(total);
  return res;
}

std::string to_string(AuditKind k) {
  switch (k) {
    case AuditKind::MU_EQ_LAMBDA_MUSQ:
      return "mu-eq-lambda-musq";
    case AuditKind::LAMBDA_DIVISOR_SUM:
      return "lambda-divisor-sum";
    case AuditKind::MU_PARTITION:
      return "mu-partition";
    case AuditKind::MU_DOUBLE_DECOMP:
      return "mu-double-decomp";
    case AuditKind::LAMBDA_DOUBLE_DECOMP:
      return "lambda-double-decomp";
  }
  return "unknown";
}

AuditReport identity_audit(AuditKind which, u64 x, i64 param,
                           const Exec& exec) {
  if (x < 1 || x > 100'000)
    throw std::invalid_argument("identity audits are capped at x <= 10^5");

  AuditReport rep;
  rep.which = which;
  rep.x = x;
  rep.param = param;

  auto note_offender = [&](const std::string& line) {
    if (rep.offenders.size() < 10) rep.offenders.push_back(line);
  };

  switch (which) {
    case AuditKind::MU_EQ_LAMBDA_MUSQ: {
      const FunctionTable mu = build_table(Fn::MU, {1, x}, exec);
      const FunctionTable lam = build_table(Fn::LAMBDA, {1, x}, exec);
      i64 agree = 0;
      for (u64 n = 1; n <= x; ++n) {
        const i64 m = mu.at(n);
        const i64 l = lam.at(n);
        if (m == l * (m != 0 ? 1 : 0))
          ++agree;
        else
          note_offender("n=" + std::to_string(n));
      }
      rep.lhs = static_cast<i64>(x);
      rep.rhs = agree;
      rep.ok = (rep.lhs == rep.rhs);
      return rep;
    }

    case AuditKind::LAMBDA_DIVISOR_SUM: {
      const FunctionTable mu = build_table(Fn::MU, {1, x}, exec);
      const FunctionTable lam = build_table(Fn::LAMBDA, {1, x}, exec);
      std::vector<i64> acc(static_cast<std::size_t>(x) + 1, 0);
      for (u64 d = 1; d * d <= x; ++d)
        for (u64 m = d * d; m <= x; m += d * d)
          acc[static_cast<std::size_t>(m)] += mu.at(m / (d * d));
      i64 agree = 0;
      for (u64 n = 1; n <= x; ++n) {
        if (acc[static_cast<std::size_t>(n)] == lam.at(n))
          ++agree;
        else
          note_offender("n=" + std::to_string(n));
      }
      rep.lhs = static_cast<i64>(x);
      rep.rhs = agree;
      rep.ok = (rep.lhs == rep.rhs);
      return rep;
    }

    case AuditKind::MU_PARTITION: {
      const i64 a = param;
      if (2 + a < 1)
        throw std::domain_error("shift drives an argument below 1");
      rep.lhs = correlate(Domain::shifted_primes(x), Weight::UNIT,
                          {{{a, CFn::MU}}}, exec)
                    .int_value;
      const std::vector<u64> primes = primes_in({1, x}, exec);
      const u64 arg_hi = static_cast<u64>(static_cast<i64>(x) + a);
      const FunctionTable lam = build_table(Fn::LAMBDA, {1, arg_hi}, exec);
      u64 droot = static_cast<u64>(std::sqrt(static_cast<double>(arg_hi)));
      while ((droot + 1) * (droot + 1) <= arg_hi) ++droot;
      const FunctionTable mu =
          build_table(Fn::MU, {1, std::max<u64>(droot, 2)}, exec);
      i64 rhs = 0;
      for (u64 d = 1; d * d <= arg_hi; ++d) {
        const i64 md = mu.at(d);
        if (md == 0) continue;
        i64 inner = 0;
        for (u64 p : primes) {
          const u64 arg = static_cast<u64>(static_cast<i64>(p) + a);
          if (arg % (d * d) == 0) inner += lam.at(arg);
        }
        rhs += md * inner;
      }
      rep.rhs = rhs;
      rep.ok = (rep.lhs == rep.rhs);
      return rep;
    }

    case AuditKind::MU_DOUBLE_DECOMP:
    case AuditKind::LAMBDA_DOUBLE_DECOMP: {
      const i64 t = param;
      if (t < 1)
        throw std::invalid_argument("double decompositions take t >= 1");
      const u64 hi = x + static_cast<u64>(t);
      const FunctionTable mu = build_table(Fn::MU, {1, hi}, exec);
      const FunctionTable lam = build_table(Fn::LAMBDA, {1, hi}, exec);

      const bool mu_form = (which == AuditKind::MU_DOUBLE_DECOMP);
      i64 lhs = 0;
      for (u64 n = 1; n <= x; ++n)
        lhs += mu_form ? mu.at(n) * mu.at(n + t) : lam.at(n) * lam.at(n + t);
      rep.lhs = lhs;

      i64 rhs = 0;
      for (u64 d = 1; d * d <= x; ++d) {
        if (mu_form && mu.at(d) == 0) continue;
        for (u64 e = 1; e * e <= hi; ++e) {
          if (mu_form && mu.at(e) == 0) continue;
          const u64 e2 = e * e;
          i64 inner = 0;
          for (u64 n = d * d; n <= x; n += d * d) {
            if ((n + t) % e2 != 0) continue;
            inner += mu_form ? lam.at(n) * lam.at(n + t)
                             : mu.at(n / (d * d)) * mu.at((n + t) / e2);
          }
          rhs += mu_form ? mu.at(d) * mu.at(e) * inner : inner;
        }
      }
      rep.rhs = rhs;
      rep.ok = (rep.lhs == rep.rhs);
      return rep;
    }
  }
  throw std::invalid_argument("unknown audit kind");
}

}  // namespace acor
