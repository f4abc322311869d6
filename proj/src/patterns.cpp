// Sign-pattern censuses over a domain, the signed combinations tying them to
// correlation sums, empirical densities with predicted reference values, and
// Lambda-weighted single-sign sums.

#include "acor/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "acor/detail.hpp"
#include "acor/sieve.hpp"

namespace acor {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

u64 pow3(int k) {
  u64 r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

}  // namespace

PatternKey PatternKey::decode(u64 index, int k) {
  PatternKey key;
  key.symbols.assign(static_cast<std::size_t>(k), 0);
  for (int i = k - 1; i >= 0; --i) {
    key.symbols[static_cast<std::size_t>(i)] =
        static_cast<std::int8_t>(static_cast<int>(index % 3) - 1);
    index /= 3;
  }
  return key;
}

u64 PatternKey::encode() const {
  u64 idx = 0;
  for (std::int8_t s : symbols) idx = idx * 3 + static_cast<u64>(s + 1);
  return idx;
}

std::string PatternKey::str() const {
  std::string out;
  out.reserve(symbols.size());
  for (std::int8_t s : symbols) out += (s < 0 ? '-' : (s > 0 ? '+' : '0'));
  return out;
}

PatternCensus census(CFn fn, const std::vector<i64>& shifts,
                     const Domain& domain, const Exec& exec) {
  if (fn == CFn::MU_SQUARED)
    throw std::invalid_argument("census takes MU or LAMBDA");
  if (shifts.empty() || shifts.size() > 4)
    throw std::invalid_argument("census takes 1 to 4 shifts");
  {
    std::vector<i64> sorted = shifts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("shifts must be distinct");
  }
  validate(domain);

  PatternCensus out;
  out.fn = fn;
  out.shifts = shifts;
  out.domain = domain;
  const int k = out.k();
  out.counts.assign(pow3(k), 0);

  const detail::BaseRange range = detail::base_range_of(domain);
  if (range.hi < range.lo) return out;

  i64 mn = shifts.front(), mx = shifts.front();
  for (i64 a : shifts) {
    mn = std::min(mn, a);
    mx = std::max(mx, a);
  }
  if (static_cast<i64>(range.lo) + mn < 1)
    throw std::domain_error("shift drives an argument below 1");

  const Exec scratch = detail::scratch_exec(exec);
  const std::vector<Window> segs =
      segments_of({range.lo, range.hi}, exec.segment);

  struct Partial {
    std::vector<u64> counts;
    u64 total = 0;
  };
  std::vector<Partial> parts(segs.size());

  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    const Window seg = segs[si];
    Partial& part = parts[si];
    part.counts.assign(pow3(k), 0);

    const Window shifted{static_cast<u64>(static_cast<i64>(seg.lo) + mn),
                         static_cast<u64>(static_cast<i64>(seg.hi) + mx)};
    const FunctionTable vals = build_table(
        fn == CFn::MU ? Fn::MU : Fn::LAMBDA, shifted, scratch);
    FunctionTable isp;
    if (range.primes_only) isp = build_table(Fn::IS_PRIME, seg, scratch);

    const u64 start =
        detail::progression_start(range.lo, range.stride, seg.lo);
    for (u64 n = start; n <= seg.hi; n += range.stride) {
      if (!range.primes_only || isp.at(n) != 0) {
        u64 idx = 0;
        for (i64 a : shifts) {
          const i64 v = vals.at(static_cast<u64>(static_cast<i64>(n) + a));
          idx = idx * 3 + static_cast<u64>(v + 1);
        }
        ++part.counts[idx];
        ++part.total;
      }
      if (n > seg.hi - range.stride) break;  // u64 wrap guard
    }
  });

  for (const Partial& part : parts) {
    for (std::size_t i = 0; i < out.counts.size(); ++i)
      out.counts[i] += part.counts[i];
    out.total += part.total;
  }
  return out;
}

i64 signed_combination(const PatternCensus& c) {
  const int k = c.k();
  i64 sum = 0;
  for (u64 idx = 0; idx < c.counts.size(); ++idx) {
    if (c.counts[idx] == 0) continue;
    const PatternKey key = PatternKey::decode(idx, k);
    i64 prod = 1;
    for (std::int8_t s : key.symbols) prod *= s;
    if (prod != 0) sum += prod * static_cast<i64>(c.counts[idx]);
  }
  return sum;
}

std::pair<u64, u64> joined_counts(const PatternCensus& c) {
  if (c.fn != CFn::LAMBDA || c.k() != 2)
    throw std::invalid_argument("joined counts need a lambda census with k=2");
  auto cell = [&](int a, int b) {
    return c.counts[static_cast<u64>(a + 1) * 3 + static_cast<u64>(b + 1)];
  };
  return {cell(1, 1) + cell(-1, -1), cell(1, -1) + cell(-1, 1)};
}

std::vector<CellDensity> densities(const PatternCensus& c,
                                   u64 constant_cutoff) {
  const int k = c.k();
  const double total = c.total ? static_cast<double>(c.total) : 1.0;
  const bool integers = (c.domain.kind == Domain::Kind::INTEGERS);
  const bool shifted_primes =
      (c.domain.kind == Domain::Kind::SHIFTED_PRIMES);

  // Reference constants, fetched once if this census shape has predictions.
  double z = 0.0, s0v = 0.0, pair = 0.0;
  bool have_pair = false;
  if (c.fn == CFn::MU) {
    if (integers) {
      z = zeta2_inverse().value;
      if (k == 2) {
        pair = correlation_constant(1, c.shifts, constant_cutoff).value;
        have_pair = true;
      }
    } else if (shifted_primes && k == 1) {
      s0v = s0(constant_cutoff).value;
    }
  }

  std::vector<CellDensity> out;
  out.reserve(c.counts.size());
  for (u64 idx = 0; idx < c.counts.size(); ++idx) {
    CellDensity cell;
    cell.key = PatternKey::decode(idx, k);
    cell.count = c.counts[idx];
    cell.empirical = static_cast<double>(cell.count) / total;
    cell.source = "none";

    int zeros = 0;
    for (std::int8_t s : cell.key.symbols) zeros += (s == 0);

    if (c.fn == CFn::LAMBDA) {
      if (zeros > 0) {
        cell.predicted = 0.0;
        cell.source = "exact-zero";  // lambda never vanishes
      } else if (integers && k == 1) {
        cell.predicted = 0.5;
        cell.source = "1/2";
      } else if (integers && k == 2) {
        cell.predicted = 0.25;
        cell.source = "1/4";
      }
    } else if (integers && k == 1) {
      if (zeros == 0) {
        cell.predicted = z / 2.0;
        cell.source = "zeta2_inverse/2";
      } else {
        cell.predicted = 1.0 - z;
        cell.source = "1-zeta2_inverse";
      }
    } else if (shifted_primes && k == 1) {
      if (zeros == 0) {
        cell.predicted = s0v / 2.0;
        cell.source = "s0/2";
      } else {
        cell.predicted = 1.0 - s0v;
        cell.source = "1-s0";
      }
    } else if (integers && k == 2 && have_pair) {
      if (zeros == 0) {
        cell.predicted = pair / 4.0;
        cell.source = "pair_constant/4";
      } else if (zeros == 1) {
        cell.predicted = (z - pair) / 2.0;
        cell.source = "(zeta2_inverse-pair_constant)/2";
      } else {
        cell.predicted = 1.0 - 2.0 * z + pair;
        cell.source = "1-2*zeta2_inverse+pair_constant";
      }
    }
    out.push_back(std::move(cell));
  }
  return out;
}

WeightedCensus weighted_census(i64 a, u64 x, const Exec& exec) {
  validate(Window{1, x});
  if (1 + a < 1) throw std::domain_error("shift drives an argument below 1");

  const Exec scratch = detail::scratch_exec(exec);
  const std::vector<Window> segs = segments_of({1, x}, exec.segment);

  struct Partial {
    Kahan plus, minus;
  };
  std::vector<Partial> parts(segs.size());

  parallel_for(segs.size(), exec.threads, [&](std::size_t si) {
    const Window seg = segs[si];
    Partial& part = parts[si];
    const Window shifted{static_cast<u64>(static_cast<i64>(seg.lo) + a),
                         static_cast<u64>(static_cast<i64>(seg.hi) + a)};
    const FunctionTable mu = build_table(Fn::MU, shifted, scratch);
    const FunctionTable von = build_table(Fn::MANGOLDT, seg, scratch);
    for (u64 n = seg.lo; n <= seg.hi; ++n) {
      const PrimePower& pp = von.power_at(n);
      if (!pp.is_prime_power()) continue;
      const i64 m = mu.at(static_cast<u64>(static_cast<i64>(n) + a));
      if (m == 0) continue;
      (m > 0 ? part.plus : part.minus)
          .add(std::log(static_cast<double>(pp.p)));
    }
  });

  Kahan plus, minus;
  for (const Partial& part : parts) {
    plus.merge(part.plus);
    minus.merge(part.minus);
  }
  WeightedCensus out;
  out.plus = plus.value();
  out.minus = minus.value();
  out.err_bound = 4.0 * kEps * (out.plus + out.minus);
  return out;
}

}  // namespace acor
