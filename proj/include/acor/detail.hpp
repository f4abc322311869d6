#pragma once
// Internal helpers shared by the correlation and census engines: walking a
// Domain as a strided (optionally primes-only) integer range. Not part of
// the public surface; subject to change.

#include <algorithm>

#include "acor/core.hpp"
#include "acor/correlations.hpp"

namespace acor::detail {

struct BaseRange {
  u64 lo = 1;
  u64 hi = 0;  // hi < lo encodes an empty domain
  u64 stride = 1;
  bool primes_only = false;
};

inline BaseRange base_range_of(const Domain& d) {
  switch (d.kind) {
    case Domain::Kind::INTEGERS:
      return {1, d.x, 1, false};
    case Domain::Kind::SHIFTED_PRIMES:
      return {2, d.x, 1, true};
    case Domain::Kind::SHORT_INTERVAL:
      return {d.x, d.x + d.y, 1, false};
    case Domain::Kind::ARITH_PROGRESSION: {
      const u64 first = (d.r == 0) ? d.q : d.r;
      return {first, d.x, d.q, false};
    }
    case Domain::Kind::PRIME_ARITH_PROGRESSION: {
      const u64 first = (d.r == 0) ? d.q : d.r;
      return {first, d.x, d.q, true};
    }
  }
  return {};
}

// First element of the (first, stride)-progression that is >= from.
inline u64 progression_start(u64 first, u64 stride, u64 from) {
  if (from <= first) return first;
  const u64 skip = (from - first + stride - 1) / stride;
  return first + skip * stride;
}

// Internal per-segment scratch tables: single-threaded, never cached.
inline Exec scratch_exec(const Exec& exec) {
  Exec e = exec;
  e.threads = 1;
  e.cache_dir.reset();
  e.segment = std::max<u64>(e.segment, 1);
  return e;
}

}  // namespace acor::detail
