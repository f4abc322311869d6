#pragma once
// Shared basic types: integer aliases, inclusive windows, the execution
// policy, and the compensated accumulator used by every floating reduction.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace acor {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Inclusive integer window [lo, hi] with 1 <= lo <= hi <= 2^63 - 1.
struct Window {
  u64 lo = 1;
  u64 hi = 1;

  u64 width() const { return hi - lo + 1; }
  bool contains(u64 n) const { return lo <= n && n <= hi; }
  friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr u64 kMaxWindowBound = (u64{1} << 63) - 1;

inline void validate(const Window& w) {
  if (w.lo < 1 || w.lo > w.hi || w.hi > kMaxWindowBound)
    throw std::invalid_argument("window must satisfy 1 <= lo <= hi <= 2^63-1");
}

// Table kinds produced by the sieve.
enum class Fn { MU, LAMBDA, BIG_OMEGA, MANGOLDT, IS_PRIME };

// Structural carrier for the von Mangoldt function: n = p^k when p != 0,
// otherwise n is not a prime power and Lambda(n) = 0. Keeping the pair exact
// defers the only rounding (log p) to summation time.
struct PrimePower {
  u64 p = 0;
  u32 k = 0;
  bool is_prime_power() const { return p != 0; }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Execution policy. Outputs are independent of `threads` by contract:
// segments have a fixed size, each floating reduction is compensated per
// segment, and partials merge in canonical segment order, so totals are
// bit-identical for any thread count.
struct Exec {
  int threads = 1;
  u64 segment = u64{1} << 22;            // elements per segment
  std::optional<std::string> cache_dir;  // overrides the ACOR_CACHE_DIR env var
  u64 hypothesis_state_budget = u64{1} << 25;  // max per-(q,d) running cells
};

// Neumaier-compensated accumulator. merge() folds another accumulator in;
// applying it in a fixed segment order makes parallel totals reproduce the
// sequential ones bit for bit.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  void merge(const Kahan& o) {
    add(o.sum);
    add(o.comp);
  }
  double value() const { return sum + comp; }
};

// Split w into consecutive segments of at most `segment` elements.
inline std::vector<Window> segments_of(const Window& w, u64 segment) {
  if (segment == 0) segment = 1;
  std::vector<Window> out;
  for (u64 lo = w.lo;;) {
    u64 left = w.hi - lo;  // elements after lo
    u64 hi = (left >= segment) ? lo + segment - 1 : w.hi;
    out.push_back({lo, hi});
    if (hi == w.hi) break;
    lo = hi + 1;
  }
  return out;
}

// Run body(0..jobs-1) on up to `threads` workers. The caller owns
// determinism: bodies write disjoint slots and any order-sensitive merge
// happens afterwards in index order.
template <class F>
void parallel_for(std::size_t jobs, int threads, F&& body) {
  if (threads < 1) threads = 1;
  if (threads == 1 || jobs <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs) return;
      body(i);
    }
  };
  std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), jobs);
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace acor
