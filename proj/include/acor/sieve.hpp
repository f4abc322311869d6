#pragma once
// Segmented factor sieve: exact tables of mu(n), lambda(n), Omega(n),
// Lambda(n) (structural prime-power form) and primality over arbitrary
// inclusive windows, plus summatory functions and the logarithmic integral
// li(x) = integral_2^x dt/log t.
//
// Strategy: factor every window element by the primes <= sqrt(hi), tracking
// the remaining cofactor; one pass serves all five table kinds and works for
// offset windows. Any leftover cofactor > 1 is a single prime > sqrt(hi).

#include <optional>
#include <vector>

#include "acor/core.hpp"

namespace acor {

// Dense table of one arithmetic function over a window. Exactly one of the
// three value vectors is populated, chosen by `kind`:
//   MU, LAMBDA      -> small   (values in {-1,0,+1} / {-1,+1})
//   BIG_OMEGA       -> counts  (Omega(n), with multiplicity)
//   IS_PRIME        -> counts  (0/1)
//   MANGOLDT        -> powers  (PrimePower; p == 0 means Lambda(n) = 0)
struct FunctionTable {
  Fn kind = Fn::MU;
  Window window;
  std::vector<std::int8_t> small;
  std::vector<u8> counts;
  std::vector<PrimePower> powers;

  u64 size() const { return window.width(); }

  // Value for MU/LAMBDA/BIG_OMEGA/IS_PRIME tables.
  i64 at(u64 n) const {
    u64 i = n - window.lo;
    return small.empty() ? static_cast<i64>(counts[i])
                         : static_cast<i64>(small[i]);
  }
  const PrimePower& power_at(u64 n) const { return powers[n - window.lo]; }
};

// Exact table of `kind` over `w`. Deterministic and independent of
// segmentation; consults the table cache when one is configured.
FunctionTable build_table(Fn kind, Window w, const Exec& exec = {});

// Ascending primes in [w.lo, w.hi].
std::vector<u64> primes_in(Window w, const Exec& exec = {});

// Simple (non-segmented) prime list up to `limit` inclusive; the base primes
// behind every segmented pass.
std::vector<u64> small_primes(u64 limit);

enum class SumKind { MU, LAMBDA, MU_SQUARED, PRIME_COUNT, MANGOLDT_PSI };

// Summatory value over [1, x]: M(x), L(x), Q(x), pi(x), or psi(x).
// Integer kinds are exact; MANGOLDT_PSI is a compensated floating sum.
struct SummatoryResult {
  SumKind kind;
  u64 x = 0;
  bool is_integer = true;
  i64 int_value = 0;
  double float_value = 0.0;
};

SummatoryResult summatory(SumKind kind, u64 x, const Exec& exec = {});

// li(x) for x >= 2, evaluated in extended precision by composite
// Gauss-Legendre quadrature on the substitution t = e^u.
double log_integral(double x);

// ---- optional on-disk table cache -----------------------------------------
// Record layout (little endian):
//   magic "ACOR" | u32 version | u32 kind | u64 lo | u64 hi |
//   u64 payload_bytes | payload | u64 fnv1a64(payload)
// The cache is purely an optimization: a record that fails any validation is
// ignored and the table is rebuilt from scratch.

inline constexpr char kCacheMagic[4] = {'A', 'C', 'O', 'R'};
inline constexpr u32 kCacheVersion = 1;

// Effective cache directory: exec override first, then ACOR_CACHE_DIR.
std::optional<std::string> cache_dir_of(const Exec& exec);

std::optional<FunctionTable> cache_load(const std::string& dir, Fn kind,
                                        Window w);
bool cache_store(const std::string& dir, const FunctionTable& table);

u64 fnv1a64(const void* data, std::size_t bytes);

}  // namespace acor
