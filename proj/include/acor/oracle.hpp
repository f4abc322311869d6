#pragma once
// Independent naive reference implementations: trial division and direct
// loops only, sharing no code with the sieve. Used to pin expected values and
// to cross-validate the sieve on small or offset windows.

#include <string>
#include <vector>

#include "acor/core.hpp"
#include "acor/sieve.hpp"

namespace acor {

// Exact value of `kind` at n by full trial-division factorization.
// Valid for 1 <= n <= 10^12 (the trial-division cost bound).
i64 naive_value(Fn kind, u64 n);

// Structural Lambda value at n (p == 0 when n is not a prime power).
PrimePower naive_mangoldt(u64 n);

// lambda(n) via the divisor-sum identity lambda(n) = sum_{d^2 | n} mu(n/d^2);
// must agree with naive_value(LAMBDA, n) everywhere.
i64 lambda_via_identity(u64 n);

struct Mismatch {
  u64 n = 0;
  std::string expected;  // oracle value
  std::string got;       // table value
};

struct OracleReport {
  Window checked_window;
  std::vector<Mismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Compare `table` against the oracle on every n in `w` (width <= 10^6).
OracleReport check_window(Fn kind, Window w, const FunctionTable& table);

}  // namespace acor
