#pragma once
// Sign-pattern census machinery: exact counts of every pattern in
// {-1,0,+1}^k for a shift tuple over a domain, the signed combinations that
// tie censuses to correlation sums, joined counts, empirical densities with
// predicted reference densities, and Lambda-weighted single-sign sums.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acor/constants.hpp"
#include "acor/core.hpp"
#include "acor/correlations.hpp"

namespace acor {

// A sign tuple over {-1,0,+1}^k, encoded base 3 (symbol + 1 per slot).
struct PatternKey {
  std::vector<std::int8_t> symbols;

  static PatternKey decode(u64 index, int k);
  u64 encode() const;
  std::string str() const;  // e.g. "+-0"
  friend bool operator==(const PatternKey&, const PatternKey&) = default;
};

struct PatternCensus {
  CFn fn = CFn::MU;  // MU or LAMBDA
  std::vector<i64> shifts;
  Domain domain;
  std::vector<u64> counts;  // 3^k cells, indexed by PatternKey::encode
  u64 total = 0;

  int k() const { return static_cast<int>(shifts.size()); }
  u64 count_of(const PatternKey& key) const { return counts[key.encode()]; }
};

// Exact census over the domain; shifts distinct, k <= 4. For lambda every
// key containing 0 has count 0 (lambda never vanishes).
PatternCensus census(CFn fn, const std::vector<i64>& shifts,
                     const Domain& domain, const Exec& exec = {});

// Sum over zero-free keys of (product of symbols) * count; equals the
// UNIT-weight correlate of the matching TermSpec exactly.
i64 signed_combination(const PatternCensus& c);

// For k = 2 lambda censuses: Q_plus = (+,+) + (-,-), Q_minus = (+,-) + (-,+).
std::pair<u64, u64> joined_counts(const PatternCensus& c);

// Empirical density of each cell alongside the predicted reference density
// (when the constants module supplies one for this fn/k).
struct CellDensity {
  PatternKey key;
  u64 count = 0;
  double empirical = 0.0;
  std::optional<double> predicted;
  std::string source;  // which constant predicts this cell, or "none"
};

std::vector<CellDensity> densities(const PatternCensus& c,
                                   u64 constant_cutoff = 1'000'000);

// Lambda-weighted single-sign sums sum_{n <= x} Lambda(n) * [mu(n+a) = +-1],
// compensated summation in canonical segment order.
struct WeightedCensus {
  double plus = 0.0;
  double minus = 0.0;
  double err_bound = 0.0;
};

WeightedCensus weighted_census(i64 a, u64 x, const Exec& exec = {});

}  // namespace acor
