#pragma once
// Euler products and Dirichlet series behind the predicted main terms, with
// explicit truncation points and crude tail bounds: the singular constant
// s0 = prod_p (1 - 1/(p(p-1))), the squarefree density 6/pi^2, and the
// k-tuple correlation constants prod_p (1 - varpi(p)/p^2).
//
// Products are accumulated in log space with compensated summation and
// exponentiated once; factors are consumed in ascending prime order so
// results are reproducible.

#include <utility>
#include <vector>

#include "acor/core.hpp"

namespace acor {

enum class Method { EULER_PRODUCT, DIRICHLET_SERIES };

struct ConstantResult {
  double value = 0.0;
  u64 cutoff_prime = 0;  // 0 = closed form (no truncation)
  double tail_bound = 0.0;
  Method method = Method::EULER_PRODUCT;
};

// Local factor data at p: the number of residues m mod p^2 for which
// q*m + a_i == 0 (mod p^2) for SOME shift a_i (union of forbidden classes).
struct TupleLocalCount {
  u64 p = 0;
  u64 varpi = 0;
};

// s0 as the truncated product prod_{p <= cutoff} (1 - 1/(p(p-1))),
// tail bound sum_{p > cutoff} 1/(p(p-1)) <= 1/cutoff.
ConstantResult s0(u64 cutoff_prime);

// s0 as the series sum_{n <= N} mu(n)/(n*phi(n)), tail bound 2*sqrt(2)/sqrt(N)
// from 1/(n*phi(n)) <= sqrt(2)*n^{-3/2}.
ConstantResult s0_series(u64 n_limit);

// 6/pi^2 in closed form (cutoff 0, tail 0).
ConstantResult zeta2_inverse();

// varpi(p) for modulus q != 0 and distinct shifts. When p does not divide q
// this is the number of distinct -a_i * q^{-1} mod p^2; when p | q it falls
// back to direct enumeration over m in [0, p^2) (only reachable for p <= |q|,
// so the quadratic cost stays tiny).
TupleLocalCount varpi(u64 p, i64 q, const std::vector<i64>& shifts);

// Truncated product prod_{p <= cutoff} (1 - varpi(p)/p^2) with tail bound
// k/cutoff. A zero local factor makes the constant exactly 0 (reported with
// tail bound 0).
ConstantResult correlation_constant(i64 q, const std::vector<i64>& shifts,
                                    u64 cutoff_prime);

// The derived double-sign-cell densities, computed from the formulas
//   s2 = 1 - 2*z + s1   (both values zero)
//   s3 = (z - s1) / 2   (exactly one zero)
// with z = zeta2_inverse() and s1 = correlation_constant(1, (0,1), cutoff) —
// never from published decimal strings.
std::pair<ConstantResult, ConstantResult> derived_densities(
    u64 cutoff_prime = 10'000'000);

}  // namespace acor
