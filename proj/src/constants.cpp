// Euler products and series for the predicted main-term constants.

#include "acor/constants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "acor/sieve.hpp"

namespace acor {
namespace {

void check_distinct(const std::vector<i64>& shifts) {
  if (shifts.empty()) throw std::invalid_argument("shifts must be non-empty");
  std::vector<i64> sorted = shifts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("shifts must be distinct");
}

i64 mod_reduce(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return r < 0 ? r + static_cast<i64>(m) : r;
}

// Inverse of a mod m for gcd(a, m) = 1 (extended Euclid).
u64 mod_inverse(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tr = old_r - q * r;
    old_r = r;
    r = tr;
    i64 ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  return static_cast<u64>(mod_reduce(old_s, m));
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

ConstantResult s0(u64 cutoff_prime) {
  if (cutoff_prime < 2) throw std::invalid_argument("cutoff must be >= 2");
  Kahan log_sum;
  for (u64 p : small_primes(cutoff_prime)) {
    const double pd = static_cast<double>(p);
    log_sum.add(std::log1p(-1.0 / (pd * (pd - 1.0))));
  }
  ConstantResult res;
  res.value = std::exp(log_sum.value());
  res.cutoff_prime = cutoff_prime;
  res.tail_bound = 1.0 / static_cast<double>(cutoff_prime);
  res.method = Method::EULER_PRODUCT;
  return res;
}

ConstantResult s0_series(u64 n_limit) {
  if (n_limit < 1) throw std::invalid_argument("series limit must be >= 1");
  const FunctionTable mu = build_table(Fn::MU, {1, n_limit});

  // phi over [1, n_limit] by the classic divide-out sieve.
  std::vector<u64> phi(static_cast<std::size_t>(n_limit) + 1);
  for (u64 n = 0; n <= n_limit; ++n) phi[static_cast<std::size_t>(n)] = n;
  for (u64 p = 2; p <= n_limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;  // p not prime
    for (u64 m = p; m <= n_limit; m += p)
      phi[static_cast<std::size_t>(m)] -=
          phi[static_cast<std::size_t>(m)] / p;
  }

  Kahan sum;
  for (u64 n = 1; n <= n_limit; ++n) {
    const i64 m = mu.at(n);
    if (m == 0) continue;
    sum.add(static_cast<double>(m) /
            (static_cast<double>(n) *
             static_cast<double>(phi[static_cast<std::size_t>(n)])));
  }
  ConstantResult res;
  res.value = sum.value();
  res.cutoff_prime = n_limit;  // series truncation point
  res.tail_bound = 2.0 * std::sqrt(2.0) / std::sqrt(static_cast<double>(n_limit));
  res.method = Method::DIRICHLET_SERIES;
  return res;
}

ConstantResult zeta2_inverse() {
  constexpr long double pi = std::numbers::pi_v<long double>;
  ConstantResult res;
  res.value = static_cast<double>(6.0L / (pi * pi));
  res.cutoff_prime = 0;
  res.tail_bound = 0.0;
  res.method = Method::EULER_PRODUCT;
  return res;
}

namespace {

// Core varpi computation; the caller guarantees p is prime.
TupleLocalCount varpi_at(u64 p, i64 q, const std::vector<i64>& shifts) {
  const u64 p2 = p * p;

  const u64 qa = static_cast<u64>(q < 0 ? -q : q);
  if (qa % p != 0) {
    // q invertible mod p^2: the forbidden classes are -a_i / q, so the count
    // is just the number of distinct values.
    u64 qr = qa % p2;
    u64 inv = mod_inverse(qr, p2);
    if (q < 0) inv = (p2 - inv) % p2;
    std::vector<u64> classes;
    classes.reserve(shifts.size());
    for (i64 a : shifts) {
      const u64 neg_a = static_cast<u64>(mod_reduce(-a, p2));
      classes.push_back(mulmod(neg_a, inv, p2));
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return {p, classes.size()};
  }

  // p | q: direct enumeration over m in [0, p^2). Only reachable for
  // p <= |q|, so p^2 iterations stay cheap.
  u64 count = 0;
  for (u64 m = 0; m < p2; ++m) {
    u64 qm = mulmod(qa % p2, m, p2);
    if (q < 0) qm = (p2 - qm) % p2;  // q*m mod p^2 for negative q
    for (i64 a : shifts) {
      if ((qm + static_cast<u64>(mod_reduce(a, p2))) % p2 == 0) {
        ++count;
        break;
      }
    }
  }
  return {p, count};
}

}  // namespace

TupleLocalCount varpi(u64 p, i64 q, const std::vector<i64>& shifts) {
  if (q == 0) throw std::invalid_argument("varpi requires q != 0");
  check_distinct(shifts);
  if (p > 3'037'000'499ULL)
    throw std::invalid_argument("varpi requires p^2 < 2^64");
  bool prime = p >= 2;
  for (u64 d = 2; prime && d * d <= p; ++d) prime = (p % d != 0);
  if (!prime) throw std::invalid_argument("varpi requires a prime p");
  return varpi_at(p, q, shifts);
}

ConstantResult correlation_constant(i64 q, const std::vector<i64>& shifts,
                                    u64 cutoff_prime) {
  if (cutoff_prime < 2) throw std::invalid_argument("cutoff must be >= 2");
  if (q == 0) throw std::invalid_argument("modulus q must be nonzero");
  check_distinct(shifts);
  const double k = static_cast<double>(shifts.size());

  Kahan log_sum;
  for (u64 p : small_primes(cutoff_prime)) {
    const TupleLocalCount local = varpi_at(p, q, shifts);
    const double p2 = static_cast<double>(p) * static_cast<double>(p);
    if (static_cast<double>(local.varpi) == p2) {
      // Zero local factor: the product is exactly 0.
      ConstantResult zero;
      zero.value = 0.0;
      zero.cutoff_prime = p;
      zero.tail_bound = 0.0;
      zero.method = Method::EULER_PRODUCT;
      return zero;
    }
    log_sum.add(std::log1p(-static_cast<double>(local.varpi) / p2));
  }
  ConstantResult res;
  res.value = std::exp(log_sum.value());
  res.cutoff_prime = cutoff_prime;
  res.tail_bound = k / static_cast<double>(cutoff_prime);
  res.method = Method::EULER_PRODUCT;
  return res;
}

std::pair<ConstantResult, ConstantResult> derived_densities(u64 cutoff_prime) {
  const ConstantResult z = zeta2_inverse();
  const ConstantResult s1 = correlation_constant(1, {0, 1}, cutoff_prime);

  ConstantResult s2;
  s2.value = 1.0 - 2.0 * z.value + s1.value;
  s2.cutoff_prime = s1.cutoff_prime;
  s2.tail_bound = s1.tail_bound;
  s2.method = Method::EULER_PRODUCT;

  ConstantResult s3;
  s3.value = (z.value - s1.value) / 2.0;
  s3.cutoff_prime = s1.cutoff_prime;
  s3.tail_bound = s1.tail_bound / 2.0;
  s3.method = Method::EULER_PRODUCT;
  return {s2, s3};
}

}  // namespace acor
