// pybind11 module exposing the main acor operations with plain Python types.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "acor/constants.hpp"
#include "acor/core.hpp"
#include "acor/correlations.hpp"
#include "acor/oracle.hpp"
#include "acor/patterns.hpp"
#include "acor/sieve.hpp"

namespace py = pybind11;

namespace {

using acor::i64;
using acor::u64;

acor::Fn fn_of(const std::string& s) {
  if (s == "mu") return acor::Fn::MU;
  if (s == "lambda") return acor::Fn::LAMBDA;
  if (s == "omega") return acor::Fn::BIG_OMEGA;
  if (s == "mangoldt") return acor::Fn::MANGOLDT;
  if (s == "isprime") return acor::Fn::IS_PRIME;
  throw std::invalid_argument("fn must be mu|lambda|omega|mangoldt|isprime");
}

acor::CFn cfn_of(const std::string& s) {
  if (s == "mu") return acor::CFn::MU;
  if (s == "lambda") return acor::CFn::LAMBDA;
  if (s == "mu2") return acor::CFn::MU_SQUARED;
  throw std::invalid_argument("fn must be mu|lambda|mu2");
}

acor::Domain domain_of(const std::string& kind, u64 x, u64 y, u64 q, u64 r) {
  if (kind == "integers") return acor::Domain::integers(x);
  if (kind == "shifted-primes") return acor::Domain::shifted_primes(x);
  if (kind == "short") return acor::Domain::short_interval(x, y);
  if (kind == "progression") return acor::Domain::progression(x, q, r);
  if (kind == "prime-progression")
    return acor::Domain::prime_progression(x, q, r);
  throw std::invalid_argument(
      "domain must be integers|shifted-primes|short|progression|"
      "prime-progression");
}

acor::Exec exec_of(int threads, u64 segment) {
  acor::Exec e;
  e.threads = threads;
  e.segment = segment;
  return e;
}

py::dict constant_dict(const acor::ConstantResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["cutoff"] = r.cutoff_prime;
  d["tail_bound"] = r.tail_bound;
  d["method"] = r.method == acor::Method::EULER_PRODUCT ? "euler-product"
                                                        : "dirichlet-series";
  return d;
}

acor::TermSpec terms_of(const std::vector<std::pair<std::string, i64>>& terms) {
  acor::TermSpec spec;
  for (const auto& [fn, shift] : terms)
    spec.factors.push_back({shift, cfn_of(fn)});
  return spec;
}

}  // namespace

PYBIND11_MODULE(_acor, m) {
  m.doc() = "arithmetic correlation workbench (C++ core)";

  m.def(
      "table",
      [](const std::string& fn, u64 lo, u64 hi, int threads, u64 segment) {
        const acor::Fn kind = fn_of(fn);
        const acor::FunctionTable t =
            acor::build_table(kind, {lo, hi}, exec_of(threads, segment));
        py::list out;
        for (u64 n = lo;; ++n) {
          if (kind == acor::Fn::MANGOLDT) {
            const acor::PrimePower& pp = t.power_at(n);
            out.append(py::make_tuple(pp.p, pp.k));
          } else {
            out.append(t.at(n));
          }
          if (n == hi) break;
        }
        return out;
      },
      py::arg("fn"), py::arg("lo"), py::arg("hi"), py::arg("threads") = 1,
      py::arg("segment") = u64{1} << 22,
      "Exact table over [lo, hi]; mangoldt rows are (p, k) pairs.");

  m.def(
      "primes_in",
      [](u64 lo, u64 hi) { return acor::primes_in({lo, hi}); }, py::arg("lo"),
      py::arg("hi"));

  m.def(
      "summatory",
      [](const std::string& kind, u64 x, int threads) -> py::object {
        acor::SumKind k;
        if (kind == "mertens") k = acor::SumKind::MU;
        else if (kind == "liouville") k = acor::SumKind::LAMBDA;
        else if (kind == "squarefree") k = acor::SumKind::MU_SQUARED;
        else if (kind == "primes") k = acor::SumKind::PRIME_COUNT;
        else if (kind == "psi") k = acor::SumKind::MANGOLDT_PSI;
        else
          throw std::invalid_argument(
              "kind must be mertens|liouville|squarefree|primes|psi");
        const acor::SummatoryResult r =
            acor::summatory(k, x, exec_of(threads, u64{1} << 22));
        if (r.is_integer) return py::int_(r.int_value);
        return py::float_(r.float_value);
      },
      py::arg("kind"), py::arg("x"), py::arg("threads") = 1);

  m.def("log_integral", &acor::log_integral, py::arg("x"));

  m.def(
      "naive_value",
      [](const std::string& fn, u64 n) -> py::object {
        const acor::Fn kind = fn_of(fn);
        if (kind == acor::Fn::MANGOLDT) {
          const acor::PrimePower pp = acor::naive_mangoldt(n);
          return py::make_tuple(pp.p, pp.k);
        }
        return py::int_(acor::naive_value(kind, n));
      },
      py::arg("fn"), py::arg("n"),
      "Trial-division oracle value; independent of the sieve.");

  m.def("s0", [](u64 cutoff) { return constant_dict(acor::s0(cutoff)); },
        py::arg("cutoff") = 10'000'000);
  m.def("s0_series",
        [](u64 limit) { return constant_dict(acor::s0_series(limit)); },
        py::arg("limit") = 1'000'000);
  m.def("zeta2_inverse",
        [] { return constant_dict(acor::zeta2_inverse()); });
  m.def(
      "varpi",
      [](u64 p, i64 q, const std::vector<i64>& shifts) {
        return acor::varpi(p, q, shifts).varpi;
      },
      py::arg("p"), py::arg("q"), py::arg("shifts"));
  m.def(
      "correlation_constant",
      [](i64 q, const std::vector<i64>& shifts, u64 cutoff) {
        return constant_dict(acor::correlation_constant(q, shifts, cutoff));
      },
      py::arg("q"), py::arg("shifts"), py::arg("cutoff") = 10'000'000);
  m.def(
      "derived_densities",
      [](u64 cutoff) {
        auto [s2, s3] = acor::derived_densities(cutoff);
        return py::make_tuple(constant_dict(s2), constant_dict(s3));
      },
      py::arg("cutoff") = 10'000'000);

  m.def(
      "correlate",
      [](const std::string& domain,
         const std::vector<std::pair<std::string, i64>>& terms, u64 x,
         const std::string& weight, u64 y, u64 q, u64 r, int threads,
         u64 segment) {
        acor::Weight w;
        if (weight == "unit") w = acor::Weight::UNIT;
        else if (weight == "mangoldt") w = acor::Weight::VON_MANGOLDT;
        else if (weight == "reciprocal") w = acor::Weight::RECIPROCAL;
        else
          throw std::invalid_argument(
              "weight must be unit|mangoldt|reciprocal");
        const acor::CorrelationResult res =
            acor::correlate(domain_of(domain, x, y, q, r), w, terms_of(terms),
                            exec_of(threads, segment));
        py::dict d;
        d["is_integer"] = res.is_integer;
        if (res.is_integer) {
          d["value"] = res.int_value;
        } else {
          d["value"] = res.float_value;
          d["err_bound"] = res.err_bound;
        }
        d["term_count"] = res.term_count;
        return d;
      },
      py::arg("domain"), py::arg("terms"), py::arg("x"),
      py::arg("weight") = "unit", py::arg("y") = 0, py::arg("q") = 0,
      py::arg("r") = 0, py::arg("threads") = 1,
      py::arg("segment") = u64{1} << 22);

  m.def(
      "log_average",
      [](const std::vector<std::pair<std::string, i64>>& terms, u64 x) {
        const acor::CorrelationResult res =
            acor::log_average(terms_of(terms), x);
        return py::make_tuple(res.float_value, res.err_bound);
      },
      py::arg("terms"), py::arg("x"));

  m.def(
      "hypothesis_sum",
      [](const std::string& fn, const std::vector<i64>& shifts, u64 x,
         double b) {
        const acor::HypothesisResult r =
            acor::hypothesis_sum(cfn_of(fn), shifts, x, b);
        py::dict d;
        d["value"] = r.value;
        d["q_max"] = r.q_max;
        d["prime_count"] = r.prime_count;
        return d;
      },
      py::arg("fn"), py::arg("shifts"), py::arg("x"), py::arg("b") = 0.0);

  m.def(
      "census",
      [](const std::string& fn, const std::vector<i64>& shifts,
         const std::string& domain, u64 x, u64 y, u64 q, u64 r, int threads) {
        const acor::PatternCensus c =
            acor::census(cfn_of(fn), shifts, domain_of(domain, x, y, q, r),
                         exec_of(threads, u64{1} << 22));
        py::dict counts;
        for (u64 idx = 0; idx < c.counts.size(); ++idx)
          counts[py::str(acor::PatternKey::decode(idx, c.k()).str())] =
              c.counts[idx];
        py::dict d;
        d["counts"] = counts;
        d["total"] = c.total;
        d["signed_combination"] = acor::signed_combination(c);
        return d;
      },
      py::arg("fn"), py::arg("shifts"), py::arg("domain"), py::arg("x"),
      py::arg("y") = 0, py::arg("q") = 0, py::arg("r") = 0,
      py::arg("threads") = 1);

  m.def(
      "identity_audit",
      [](const std::string& which, u64 x, i64 param) {
        acor::AuditKind k;
        if (which == "mu-eq-lambda-musq")
          k = acor::AuditKind::MU_EQ_LAMBDA_MUSQ;
        else if (which == "lambda-divisor-sum")
          k = acor::AuditKind::LAMBDA_DIVISOR_SUM;
        else if (which == "mu-partition")
          k = acor::AuditKind::MU_PARTITION;
        else if (which == "mu-double-decomp")
          k = acor::AuditKind::MU_DOUBLE_DECOMP;
        else if (which == "lambda-double-decomp")
          k = acor::AuditKind::LAMBDA_DOUBLE_DECOMP;
        else
          throw std::invalid_argument("unknown audit kind");
        const acor::AuditReport r = acor::identity_audit(k, x, param);
        py::dict d;
        d["which"] = acor::to_string(r.which);
        d["x"] = r.x;
        d["param"] = r.param;
        d["ok"] = r.ok;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
        d["offenders"] = r.offenders;
        return d;
      },
      py::arg("which"), py::arg("x"), py::arg("param") = 1);

  m.def(
      "weighted_census",
      [](i64 a, u64 x, int threads) {
        const acor::WeightedCensus w =
            acor::weighted_census(a, x, exec_of(threads, u64{1} << 22));
        return py::make_tuple(w.plus, w.minus, w.err_bound);
      },
      py::arg("a"), py::arg("x"), py::arg("threads") = 1);
}
