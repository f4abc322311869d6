// acor command-line front end.
//
// Serialized results go to standard output (JSON by default, CSV with
// --format csv); diagnostics go to standard error. Exit codes: 0 success,
// 1 check failure or resource-guard violation, 2 usage error.
//
// Output for a given command line is byte-identical regardless of
// --threads: all parallel reductions in the engines merge partial results
// in a canonical order, and timings are never written to standard output.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "acor/config.hpp"
#include "acor/constants.hpp"
#include "acor/core.hpp"
#include "acor/correlations.hpp"
#include "acor/patterns.hpp"
#include "acor/sieve.hpp"

namespace {

using acor::u64;
using acor::i64;
using nlohmann::json;

// ---- serialization helpers -------------------------------------------------

constexpr u64 kJsonIntMax = u64{1} << 53;  // beyond this, emit decimal strings

json json_u64(u64 v) {
  return v > kJsonIntMax ? json(std::to_string(v)) : json(v);
}

json json_i64(i64 v) {
  const u64 mag = v < 0 ? u64(-(v + 1)) + 1 : u64(v);
  return mag > kJsonIntMax ? json(std::to_string(v)) : json(v);
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

// ---- flag parsing ----------------------------------------------------------

acor::Fn parse_table_fn(const std::string& s) {
  if (s == "mu") return acor::Fn::MU;
  if (s == "lambda") return acor::Fn::LAMBDA;
  if (s == "omega") return acor::Fn::BIG_OMEGA;
  if (s == "mangoldt") return acor::Fn::MANGOLDT;
  if (s == "isprime") return acor::Fn::IS_PRIME;
  throw std::invalid_argument("unknown --fn '" + s +
                              "' (mu|lambda|omega|mangoldt|isprime)");
}

acor::SumKind parse_sum_kind(const std::string& s) {
  if (s == "mertens") return acor::SumKind::MU;
  if (s == "liouville") return acor::SumKind::LAMBDA;
  if (s == "squarefree") return acor::SumKind::MU_SQUARED;
  if (s == "primes") return acor::SumKind::PRIME_COUNT;
  if (s == "psi") return acor::SumKind::MANGOLDT_PSI;
  throw std::invalid_argument(
      "unknown --kind '" + s + "' (mertens|liouville|squarefree|primes|psi)");
}

acor::CFn parse_cfn(const std::string& s) {
  if (s == "mu") return acor::CFn::MU;
  if (s == "lambda") return acor::CFn::LAMBDA;
  if (s == "mu2") return acor::CFn::MU_SQUARED;
  throw std::invalid_argument("unknown function '" + s + "' (mu|lambda|mu2)");
}

std::string cfn_name(acor::CFn fn) {
  switch (fn) {
    case acor::CFn::MU: return "mu";
    case acor::CFn::LAMBDA: return "lambda";
    case acor::CFn::MU_SQUARED: return "mu2";
  }
  return "?";
}

acor::Weight parse_weight(const std::string& s) {
  if (s == "unit") return acor::Weight::UNIT;
  if (s == "mangoldt") return acor::Weight::VON_MANGOLDT;
  if (s == "reciprocal") return acor::Weight::RECIPROCAL;
  throw std::invalid_argument("unknown --weight '" + s +
                              "' (unit|mangoldt|reciprocal)");
}

acor::Domain parse_domain(const acor::ExperimentConfig& c) {
  const std::string& d = c.domain;
  if (d == "integers") return acor::Domain::integers(c.x);
  if (d == "shifted-primes" || d == "shifted")
    return acor::Domain::shifted_primes(c.x);
  if (d == "short" || d == "short-interval")
    return acor::Domain::short_interval(c.x, c.y);
  if (d == "progression" || d == "ap")
    return acor::Domain::progression(c.x, c.q, c.r);
  if (d == "prime-progression" || d == "pap")
    return acor::Domain::prime_progression(c.x, c.q, c.r);
  throw std::invalid_argument(
      "unknown --domain '" + d +
      "' (integers|shifted-primes|short|progression|prime-progression)");
}

std::string domain_str(const acor::Domain& d) {
  using K = acor::Domain::Kind;
  switch (d.kind) {
    case K::INTEGERS:
      return "integers(" + std::to_string(d.x) + ")";
    case K::SHIFTED_PRIMES:
      return "shifted-primes(" + std::to_string(d.x) + ")";
    case K::SHORT_INTERVAL:
      return "short[" + std::to_string(d.x) + ".." +
             std::to_string(d.x + d.y) + "]";
    case K::ARITH_PROGRESSION:
      return "progression(x=" + std::to_string(d.x) +
             ";q=" + std::to_string(d.q) + ";r=" + std::to_string(d.r) + ")";
    case K::PRIME_ARITH_PROGRESSION:
      return "prime-progression(x=" + std::to_string(d.x) +
             ";q=" + std::to_string(d.q) + ";r=" + std::to_string(d.r) + ")";
  }
  return "?";
}

json domain_json(const acor::Domain& d) {
  using K = acor::Domain::Kind;
  json j;
  switch (d.kind) {
    case K::INTEGERS: j["kind"] = "integers"; break;
    case K::SHIFTED_PRIMES: j["kind"] = "shifted-primes"; break;
    case K::SHORT_INTERVAL: j["kind"] = "short"; break;
    case K::ARITH_PROGRESSION: j["kind"] = "progression"; break;
    case K::PRIME_ARITH_PROGRESSION: j["kind"] = "prime-progression"; break;
  }
  j["x"] = json_u64(d.x);
  if (d.kind == K::SHORT_INTERVAL) j["y"] = json_u64(d.y);
  if (d.kind == K::ARITH_PROGRESSION ||
      d.kind == K::PRIME_ARITH_PROGRESSION) {
    j["q"] = json_u64(d.q);
    j["r"] = json_u64(d.r);
  }
  return j;
}

// "mu@0,mu@1" -> TermSpec; shifts may be negative ("lambda@-2").
acor::TermSpec parse_terms(const std::string& text) {
  acor::TermSpec spec;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("empty factor in --terms");
    const auto at = cur.find('@');
    if (at == std::string::npos)
      throw std::invalid_argument("factor '" + cur + "' needs fn@shift");
    acor::Factor f;
    f.fn = parse_cfn(cur.substr(0, at));
    f.shift = std::stoll(cur.substr(at + 1));
    spec.factors.push_back(f);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      cur += ch;
  }
  flush();
  return spec;
}

std::string terms_str(const acor::TermSpec& terms) {
  std::string out;
  for (const acor::Factor& f : terms.factors) {
    if (!out.empty()) out += ';';
    out += cfn_name(f.fn) + "@" + std::to_string(f.shift);
  }
  return out;
}

acor::Exec exec_of(const acor::ExperimentConfig& c) {
  acor::Exec e;
  e.threads = c.threads;
  e.segment = c.segment;
  e.cache_dir = c.cache_dir;
  return e;
}

void emit(const std::string& text) { std::cout << text << "\n"; }

// ---- subcommand bodies -----------------------------------------------------

int run_table(const acor::ExperimentConfig& c) {
  const acor::Fn fn = parse_table_fn(c.fn);
  const acor::Window w{c.lo, c.hi};
  acor::validate(w);
  if (w.width() > 10'000'000)
    throw std::runtime_error(
        "table output capped at 10^7 rows; narrow [--lo, --hi]");
  const acor::FunctionTable t = acor::build_table(fn, w, exec_of(c));

  if (c.format == "csv") {
    std::string out;
    if (fn == acor::Fn::MANGOLDT) {
      out += "n,p,k,log\n";
      for (u64 n = w.lo;; ++n) {
        const acor::PrimePower& pp = t.power_at(n);
        const double lg =
            pp.is_prime_power() ? std::log(static_cast<double>(pp.p)) : 0.0;
        out += std::to_string(n) + "," + std::to_string(pp.p) + "," +
               std::to_string(pp.k) + "," + fmt17(lg) + "\n";
        if (n == w.hi) break;
      }
    } else {
      out += "n,value\n";
      for (u64 n = w.lo;; ++n) {
        out += std::to_string(n) + "," + std::to_string(t.at(n)) + "\n";
        if (n == w.hi) break;
      }
    }
    std::cout << out;
    return 0;
  }

  json rows = json::array();
  for (u64 n = w.lo;; ++n) {
    if (fn == acor::Fn::MANGOLDT) {
      const acor::PrimePower& pp = t.power_at(n);
      json r;
      r["n"] = json_u64(n);
      r["p"] = json_u64(pp.p);
      r["k"] = pp.k;
      r["log"] = pp.is_prime_power() ? std::log(static_cast<double>(pp.p))
                                     : 0.0;
      rows.push_back(r);
    } else {
      json r;
      r["n"] = json_u64(n);
      r["value"] = t.at(n);
      rows.push_back(r);
    }
    if (n == w.hi) break;
  }
  json j;
  j["fn"] = c.fn;
  j["lo"] = json_u64(w.lo);
  j["hi"] = json_u64(w.hi);
  j["rows"] = rows;
  emit(j.dump(2));
  return 0;
}

int run_sum(const acor::ExperimentConfig& c) {
  const acor::SumKind kind = parse_sum_kind(c.fn);
  const acor::SummatoryResult r = acor::summatory(kind, c.x, exec_of(c));
  if (c.format == "csv") {
    std::cout << "kind,x,value\n"
              << c.fn << "," << c.x << ","
              << (r.is_integer ? std::to_string(r.int_value)
                               : fmt17(r.float_value))
              << "\n";
    return 0;
  }
  json j;
  j["kind"] = c.fn;
  j["x"] = json_u64(c.x);
  if (r.is_integer)
    j["value"] = json_i64(r.int_value);
  else
    j["value"] = r.float_value;
  emit(j.dump(2));
  return 0;
}

int run_correlate(const acor::ExperimentConfig& c) {
  const acor::Domain d = parse_domain(c);
  const acor::TermSpec terms = parse_terms(c.terms);
  const acor::Weight w = parse_weight(c.weight);
  const acor::CorrelationResult r = acor::correlate(d, w, terms, exec_of(c));

  if (c.format == "csv") {
    std::cout << "domain,weight,terms,value,err_bound,term_count\n"
              << domain_str(d) << "," << c.weight << "," << terms_str(terms)
              << ","
              << (r.is_integer ? std::to_string(r.int_value)
                               : fmt17(r.float_value))
              << "," << fmt17(r.err_bound) << "," << r.term_count << "\n";
    return 0;
  }
  json j;
  j["domain"] = domain_json(d);
  j["weight"] = c.weight;
  json jt = json::array();
  for (const acor::Factor& f : terms.factors) {
    json one;
    one["fn"] = cfn_name(f.fn);
    one["shift"] = json_i64(f.shift);
    jt.push_back(one);
  }
  j["terms"] = jt;
  if (r.is_integer) {
    j["value"] = json_i64(r.int_value);
  } else {
    j["value"] = r.float_value;
    j["err_bound"] = r.err_bound;
  }
  j["term_count"] = json_u64(r.term_count);
  emit(j.dump(2));
  return 0;
}

int run_census(const acor::ExperimentConfig& c) {
  const acor::Domain d = parse_domain(c);
  const acor::CFn fn = parse_cfn(c.fn);
  const acor::PatternCensus cen = acor::census(fn, c.shifts, d, exec_of(c));
  const u64 cutoff = c.cutoff ? c.cutoff : 1'000'000;
  const std::vector<acor::CellDensity> cells = acor::densities(cen, cutoff);

  if (c.format == "csv") {
    std::string out = "key,count,empirical,predicted,source\n";
    for (const acor::CellDensity& cell : cells) {
      out += cell.key.str() + "," + std::to_string(cell.count) + "," +
             fmt17(cell.empirical) + ",";
      if (cell.predicted) out += fmt17(*cell.predicted);
      out += "," + cell.source + "\n";
    }
    std::cout << out;
    return 0;
  }

  json j;
  j["fn"] = c.fn;
  j["shifts"] = c.shifts;
  j["domain"] = domain_json(d);
  j["total"] = json_u64(cen.total);
  json jc = json::array();
  for (const acor::CellDensity& cell : cells) {
    json one;
    one["key"] = cell.key.str();
    one["count"] = json_u64(cell.count);
    one["empirical"] = cell.empirical;
    if (cell.predicted)
      one["predicted"] = *cell.predicted;
    else
      one["predicted"] = nullptr;
    one["source"] = cell.source;
    jc.push_back(one);
  }
  j["cells"] = jc;
  j["signed_combination"] = json_i64(acor::signed_combination(cen));
  if (fn == acor::CFn::LAMBDA && cen.k() == 2) {
    const auto [qp, qm] = acor::joined_counts(cen);
    j["joined_plus"] = json_u64(qp);
    j["joined_minus"] = json_u64(qm);
  }
  emit(j.dump(2));
  return 0;
}

struct NamedConstant {
  acor::ConstantResult result;
  std::string reference;  // previously published digits, when one exists
};

NamedConstant named_constant(const acor::ExperimentConfig& c) {
  const std::string& name = c.name;
  if (name == "s0")
    return {acor::s0(c.cutoff ? c.cutoff : 10'000'000),
            "0.373955838964330040631201"};
  if (name == "s0-series")
    return {acor::s0_series(c.cutoff ? c.cutoff : 1'000'000), ""};
  if (name == "zeta2inv")
    return {acor::zeta2_inverse(), "0.607988295164627617135754"};
  if (name == "s1")
    return {acor::correlation_constant(1, {0, 1}, c.cutoff ? c.cutoff
                                                           : 100'000),
            "0.32263461660543396347"};
  if (name == "pair") {
    if (c.shifts.empty())
      throw std::invalid_argument("constants --name pair needs --shifts");
    return {acor::correlation_constant(c.mod_q, c.shifts,
                                       c.cutoff ? c.cutoff : 10'000'000),
            ""};
  }
  if (name == "s2" || name == "s3") {
    auto [s2, s3] = acor::derived_densities(c.cutoff ? c.cutoff : 10'000'000);
    if (name == "s2") return {s2, "0.106780412897381"};
    return {s3, "0.142646242624296"};
  }
  throw std::invalid_argument(
      "unknown --name '" + name +
      "' (s0|s0-series|zeta2inv|s1|pair|s2|s3)");
}

int run_constants(const acor::ExperimentConfig& c) {
  const NamedConstant nc = named_constant(c);
  const char* method = nc.result.method == acor::Method::EULER_PRODUCT
                           ? "euler-product"
                           : "dirichlet-series";
  if (c.format == "csv") {
    std::cout << "name,value,cutoff,tail_bound,method,reference\n"
              << c.name << "," << fmt17(nc.result.value) << ","
              << nc.result.cutoff_prime << "," << fmt17(nc.result.tail_bound)
              << "," << method << "," << nc.reference << "\n";
    return 0;
  }
  json j;
  j["name"] = c.name;
  j["value"] = nc.result.value;
  j["cutoff"] = json_u64(nc.result.cutoff_prime);
  j["tail_bound"] = nc.result.tail_bound;
  j["method"] = method;
  if (!nc.reference.empty()) j["reference"] = nc.reference;
  emit(j.dump(2));
  return 0;
}

int run_hypothesis(const acor::ExperimentConfig& c) {
  const acor::CFn fn = parse_cfn(c.fn);
  const acor::HypothesisResult r =
      acor::hypothesis_sum(fn, c.shifts, c.x, c.hypothesis_b, exec_of(c));
  const double cap =
      static_cast<double>(r.q_max) * static_cast<double>(r.prime_count);
  if (c.format == "csv") {
    std::cout << "fn,x,b,value,q_max,prime_count,cap\n"
              << c.fn << "," << c.x << "," << fmt17(c.hypothesis_b) << ","
              << fmt17(r.value) << "," << r.q_max << "," << r.prime_count
              << "," << fmt17(cap) << "\n";
    return 0;
  }
  json j;
  j["fn"] = c.fn;
  j["shifts"] = c.shifts;
  j["x"] = json_u64(c.x);
  j["b"] = c.hypothesis_b;
  j["value"] = r.value;
  j["q_max"] = json_u64(r.q_max);
  j["prime_count"] = json_u64(r.prime_count);
  j["cap"] = cap;
  emit(j.dump(2));
  return 0;
}

acor::AuditKind parse_audit(const std::string& s) {
  for (acor::AuditKind k :
       {acor::AuditKind::MU_EQ_LAMBDA_MUSQ, acor::AuditKind::LAMBDA_DIVISOR_SUM,
        acor::AuditKind::MU_PARTITION, acor::AuditKind::MU_DOUBLE_DECOMP,
        acor::AuditKind::LAMBDA_DOUBLE_DECOMP})
    if (acor::to_string(k) == s) return k;
  throw std::invalid_argument(
      "unknown --which '" + s +
      "' (mu-eq-lambda-musq|lambda-divisor-sum|mu-partition|"
      "mu-double-decomp|lambda-double-decomp)");
}

int run_audit(const acor::ExperimentConfig& c) {
  const acor::AuditReport r =
      acor::identity_audit(parse_audit(c.which), c.x, c.param, exec_of(c));
  if (c.format == "csv") {
    std::cout << "which,x,param,ok,lhs,rhs\n"
              << acor::to_string(r.which) << "," << r.x << "," << r.param
              << "," << (r.ok ? "true" : "false") << "," << r.lhs << ","
              << r.rhs << "\n";
  } else {
    json j;
    j["which"] = acor::to_string(r.which);
    j["x"] = json_u64(r.x);
    j["param"] = json_i64(r.param);
    j["ok"] = r.ok;
    j["lhs"] = json_i64(r.lhs);
    j["rhs"] = json_i64(r.rhs);
    j["offenders"] = r.offenders;
    emit(j.dump(2));
  }
  return r.ok ? 0 : 1;
}

// ---- repro: the pinned example suite ---------------------------------------

struct Check {
  std::string name;
  std::string reference;  // where the expected value comes from; display only
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::string census_line(const acor::PatternCensus& c) {
  auto cell = [&](int a, int b) {
    acor::PatternKey k;
    k.symbols = {static_cast<std::int8_t>(a), static_cast<std::int8_t>(b)};
    return c.count_of(k);
  };
  return std::to_string(cell(1, 1)) + "," + std::to_string(cell(1, -1)) +
         "," + std::to_string(cell(-1, 1)) + "," + std::to_string(cell(-1, -1)) +
         "|" + std::to_string(c.total);
}

std::vector<Check> repro_checks(const acor::Exec& exec) {
  std::vector<Check> checks;
  const acor::TermSpec mu01{{{0, acor::CFn::MU}, {1, acor::CFn::MU}}};
  const acor::TermSpec la01{{{0, acor::CFn::LAMBDA}, {1, acor::CFn::LAMBDA}}};

  {
    Check c{"mu-pair-integers-1e4", "published example", "12", "", false};
    const i64 v = acor::correlate(acor::Domain::integers(10'000),
                                  acor::Weight::UNIT, mu01, exec)
                      .int_value;
    c.computed = std::to_string(v);
    c.pass = (v == 12);
    checks.push_back(c);
  }
  {
    Check c{"lambda-pair-integers-1e4", "published example", "112", "", false};
    const i64 v = acor::correlate(acor::Domain::integers(10'000),
                                  acor::Weight::UNIT, la01, exec)
                      .int_value;
    c.computed = std::to_string(v);
    c.pass = (v == 112);
    checks.push_back(c);
  }
  {
    Check c{"lambda-census-integers-1e4", "published example",
            "2481,2472,2472,2575|10000", "", false};
    const acor::PatternCensus cen = acor::census(
        acor::CFn::LAMBDA, {0, 1}, acor::Domain::integers(10'000), exec);
    c.computed = census_line(cen);
    c.pass = (c.computed == c.expected);
    checks.push_back(c);
  }
  {
    Check c{"lambda-pair-short-1e7", "published example", "27", "", false};
    const i64 v =
        acor::correlate(acor::Domain::short_interval(10'000'000, 1'000),
                        acor::Weight::UNIT, la01, exec)
            .int_value;
    c.computed = std::to_string(v);
    c.pass = (v == 27);
    checks.push_back(c);
  }
  {
    Check c{"lambda-census-short-1e7", "published example",
            "275,244,243,239|1001", "", false};
    const acor::PatternCensus cen =
        acor::census(acor::CFn::LAMBDA, {0, 1},
                     acor::Domain::short_interval(10'000'000, 1'000), exec);
    c.computed = census_line(cen);
    c.pass = (c.computed == c.expected);
    checks.push_back(c);
  }
  {
    // The published digit string for this constant disagrees with its own
    // defining product past the fifth digit; the recomputed digits are the
    // reference here (see README).
    Check c{"zeta2-inverse", "recomputed closed form",
            "0.607927101854026628663277 within 1e-15", "", false};
    const double v = acor::zeta2_inverse().value;
    c.computed = fmt_sig(v, 21);
    c.pass = std::fabs(v - 0.607927101854026628663277) <= 1e-15;
    checks.push_back(c);
  }
  {
    Check c{"pair-constant-cutoff-1e5", "published digits",
            "0.32263461660543396347 within 1e-12", "", false};
    const double v = acor::correlation_constant(1, {0, 1}, 100'000).value;
    c.computed = fmt_sig(v, 21);
    c.pass = std::fabs(v - 0.32263461660543396347) <= 1e-12;
    checks.push_back(c);
  }
  {
    Check c{"s0-product-vs-series", "recomputed, published to 7 digits",
            "0.3739558", "", false};
    const acor::ConstantResult prod = acor::s0(10'000'000);
    const acor::ConstantResult ser = acor::s0_series(1'000'000);
    const double gap = std::fabs(prod.value - ser.value);
    const std::string p7 = fmt_sig(prod.value, 7);
    const std::string s7 = fmt_sig(ser.value, 7);
    c.computed = p7 + "|" + s7 + "|gap=" + fmt_sig(gap, 3);
    c.pass = (gap <= prod.tail_bound + ser.tail_bound) &&
             p7 == "0.3739558" && s7 == "0.3739558";
    checks.push_back(c);
  }
  return checks;
}

int run_repro(const acor::ExperimentConfig& c) {
  const std::vector<Check> checks = repro_checks(exec_of(c));
  bool all = true;
  for (const Check& ch : checks) all = all && ch.pass;

  if (c.format == "csv") {
    std::string out = "name,reference,expected,computed,pass\n";
    for (const Check& ch : checks)
      out += ch.name + "," + ch.reference + "," + ch.expected + "," +
             ch.computed + "," + (ch.pass ? "true" : "false") + "\n";
    std::cout << out;
  } else {
    json j;
    json arr = json::array();
    for (const Check& ch : checks) {
      json one;
      one["name"] = ch.name;
      one["reference"] = ch.reference;
      one["expected"] = ch.expected;
      one["computed"] = ch.computed;
      one["pass"] = ch.pass;
      arr.push_back(one);
    }
    j["checks"] = arr;
    j["pass"] = all;
    emit(j.dump(2));
  }
  for (const Check& ch : checks)
    if (!ch.pass)
      std::cerr << "repro check failed: " << ch.name << " expected "
                << ch.expected << " got " << ch.computed << "\n";
  return all ? 0 : 1;
}

int run_bench(const acor::ExperimentConfig& c) {
  const acor::Exec exec = exec_of(c);
  struct Entry {
    std::string name;
    std::string value;
  };
  std::vector<Entry> entries;

  auto timed = [&](const std::string& name, auto&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string value = body();
    const auto t1 = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::fprintf(stderr, "%-24s %10.2f ms\n", name.c_str(), ms);
    entries.push_back({name, value});
  };

  timed("mu-table-1e6", [&] {
    const acor::FunctionTable t =
        acor::build_table(acor::Fn::MU, {1, 1'000'000}, exec);
    i64 m = 0;
    for (u64 n = 1; n <= 1'000'000; ++n) m += t.at(n);
    return std::to_string(m);
  });
  timed("lambda-pair-1e6", [&] {
    const acor::TermSpec la01{{{0, acor::CFn::LAMBDA}, {1, acor::CFn::LAMBDA}}};
    return std::to_string(acor::correlate(acor::Domain::integers(1'000'000),
                                          acor::Weight::UNIT, la01, exec)
                              .int_value);
  });
  timed("mu-census-1e6", [&] {
    const acor::PatternCensus cen = acor::census(
        acor::CFn::MU, {0, 1}, acor::Domain::integers(1'000'000), exec);
    return std::to_string(acor::signed_combination(cen));
  });
  timed("s0-cutoff-1e6", [&] { return fmt17(acor::s0(1'000'000).value); });

  if (c.format == "csv") {
    std::string out = "name,value\n";
    for (const Entry& e : entries) out += e.name + "," + e.value + "\n";
    std::cout << out;
  } else {
    json arr = json::array();
    for (const Entry& e : entries) {
      json one;
      one["name"] = e.name;
      one["value"] = e.value;
      arr.push_back(one);
    }
    json j;
    j["benchmarks"] = arr;
    emit(j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic correlation workbench"};
  app.require_subcommand(1);

  acor::ExperimentConfig cfg;
  bool dump_config = false;
  std::string cache_dir_flag;

  app.add_option("--threads", cfg.threads, "worker threads (default 1)");
  app.add_option("--segment", cfg.segment, "sieve segment length");
  app.add_option("--cache-dir", cache_dir_flag,
                 "table cache directory (also: ACOR_CACHE_DIR)");
  app.add_option("--format", cfg.format, "output format: json|csv");
  app.add_flag("--dump-config", dump_config,
               "print the parsed configuration as JSON and exit");

  CLI::App* t = app.add_subcommand("table", "arithmetic function table");
  t->add_option("--fn", cfg.fn, "mu|lambda|omega|mangoldt|isprime")
      ->required();
  t->add_option("--lo", cfg.lo, "window start (inclusive)")->required();
  t->add_option("--hi", cfg.hi, "window end (inclusive)")->required();

  CLI::App* s = app.add_subcommand("sum", "summatory function value");
  s->add_option("--kind", cfg.fn, "mertens|liouville|squarefree|primes|psi")
      ->required();
  s->add_option("--x", cfg.x, "upper limit")->required();

  auto add_domain_flags = [&cfg](CLI::App* cmd) {
    cmd->add_option("--domain", cfg.domain,
                    "integers|shifted-primes|short|progression|"
                    "prime-progression");
    cmd->add_option("--x", cfg.x, "domain size / interval start")->required();
    cmd->add_option("--y", cfg.y, "short-interval length");
    cmd->add_option("--q", cfg.q, "progression modulus");
    cmd->add_option("--r", cfg.r, "progression residue");
  };

  CLI::App* co = app.add_subcommand("correlate", "correlation sum");
  add_domain_flags(co);
  co->add_option("--terms", cfg.terms, "factors, e.g. mu@0,mu@1")->required();
  co->add_option("--weight", cfg.weight, "unit|mangoldt|reciprocal");

  CLI::App* ce = app.add_subcommand("census", "sign-pattern census");
  add_domain_flags(ce);
  ce->add_option("--fn", cfg.fn, "mu|lambda")->required();
  ce->add_option("--shifts", cfg.shifts, "shift tuple, e.g. 0,1")
      ->required()
      ->delimiter(',');
  ce->add_option("--cutoff", cfg.cutoff,
                 "prime cutoff for predicted densities");

  CLI::App* cn = app.add_subcommand("constants", "reference constants");
  cn->add_option("--name", cfg.name, "s0|s0-series|zeta2inv|s1|pair|s2|s3")
      ->required();
  cn->add_option("--cutoff", cfg.cutoff, "prime cutoff / series limit");
  cn->add_option("--q", cfg.mod_q, "pair-constant modulus");
  cn->add_option("--shifts", cfg.shifts, "pair-constant shifts")
      ->delimiter(',');

  CLI::App* hy = app.add_subcommand("hypothesis", "maximal progression sum");
  hy->add_option("--fn", cfg.fn, "mu|lambda")->required();
  hy->add_option("--shifts", cfg.shifts, "one or two shifts")
      ->required()
      ->delimiter(',');
  hy->add_option("--x", cfg.x, "prime limit")->required();
  hy->add_option("--b", cfg.hypothesis_b, "log-power B in q <= sqrt(x)/log^B x");

  CLI::App* au = app.add_subcommand("audit", "exact identity audit");
  au->add_option("--which", cfg.which,
                 "mu-eq-lambda-musq|lambda-divisor-sum|mu-partition|"
                 "mu-double-decomp|lambda-double-decomp")
      ->required();
  au->add_option("--x", cfg.x, "audit range")->required();
  au->add_option("--param", cfg.param, "shift a / offset t (default 1)");

  CLI::App* re = app.add_subcommand("repro", "pinned example suite");
  CLI::App* be = app.add_subcommand("bench", "timing snapshot");

  // Let global flags (--threads, --format, ...) appear after the subcommand.
  for (CLI::App* sub : {t, s, co, ce, cn, hy, au, re, be}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!cache_dir_flag.empty()) cfg.cache_dir = cache_dir_flag;
  if (cfg.format != "json" && cfg.format != "csv") {
    std::cerr << "error: --format must be json or csv\n";
    return 2;
  }
  if (cfg.threads < 1 || cfg.threads > 256) {
    std::cerr << "error: --threads out of range\n";
    return 2;
  }

  try {
    if (t->parsed()) cfg.subcommand = "table";
    if (s->parsed()) cfg.subcommand = "sum";
    if (co->parsed()) cfg.subcommand = "correlate";
    if (ce->parsed()) cfg.subcommand = "census";
    if (cn->parsed()) cfg.subcommand = "constants";
    if (hy->parsed()) cfg.subcommand = "hypothesis";
    if (au->parsed()) cfg.subcommand = "audit";
    if (re->parsed()) cfg.subcommand = "repro";
    if (be->parsed()) cfg.subcommand = "bench";

    if (dump_config) {
      emit(acor::to_json_string(cfg));
      return 0;
    }

    if (cfg.subcommand == "table") return run_table(cfg);
    if (cfg.subcommand == "sum") return run_sum(cfg);
    if (cfg.subcommand == "correlate") return run_correlate(cfg);
    if (cfg.subcommand == "census") return run_census(cfg);
    if (cfg.subcommand == "constants") return run_constants(cfg);
    if (cfg.subcommand == "hypothesis") return run_hypothesis(cfg);
    if (cfg.subcommand == "audit") return run_audit(cfg);
    if (cfg.subcommand == "repro") return run_repro(cfg);
    if (cfg.subcommand == "bench") return run_bench(cfg);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
