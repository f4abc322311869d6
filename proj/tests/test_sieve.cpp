// Tables, summatory functions, li, and the on-disk cache.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <vector>

#include "doctest.h"

#include "acor/core.hpp"
#include "acor/sieve.hpp"

using namespace acor;

namespace {

FunctionTable build(Fn fn, u64 lo, u64 hi, u64 segment = u64{1} << 22,
                    int threads = 1) {
  Exec e;
  e.threads = threads;
  e.segment = segment;
  return build_table(fn, {lo, hi}, e);
}

}  // namespace

TEST_CASE("mu values 1..10") {
  const FunctionTable t = build(Fn::MU, 1, 10);
  const i64 want[10] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
  for (u64 n = 1; n <= 10; ++n) CHECK(t.at(n) == want[n - 1]);
}

TEST_CASE("lambda values 8..12") {
  const FunctionTable t = build(Fn::LAMBDA, 8, 12);
  const i64 want[5] = {-1, 1, 1, -1, -1};
  for (u64 n = 8; n <= 12; ++n) CHECK(t.at(n) == want[n - 8]);
}

TEST_CASE("mu on an offset window at 1e7") {
  const u64 lo = 10'000'000;
  const FunctionTable t = build(Fn::MU, lo, lo + 10);
  const i64 want[11] = {0, 1, 1, 1, 0, -1, 1, 1, 0, 1, 1};
  for (u64 n = lo; n <= lo + 10; ++n) CHECK(t.at(n) == want[n - lo]);
}

TEST_CASE("mangoldt structural values") {
  const FunctionTable t = build(Fn::MANGOLDT, 1, 32);
  CHECK(t.power_at(1) == PrimePower{0, 0});
  CHECK(t.power_at(2) == PrimePower{2, 1});
  CHECK(t.power_at(6) == PrimePower{0, 0});
  CHECK(t.power_at(8) == PrimePower{2, 3});
  CHECK(t.power_at(9) == PrimePower{3, 2});
  CHECK(t.power_at(27) == PrimePower{3, 3});
  CHECK(t.power_at(31) == PrimePower{31, 1});
  CHECK(t.power_at(32) == PrimePower{2, 5});
}

TEST_CASE("big omega and primality agree") {
  const FunctionTable om = build(Fn::BIG_OMEGA, 1, 2'000);
  const FunctionTable pr = build(Fn::IS_PRIME, 1, 2'000);
  for (u64 n = 1; n <= 2'000; ++n)
    CHECK((om.at(n) == 1) == (pr.at(n) == 1));
  CHECK(om.at(1) == 0);
  CHECK(om.at(1024) == 10);   // 2^10
  CHECK(om.at(1536) == 10);   // 2^9 * 3
  CHECK(om.at(30) == 3);
}

TEST_CASE("tables are segmentation invariant") {
  const u64 lo = 999'000, hi = 1'001'000;
  const FunctionTable a = build(Fn::MU, lo, hi, u64{1} << 22);
  const FunctionTable b = build(Fn::MU, lo, hi, 137);
  const FunctionTable c = build(Fn::MU, lo, hi, 1024, 4);
  for (u64 n = lo; n <= hi; ++n) {
    CHECK(a.at(n) == b.at(n));
    CHECK(a.at(n) == c.at(n));
  }
}

TEST_CASE("prime count via two sieve configurations") {
  Exec small_segs;
  small_segs.segment = 4096;
  small_segs.threads = 3;
  const SummatoryResult a = summatory(SumKind::PRIME_COUNT, 1'000'000);
  const SummatoryResult b =
      summatory(SumKind::PRIME_COUNT, 1'000'000, small_segs);
  CHECK(a.int_value == 78498);
  CHECK(b.int_value == 78498);
}

TEST_CASE("summatory pins") {
  CHECK(summatory(SumKind::MU, 10).int_value == -1);
  CHECK(summatory(SumKind::LAMBDA, 10).int_value == 0);
  CHECK(summatory(SumKind::MU, 1'000).int_value == 2);
  CHECK(summatory(SumKind::LAMBDA, 1'000).int_value == -14);
  CHECK(summatory(SumKind::MU, 10'000).int_value == -23);
  CHECK(summatory(SumKind::LAMBDA, 10'000).int_value == -94);
  CHECK(summatory(SumKind::MU, 1'000'000).int_value == 212);
  CHECK(summatory(SumKind::LAMBDA, 1'000'000).int_value == -530);
  CHECK(summatory(SumKind::MU_SQUARED, 10'000).int_value == 6083);
  CHECK(summatory(SumKind::MU_SQUARED, 1'000'000).int_value == 607926);
  CHECK(summatory(SumKind::PRIME_COUNT, 10'000).int_value == 1229);
}

TEST_CASE("psi is a compensated floating sum") {
  const SummatoryResult a = summatory(SumKind::MANGOLDT_PSI, 10'000);
  CHECK(!a.is_integer);
  CHECK(a.float_value ==
        doctest::Approx(10013.39669326311478).epsilon(1e-12));
  const SummatoryResult b = summatory(SumKind::MANGOLDT_PSI, 1'000'000);
  CHECK(b.float_value ==
        doctest::Approx(999586.5974956329220).epsilon(1e-12));
}

TEST_CASE("psi identical across thread counts") {
  Exec one, four;
  one.threads = 1;
  four.threads = 4;
  one.segment = four.segment = 8192;
  const double a = summatory(SumKind::MANGOLDT_PSI, 200'000, one).float_value;
  const double b = summatory(SumKind::MANGOLDT_PSI, 200'000, four).float_value;
  CHECK(a == b);  // bit-identical by canonical merge order
}

TEST_CASE("primes_in offset window") {
  const std::vector<u64> ps = primes_in({10'000'000'000, 10'000'000'100});
  const std::vector<u64> want = {10'000'000'019ULL, 10'000'000'033ULL,
                                 10'000'000'061ULL, 10'000'000'069ULL,
                                 10'000'000'097ULL};
  CHECK(ps == want);
}

TEST_CASE("log integral pins") {
  CHECK(log_integral(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(log_integral(10.0) ==
        doctest::Approx(5.120435724669805153).epsilon(1e-14));
  CHECK(log_integral(1e6) ==
        doctest::Approx(78626.50399568206443).epsilon(1e-13));
  CHECK(log_integral(1e12) ==
        doctest::Approx(37607950279.75970171).epsilon(1e-12));
}

TEST_CASE("window validation") {
  CHECK_THROWS(build_table(Fn::MU, {0, 10}));
  CHECK_THROWS(build_table(Fn::MU, {10, 1}));
}

TEST_CASE("cache roundtrip and corruption") {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / "acor-cache-test";
  fs::remove_all(dir);

  Exec e;
  e.cache_dir = dir.string();

  const FunctionTable fresh = build_table(Fn::MU, {1, 50'000}, e);

  // A second build must hit the cache and agree exactly.
  const FunctionTable again = build_table(Fn::MU, {1, 50'000}, e);
  REQUIRE(fresh.size() == again.size());
  for (u64 n = 1; n <= 50'000; ++n) CHECK(fresh.at(n) == again.at(n));

  // Exactly one record was written.
  std::size_t files = 0;
  fs::path record;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    record = entry.path();
  }
  CHECK(files == 1);

  // Flip one payload byte: the record must be rejected and rebuilt cleanly.
  {
    std::fstream f(record, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(40);
    char c;
    f.seekg(40);
    f.get(c);
    c = static_cast<char>(c ^ 0x5a);
    f.seekp(40);
    f.put(c);
  }
  const FunctionTable rebuilt = build_table(Fn::MU, {1, 50'000}, e);
  for (u64 n = 1; n <= 50'000; ++n) CHECK(rebuilt.at(n) == fresh.at(n));

  // Truncated record: also rejected.
  fs::resize_file(record, 16);
  const FunctionTable rebuilt2 = build_table(Fn::MU, {1, 50'000}, e);
  CHECK(rebuilt2.at(30) == fresh.at(30));

  // Mangoldt tables roundtrip through their structural payload.
  const FunctionTable von1 = build_table(Fn::MANGOLDT, {1, 10'000}, e);
  const FunctionTable von2 = build_table(Fn::MANGOLDT, {1, 10'000}, e);
  for (u64 n = 1; n <= 10'000; ++n)
    CHECK(von1.power_at(n) == von2.power_at(n));

  fs::remove_all(dir);
}

TEST_CASE("cache honors the environment override") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "acor-cache-env-test";
  fs::remove_all(dir);
  setenv("ACOR_CACHE_DIR", dir.string().c_str(), 1);
  const FunctionTable t = build_table(Fn::LAMBDA, {1, 10'000});
  unsetenv("ACOR_CACHE_DIR");
  CHECK(fs::exists(dir));
  CHECK(t.at(2) == -1);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 1);
  fs::remove_all(dir);
}
