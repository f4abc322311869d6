// Sign-pattern censuses, signed combinations, joined counts, densities with
// predictions, and Lambda-weighted single-sign sums.

#include <cmath>
#include <map>
#include <string>

#include "doctest.h"

#include "acor/constants.hpp"
#include "acor/core.hpp"
#include "acor/correlations.hpp"
#include "acor/patterns.hpp"

using namespace acor;

namespace {

u64 cell(const PatternCensus& c, std::initializer_list<int> symbols) {
  PatternKey k;
  for (int s : symbols) k.symbols.push_back(static_cast<std::int8_t>(s));
  return c.count_of(k);
}

}  // namespace

TEST_CASE("pattern keys round-trip") {
  for (int k = 1; k <= 4; ++k) {
    u64 cells = 1;
    for (int i = 0; i < k; ++i) cells *= 3;
    for (u64 idx = 0; idx < cells; ++idx) {
      const PatternKey key = PatternKey::decode(idx, k);
      CHECK(key.encode() == idx);
      CHECK(key.str().size() == static_cast<std::size_t>(k));
    }
  }
  PatternKey key;
  key.symbols = {1, -1, 0};
  CHECK(key.str() == "+-0");
}

TEST_CASE("mu double census at 1e4") {
  const PatternCensus c =
      census(CFn::MU, {0, 1}, Domain::integers(10'000));
  CHECK(cell(c, {1, 1}) == 807);
  CHECK(cell(c, {1, -1}) == 788);
  CHECK(cell(c, {1, 0}) == 1435);
  CHECK(cell(c, {-1, 1}) == 821);
  CHECK(cell(c, {-1, -1}) == 814);
  CHECK(cell(c, {-1, 0}) == 1418);
  CHECK(cell(c, {0, 1}) == 1402);
  CHECK(cell(c, {0, -1}) == 1451);
  CHECK(cell(c, {0, 0}) == 1064);
  CHECK(c.total == 10'000);
  CHECK(signed_combination(c) == 12);
}

TEST_CASE("lambda double census at 1e4 and joined counts") {
  const PatternCensus c =
      census(CFn::LAMBDA, {0, 1}, Domain::integers(10'000));
  CHECK(cell(c, {1, 1}) == 2481);
  CHECK(cell(c, {1, -1}) == 2472);
  CHECK(cell(c, {-1, 1}) == 2472);
  CHECK(cell(c, {-1, -1}) == 2575);
  CHECK(cell(c, {0, 0}) == 0);
  CHECK(cell(c, {1, 0}) == 0);
  CHECK(c.total == 10'000);
  CHECK(signed_combination(c) == 112);
  const auto [plus, minus] = joined_counts(c);
  CHECK(plus == 5056);
  CHECK(minus == 4944);
}

TEST_CASE("lambda census over the short interval") {
  const PatternCensus c =
      census(CFn::LAMBDA, {0, 1}, Domain::short_interval(10'000'000, 1'000));
  CHECK(cell(c, {1, 1}) == 275);
  CHECK(cell(c, {1, -1}) == 244);
  CHECK(cell(c, {-1, 1}) == 243);
  CHECK(cell(c, {-1, -1}) == 239);
  CHECK(c.total == 1'001);
  CHECK(signed_combination(c) == 27);
}

TEST_CASE("single lambda census over a tiny interval") {
  const PatternCensus c =
      census(CFn::LAMBDA, {0}, Domain::short_interval(1, 9));
  CHECK(cell(c, {1}) == 5);
  CHECK(cell(c, {-1}) == 5);
  CHECK(c.total == 10);
}

TEST_CASE("shifted-prime censuses for shifts (1,3)") {
  const Domain d = Domain::shifted_primes(10'000);
  const PatternCensus mu = census(CFn::MU, {1, 3}, d);
  CHECK(cell(mu, {1, 0}) == 223);
  CHECK(cell(mu, {-1, -1}) == 1);  // only p = 2 avoids the multiple of 4
  CHECK(cell(mu, {-1, 0}) == 238);
  CHECK(cell(mu, {0, 1}) == 295);
  CHECK(cell(mu, {0, -1}) == 264);
  CHECK(cell(mu, {0, 0}) == 208);
  CHECK(cell(mu, {1, 1}) == 0);
  CHECK(cell(mu, {1, -1}) == 0);
  CHECK(cell(mu, {-1, 1}) == 0);
  CHECK(mu.total == 1229);

  const PatternCensus la = census(CFn::LAMBDA, {1, 3}, d);
  CHECK(cell(la, {1, 1}) == 304);
  CHECK(cell(la, {1, -1}) == 277);
  CHECK(cell(la, {-1, 1}) == 322);
  CHECK(cell(la, {-1, -1}) == 326);
  CHECK(la.total == 1229);
}

TEST_CASE("census equals correlate through the signed combination") {
  const std::vector<i64> shifts{0, 2, 5};
  const Domain d = Domain::integers(50'000);
  const PatternCensus c = census(CFn::LAMBDA, shifts, d);
  TermSpec terms;
  for (i64 a : shifts) terms.factors.push_back({a, CFn::LAMBDA});
  CHECK(signed_combination(c) ==
        correlate(d, Weight::UNIT, terms, {}).int_value);
}

TEST_CASE("densities carry predictions for integer-domain censuses") {
  const PatternCensus c =
      census(CFn::MU, {0, 1}, Domain::integers(1'000'000));
  const std::vector<CellDensity> cells = densities(c, 1'000'000);
  REQUIRE(cells.size() == 9);

  std::map<std::string, CellDensity> by_key;
  for (const CellDensity& cd : cells) by_key[cd.key.str()] = cd;

  CHECK(by_key["++"].source == "pair_constant/4");
  CHECK(by_key["00"].source == "1-2*zeta2_inverse+pair_constant");
  CHECK(by_key["+0"].source == "(zeta2_inverse-pair_constant)/2");

  // Empirical pins at 1e6 and agreement bands.
  CHECK(by_key["00"].empirical == doctest::Approx(0.106767).epsilon(1e-4));
  REQUIRE(by_key["00"].predicted.has_value());
  CHECK(std::fabs(by_key["00"].empirical - *by_key["00"].predicted) <
        1.5e-2);
  for (const std::string& key : {"+0", "0+", "-0", "0-"}) {
    REQUIRE(by_key[key].predicted.has_value());
    CHECK(std::fabs(by_key[key].empirical - *by_key[key].predicted) < 1e-2);
  }
  double sf = 0.0;  // squarefree pair density check
  for (const std::string& key : {"++", "+-", "-+", "--"}) sf +=
      by_key[key].empirical;
  CHECK(std::fabs(sf - 0.32263410272055276229) < 1.5e-2);
}

TEST_CASE("lambda density predictions") {
  const PatternCensus c =
      census(CFn::LAMBDA, {0, 1}, Domain::integers(1'000'000));
  for (const CellDensity& cd : densities(c)) {
    int zeros = 0;
    for (auto s : cd.key.symbols) zeros += (s == 0);
    REQUIRE(cd.predicted.has_value());
    if (zeros > 0) {
      CHECK(*cd.predicted == 0.0);
      CHECK(cd.count == 0);
    } else {
      CHECK(*cd.predicted == 0.25);
      CHECK(std::fabs(cd.empirical - 0.25) < 1e-2);
    }
  }
}

TEST_CASE("mu single-sign densities against half the squarefree density") {
  const PatternCensus c = census(CFn::MU, {0}, Domain::integers(1'000'000));
  const std::vector<CellDensity> cells = densities(c);
  for (const CellDensity& cd : cells) {
    REQUIRE(cd.predicted.has_value());
    if (cd.key.symbols[0] == 0) {
      CHECK(*cd.predicted == doctest::Approx(1.0 - 0.6079271018540266));
    } else {
      CHECK(*cd.predicted == doctest::Approx(0.3039635509270133));
      CHECK(std::fabs(cd.empirical - *cd.predicted) < 2e-3);
    }
  }
}

TEST_CASE("census validation") {
  CHECK_THROWS(census(CFn::MU_SQUARED, {0}, Domain::integers(100)));
  CHECK_THROWS(census(CFn::MU, {}, Domain::integers(100)));
  CHECK_THROWS(census(CFn::MU, {0, 0}, Domain::integers(100)));
  CHECK_THROWS(census(CFn::MU, {0, 1, 2, 3, 4}, Domain::integers(100)));
  CHECK_THROWS(joined_counts(census(CFn::MU, {0, 1}, Domain::integers(100))));
  CHECK_THROWS(joined_counts(census(CFn::LAMBDA, {0}, Domain::integers(100))));
}

TEST_CASE("weighted census pins") {
  const WeightedCensus w4 = weighted_census(1, 10'000);
  CHECK(w4.plus == doctest::Approx(1856.162942598926722).epsilon(1e-9));
  CHECK(w4.minus == doctest::Approx(1967.518016640128444).epsilon(1e-9));
  CHECK(w4.plus + w4.minus ==
        doctest::Approx(3823.680959239055166).epsilon(1e-9));
  CHECK(w4.err_bound < 1e-9);

  const WeightedCensus w6 = weighted_census(1, 1'000'000);
  CHECK(w6.plus == doctest::Approx(186533.9174220989280).epsilon(1e-9));
  CHECK(w6.minus == doctest::Approx(186952.8996054732262).epsilon(1e-9));
  // Each within 3% of (s0 / 2) * 1e6.
  const double half = 0.373955815810604608 / 2.0 * 1e6;
  CHECK(std::fabs(w6.plus - half) / half < 0.03);
  CHECK(std::fabs(w6.minus - half) / half < 0.03);
}

TEST_CASE("weighted census is thread-count invariant") {
  Exec one, four;
  one.threads = 1;
  four.threads = 4;
  one.segment = four.segment = 8192;
  const WeightedCensus a = weighted_census(1, 50'000, one);
  const WeightedCensus b = weighted_census(1, 50'000, four);
  CHECK(a.plus == b.plus);
  CHECK(a.minus == b.minus);
}
