#include "doctest.h"

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "robin/arith.hpp"
#include "robin/criteria.hpp"
#include "robin/enumerate.hpp"
#include "robin/scan.hpp"
#include "support.hpp"

using namespace robin;

namespace {

using Values = std::vector<std::uint64_t>;

Factorization fz(std::uint64_t n) { return factorize(n, testing::table()); }

template <class Pred>
Values brute(std::uint64_t xmax, Pred pred) {
  Values out;
  for (std::uint64_t n = 1; n <= xmax; ++n)
    if (pred(n)) out.push_back(n);
  return out;
}

ScanReport scan(std::string_view cls, CriterionId id, std::uint64_t xmax, unsigned workers = 1,
                std::uint64_t chunk = 1u << 16) {
  ScanOptions opt;
  opt.workers = workers;
  opt.chunk_size = chunk;
  return scan_violators(parse_scan_class(cls), id, xmax, testing::table(), opt);
}

}  // namespace

TEST_SUITE("enumerate") {
  TEST_CASE("Hardy-Ramanujan examples") {
    CHECK(hr_enumerate(12) == Values{1, 2, 4, 6, 8, 12});
    CHECK(hr_enumerate(100) == Values{1, 2, 4, 6, 8, 12, 16, 24, 30, 32, 36, 48, 60, 64, 72, 96});
    CHECK(hr_enumerate(1) == Values{1});
  }

  TEST_CASE("Hardy-Ramanujan enumeration equals the brute-force filter") {
    CHECK(hr_enumerate(100'000) == brute(100'000, oracle::is_hardy_ramanujan));
    for (const auto& e : hr_enumerate_factored(100'000)) CHECK(e.factors.value() == u128{e.value});
  }

  TEST_CASE("Hardy-Ramanujan counts stay in a loose band around the growth law") {
    // exp(2 pi sqrt(log x / (3 log log x))), within a factor of 4 on the log scale.
    for (const double x : {1e6, 1e9, 1e12}) {
      const double lead = 2 * M_PI * std::sqrt(std::log(x) / (3 * std::log(std::log(x))));
      const double count = static_cast<double>(hr_enumerate(static_cast<std::uint64_t>(x)).size());
      CAPTURE(x);
      CHECK(std::log(count) > lead / 4);
      CHECK(std::log(count) < lead * 4);
    }
  }

  TEST_CASE("squarefull examples") {
    CHECK(squarefull_enumerate(50) == Values{1, 4, 8, 9, 16, 25, 27, 32, 36, 49});
    CHECK(squarefull_enumerate(100'000) == brute(100'000, oracle::is_squarefull));
    CHECK(squarefull_enumerate(116144).back() <= 116144);
  }

  TEST_CASE("pattern maxima") {
    const auto& t = testing::table();
    const auto one = pattern_max_ratio(ExponentPattern({1}), 5, t);
    CHECK(one.maximizer.value() == u128{2});
    CHECK(one.exact_ratio == mpq_class(3, 2));
    const auto two = pattern_max_ratio(ExponentPattern({2, 1}), 5, t);
    CHECK(two.maximizer.value() == u128{12});
    CHECK(two.exact_ratio == mpq_class(7, 3));
    CHECK(two.ratio.contains(mpq_class(7, 3)));
    const auto three = pattern_max_ratio(ExponentPattern({3, 2, 1}), 6, t);
    CHECK(three.maximizer.value() == u128{360});
    CHECK(three.unique);
    CHECK_THROWS_AS(pattern_max_ratio(ExponentPattern({1, 1, 1, 1, 1, 1}), 200, t), ResourceError);
    CHECK_THROWS_AS(pattern_max_ratio(ExponentPattern({2, 1}), 1, t), UsageError);
  }

  TEST_CASE("pattern maximum is the minimal number of the pattern") {
    const auto& t = testing::table();
    for (const auto& pat : {ExponentPattern({4, 2, 1}), ExponentPattern({2, 2, 1, 1}), ExponentPattern({5, 3})}) {
      CHECK(pattern_max_ratio(pat, 8, t).maximizer == minimal_number(pat, t));
    }
  }

  TEST_CASE("density of even non-squarefree integers") {
    CHECK(density_even_nonsquarefree(10).count == 2);
    // Brute force gives 30 here: the 25 multiples of 4, then 18, 50, 54, 90, 98.
    CHECK(density_even_nonsquarefree(100).count ==
          brute(100, [](std::uint64_t n) { return n % 2 == 0 && !oracle::is_squarefree(n); }).size());
    CHECK(density_even_nonsquarefree(100).density.contains(mpq_class(30, 100)));
    const auto big = density_even_nonsquarefree(1'000'000);
    CHECK(std::abs(big.density.lower() - 0.29735) < 0.002);
    CHECK(big.count == brute(1'000'000, [](std::uint64_t n) { return n % 2 == 0 && !oracle::is_squarefree(n); }).size());
    CHECK_THROWS_AS(density_even_nonsquarefree(0), UsageError);
  }

  TEST_CASE("5-free Hardy-Ramanujan census") {
    const auto rep = hr_5free_census();
    CHECK(rep.total == 12649);
    CHECK(rep.above_5040 == 12614);
    CHECK(rep.holds_above_5040 == 12614);
    CHECK(rep.fails_above_5040.empty());
    CHECK(rep.undecided.empty());
    // Every member shares its pattern's robin verdict with sampled integers of
    // the same pattern up to 10^6.
    std::map<ExponentPattern, bool> holds;
    for (const auto& e : rep.entries) holds[exponent_pattern(e.factors)] = e.robin.holds();
    for (std::uint64_t n = 5041; n <= 1'000'000; n += 97) {
      const auto f = fz(n);
      if (!classify(f, 5).t_free) continue;
      const auto it = holds.find(exponent_pattern(f));
      if (it != holds.end() && it->second && !robin_check(f).holds()) FAIL("pattern property broken at " << n);
    }
  }
}

TEST_SUITE("scan") {
  TEST_CASE("class names parse and print") {
    for (const char* name : {"all", "odd", "squarefree", "squarefull", "tfree:5", "hr"}) {
      CHECK(parse_scan_class(name).name() == name);
    }
    CHECK_THROWS_AS(parse_scan_class("tfree:1"), UsageError);
    CHECK_THROWS_AS(parse_scan_class("even"), UsageError);
  }

  TEST_CASE("set A") {
    const auto rep = scan("all", CriterionId::Robin, 5040);
    CHECK(rep.violators == Values(std::begin(kSetA), std::end(kSetA)));
    CHECK(rep.undecided.empty());
    CHECK(rep.scanned_count == 5040);
  }

  TEST_CASE("odd, squarefree and squarefull scans") {
    CHECK(scan("odd", CriterionId::Robin, 100'000).violators == Values{1, 3, 5, 9});
    CHECK(scan("odd", CriterionId::Nicolas, 100'000).violators == Values{1, 3, 5, 9, 15});
    const auto sf = scan("squarefree", CriterionId::Robin, 100'000);
    CHECK(sf.violators == Values{1, 2, 3, 5, 6, 10, 30});
    CHECK_FALSE(sf.notes.empty());
    CHECK(scan("squarefull", CriterionId::Nicolas, 116144).violators ==
          Values{1, 4, 8, 9, 16, 36, 72, 108, 144, 216, 900, 1800, 2700, 3600, 44100, 88200});
  }

  TEST_CASE("squarefull robin violators include 72") {
    // 72 = 2^3 3^2 is squarefull and in set A, so it cannot be missing here.
    CHECK(scan("squarefull", CriterionId::Robin, 116144).violators == Values{1, 4, 8, 9, 16, 36, 72});
  }

  TEST_CASE("scan results agree with a brute-force filter") {
    const auto eg = BoundedReal::from_decimal(oracle::kExpGamma, "1e-59", 256);
    auto robin_fails = [&](std::uint64_t n) {
      if (n < 3) return true;
      mpq_class r(static_cast<unsigned long>(oracle::sigma(n)), static_cast<unsigned long>(n));
      r.canonicalize();
      return compare_strict(BoundedReal::from_rational(r, 256), eg * loglog_br(BoundedReal::from_u64(n, 256))).fails();
    };
    CHECK(scan("tfree:3", CriterionId::Robin, 20'000).violators ==
          brute(20'000, [&](std::uint64_t n) { return oracle::is_t_free(n, 3) && robin_fails(n); }));
    CHECK(scan("hr", CriterionId::Robin, 100'000).violators ==
          brute(100'000, [&](std::uint64_t n) { return oracle::is_hardy_ramanujan(n) && robin_fails(n); }));
  }

  TEST_CASE("violators are sorted, unique and in range") {
    const auto rep = scan("all", CriterionId::Nicolas, 200'000);
    CHECK(std::is_sorted(rep.violators.begin(), rep.violators.end()));
    CHECK(std::adjacent_find(rep.violators.begin(), rep.violators.end()) == rep.violators.end());
    CHECK(rep.violators.back() <= 200'000);
  }

  TEST_CASE("results do not depend on workers or chunking") {
    const auto a = scan("all", CriterionId::Robin, 300'000, 1, 1u << 16);
    const auto b = scan("all", CriterionId::Robin, 300'000, 4, 10'007);
    CHECK(a.violators == b.violators);
    CHECK(a.scanned_count == b.scanned_count);
    CHECK(a.notes == b.notes);
    const auto c = scan("all", CriterionId::Lagarias, 50'000, 1, 4096);
    const auto d = scan("all", CriterionId::Lagarias, 50'000, 3, 777);
    CHECK(c.violators.empty());
    CHECK(c.violators == d.violators);
  }

  TEST_CASE("rs-upper scan skips n < 3") {
    const auto rep = scan("squarefree", CriterionId::RosserSchoenfeldUpper, 300'000);
    CHECK(std::find(rep.violators.begin(), rep.violators.end(), 1) == rep.violators.end());
    CHECK_FALSE(rep.notes.empty());
  }

  TEST_CASE("scan errors") {
    const PrimeTable small(100);
    CHECK_THROWS_AS(scan_violators(parse_scan_class("all"), CriterionId::Robin, 1'000'000, small), RangeError);
    CHECK_THROWS_AS(scan("all", CriterionId::Lagarias, kHarmonicCap + 1), ResourceError);
  }

  TEST_CASE("fixtures") {
    CHECK(expect_fixture("setA")->size() == 28);
    CHECK(expect_fixture("squarefull-robin") == Values{1, 4, 8, 9, 16, 36});
    CHECK_FALSE(expect_fixture("nope").has_value());
    CHECK(expect_fixture_names().size() >= 6);
  }

  TEST_CASE("rq products") {
    const auto& t = testing::table();
    const auto rep = verify_lemma2(10'000, t);
    CHECK(rep.undecided.empty());
    CHECK(rep.eleven_all_hold);
    CHECK(robin_check(fz(7 * 840)).holds());
    CHECK(robin_check(fz(7 * 12)).fails());
    // The failures are the published three plus (7, 720): 5040 = 7 * 720 is
    // itself in set A.
    const std::vector<QrPair> expected = {{7, 12}, {7, 120}, {7, 360}, {7, 720}};
    CHECK(rep.failures == expected);
    CHECK_THROWS_AS(verify_lemma2(7, t), UsageError);
  }

  TEST_CASE("set S") {
    const auto& t = testing::table();
    const auto rep = verify_set_s(1'000'000, t);
    CHECK(rep.robin_failures == Values{1, 3, 5, 9});
    CHECK(rep.nicolas_failures == Values{1, 3, 5, 9, 15});
    CHECK(rep.undecided.empty());
    CHECK(rep.matches_expected());
    CHECK(rep.members == brute(1'000'000, oracle::in_set_s).size());
    CHECK(robin_check(fz(31)).holds());
    CHECK(nicolas_check(fz(31)).holds());
  }

  TEST_CASE("primorials exceed the Nicolas bound; rs-upper fails once") {
    const auto& t = testing::table();
    const auto rep = primorial_nicolas_scan(2000, t);
    CHECK(rep.not_exceeding.empty());
    CHECK(rep.undecided.empty());
    CHECK(rep.rs_upper_failures == std::vector<std::size_t>{9});
    REQUIRE(rep.rows.size() >= 9);
    CHECK(rep.rows[1].k == 2);
    CHECK(rep.rows[1].exceeds == Outcome::Holds);
  }
}
