#include "doctest.h"

#include "oracles.hpp"
#include "robin/arith.hpp"
#include "robin/constants.hpp"
#include "robin/factorization.hpp"
#include "support.hpp"

using namespace robin;

TEST_SUITE("prime-table") {
  TEST_CASE("small tables") {
    const PrimeTable t(10);
    REQUIRE(t.size() == 4);
    CHECK(std::vector<std::uint32_t>(t.primes().begin(), t.primes().end()) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(PrimeTable(2).size() == 1);
    CHECK(PrimeTable(3).size() == 2);
    CHECK_THROWS_AS(PrimeTable(1), UsageError);
    CHECK_THROWS_AS(PrimeTable(0), UsageError);
    CHECK_THROWS_AS(PrimeTable(2'000'000'000), ResourceError);
  }

  TEST_CASE("counts agree with a plain sieve") {
    const auto& t = testing::table();
    for (std::uint64_t x : {2ull, 100ull, 1000ull, 65535ull, 65536ull, 1000000ull, 3673337ull}) {
      CAPTURE(x);
      CHECK(t.count_up_to(x) == oracle::prime_count(x));
    }
    CHECK(PrimeTable(1'000'000).size() == 78498);
    CHECK(PrimeTable(3673337).size() == oracle::prime_count(3673337));
  }

  TEST_CASE("segment size does not change the table") {
    SieveOptions tiny;
    tiny.segment_bytes = 64;
    const PrimeTable a(200'003, tiny);
    const PrimeTable b(200'003);
    CHECK(std::equal(a.primes().begin(), a.primes().end(), b.primes().begin(), b.primes().end()));
  }

  TEST_CASE("membership and lookups against trial division") {
    const PrimeTable t(20'000);
    for (std::uint64_t n = 0; n <= 20'000; ++n) {
      if (t.is_prime(n) != oracle::is_prime(n)) FAIL("membership mismatch at " << n);
    }
    CHECK(t.nth(1) == 2);
    CHECK(t.nth(21) == 73);
    CHECK(t.prime_below(175) == 173);
    CHECK(t.prime_below(173) == 167);
    CHECK(t.prime_at_most(173) == 173);
    CHECK_FALSE(t.prime_below(2).has_value());
    CHECK_THROWS_AS(t.is_prime(20'001), RangeError);
    CHECK_THROWS_AS(t.nth(0), UsageError);
  }

  TEST_CASE("theta examples") {
    const auto& t = testing::table();
    CHECK(theta(2, t).contains(log_br(BoundedReal::exact(2))));
    CHECK(theta(10, t).matches_printed("5.3471"));
    CHECK(testing::near(theta(10, t), "5.347107530717468", "1e-14"));
    CHECK(compare_strict(BoundedReal::from_rational(mpq_class(8484, 100)), theta(101, t)).holds());
    CHECK_THROWS_AS(theta(t.limit() + 1, t), RangeError);
  }

  TEST_CASE("theta is the log of the primorial") {
    const auto& t = testing::table();
    for (std::uint64_t x : {3ull, 30ull, 73ull, 200ull}) {
      CAPTURE(x);
      mpz_class prod = 1;
      for (const auto p : oracle::primes_upto(x)) prod *= static_cast<unsigned long>(p);
      const auto direct = log_br(BoundedReal::from_integer(prod));
      const auto th = theta(x, t);
      CHECK(testing::near(th - direct, "0", "1e-30"));
    }
  }

  TEST_CASE("reciprocal sums") {
    const auto& t = testing::table();
    CHECK(prime_recip_sum(2, t).contains(mpq_class(1, 2)));
    CHECK(prime_recip_sum(5, t).contains(mpq_class(31, 30)));
    for (std::uint64_t x : {10ull, 97ull, 1000ull}) {
      mpq_class s = 0;
      for (const auto p : oracle::primes_upto(x)) s += mpq_class(1, static_cast<unsigned long>(p));
      CHECK(prime_recip_sum(x, t).contains(s));
    }
    const auto rhs = loglog_br(BoundedReal::exact(5)) + const_gamma();
    CHECK(compare_strict(prime_recip_sum(5, t), rhs).holds());
  }

  TEST_CASE("primorials") {
    const auto& t = testing::table();
    CHECK(primorial_fact(1, t).value() == u128{2});
    CHECK(primorial_fact(4, t).value() == u128{210});
    CHECK(primorial_fact(9, t).value() == u128{223092870});
    CHECK_THROWS_AS(primorial_fact(0, t), UsageError);
    CHECK_THROWS_AS(primorial_fact(t.size() + 1, t), ResourceError);
  }

  TEST_CASE("reciprocal bound over a short range and the constant gap") {
    const auto& t = testing::table();
    const auto rep = verify_reciprocal_sum_bound(5, 100'000, t);
    CHECK(rep.passed());
    CHECK(rep.first_prime == 5);
    CHECK(rep.primes_checked == oracle::prime_count(100'000) - 2);
    CHECK(verify_mertens_gap(3673337).holds());
  }

  TEST_CASE("reciprocal bound is independent of worker count") {
    const auto& t = testing::table();
    const auto a = verify_reciprocal_sum_bound(5, 300'000, t, {}, 1);
    const auto b = verify_reciprocal_sum_bound(5, 300'000, t, {}, 3);
    CHECK(a.primes_checked == b.primes_checked);
    CHECK(a.min_margin == b.min_margin);
    CHECK(a.min_margin_prime == b.min_margin_prime);
    CHECK(a.violations == b.violations);
  }
}

TEST_SUITE("factorization") {
  TEST_CASE("factorize examples") {
    const auto& t = testing::table();
    CHECK(factorize(1, t).is_one());
    CHECK(factorize(5040, t).to_string() == "2^4*3^2*5*7");
    const auto n9 = factorize(223092870, t);
    CHECK(n9 == primorial_fact(9, t));
    CHECK_THROWS_AS(factorize(0, t), UsageError);
  }

  TEST_CASE("factorize multiplies back") {
    const auto& t = testing::table();
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t n = 1 + rng() % 1'000'000'000'000ull;
      const auto f = factorize(n, t);
      REQUIRE(f.value().has_value());
      CHECK(static_cast<std::uint64_t>(*f.value()) == n);
      for (const auto& pp : f.entries()) CHECK(is_prime_u64(pp.prime));
    }
  }

  TEST_CASE("cofactor beyond the table is refused, not guessed") {
    const PrimeTable small(100);
    // 101 * 103 has no factor below the table limit and is composite.
    CHECK_THROWS_AS(factorize(101ull * 103ull, small), IncompleteFactorization);
    // A lone prime cofactor is fine.
    CHECK(factorize(2ull * 10007ull, small).to_string() == "2*10007");
  }

  TEST_CASE("literals") {
    const auto& t = testing::table();
    CHECK(parse_factorization("5040", t) == factorize(5040, t));
    CHECK(parse_factorization("2^4*3^2*5*7", t) == factorize(5040, t));
    CHECK(parse_factorization("2^1*3^1*5^1*7^1*11^1*13^1*17^1*19^1*23^1", t) == primorial_fact(9, t));
    CHECK(parse_factorization("3*2^2", t) == factorize(12, t));
    CHECK(parse_factorization("1", t).is_one());
    CHECK_THROWS_AS(parse_factorization("4^2", t), UsageError);
    CHECK_THROWS_AS(parse_factorization("2^", t), UsageError);
    CHECK_THROWS_AS(parse_factorization("abc", t), UsageError);
    CHECK_THROWS_AS(parse_factorization("", t), UsageError);
  }

  TEST_CASE("Miller-Rabin against trial division") {
    for (std::uint64_t n = 0; n < 100'000; ++n) {
      if (is_prime_u64(n) != oracle::is_prime(n)) FAIL("mismatch at " << n);
    }
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    CHECK(next_prime_u64(1'000'000) == 1'000'003);
  }

  TEST_CASE("log_value and exceeds for large products") {
    const auto& t = testing::table();
    const auto big = primorial_fact(100, t);
    CHECK_FALSE(big.value().has_value());
    CHECK(big.exceeds(std::numeric_limits<std::uint64_t>::max()));
    CHECK(testing::near(big.log_value() - theta(541, t), "0", "1e-30"));
  }
}
