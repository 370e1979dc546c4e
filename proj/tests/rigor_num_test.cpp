#include "doctest.h"

#include "oracles.hpp"
#include "robin/constants.hpp"
#include "support.hpp"

using namespace robin;
using testing::near;

TEST_SUITE("rigor-num") {
  TEST_CASE("constants enclose the reference decimals") {
    for (Precision p : {64, 128, 256, 512}) {
      CAPTURE(p);
      // The references carry 60 digits, so they only pin values to 1e-59.
      const char* tol = p == 64 ? "1e-17" : p == 128 ? "1e-36" : "1e-58";
      CHECK(near(const_gamma(p), oracle::kGamma, tol));
      CHECK(near(const_exp_gamma(p), oracle::kExpGamma, tol));
      CHECK(near(const_mertens(p), oracle::kMertens, tol));
      CHECK(near(const_pi(p), oracle::kPi, tol));
      if (p <= 128) CHECK(const_gamma(p).contains_decimal(oracle::kGamma));
    }
    CHECK(const_gamma().within("0.57721566", "0.57721567"));
    CHECK(const_exp_gamma().within("1.78107241", "1.78107242"));
    CHECK(const_mertens().within("0.26149721", "0.26149722"));
  }

  TEST_CASE("constant widths follow the precision") {
    for (Precision p : {64, 128, 256}) {
      CAPTURE(p);
      const auto g = const_gamma(p);
      CHECK(g.width() <= std::ldexp(1.0, 1 - static_cast<int>(p)));
      CHECK(const_mertens(2 * p).width() <= const_mertens(p).width() / 2);
    }
  }

  TEST_CASE("exp of gamma is consistent with the e^gamma enclosure") {
    const auto eg = exp_br(const_gamma(256));
    const auto widened = const_exp_gamma(256) + BoundedReal::from_decimal("0", "1e-70", 256);
    CHECK(widened.contains(eg));
  }

  TEST_CASE("precision beyond the literals is refused") {
    CHECK_THROWS_AS(const_mertens(kMertensPrecisionCap * 2), PrecisionCapError);
  }

  TEST_CASE("zeta_int encloses pi^2/6 and zeta(5)") {
    const auto& tbl = testing::table();
    BoundedReal previous;
    bool first = true;
    for (std::uint64_t cutoff : {1000ull, 10000ull, 100000ull, 1000000ull}) {
      CAPTURE(cutoff);
      const auto z = zeta_int(2, cutoff, tbl);
      CHECK(z.contains_decimal(oracle::kPiSquaredOver6));
      if (!first) CHECK(z.width() < previous.width());
      previous = z;
      first = false;
    }
    const auto z5 = zeta_int(5, 10000, tbl);
    CHECK(z5.contains_decimal(oracle::kZeta5));
    CHECK(z5.width() < 1e-8);
  }

  TEST_CASE("tail_log_bound examples") {
    CHECK(tail_log_bound(2, 3).contains(mpq_class(2, 3)));
    CHECK(tail_log_bound(5, 196).contains(mpq_class(5, 4ul * 196 * 196 * 196 * 196)));
  }

  TEST_CASE("tail_log_bound dominates the direct product") {
    const auto& tbl = testing::table();
    struct Sample {
      unsigned t;
      std::uint64_t x, big_x;
    };
    for (const auto s : {Sample{2, 10, 1000}, Sample{2, 100, 100000}, Sample{3, 50, 20000}, Sample{5, 11, 5000},
                         Sample{5, 196, 100000}}) {
      CAPTURE(s.t);
      CAPTURE(s.x);
      mpq_class prod = 1;
      for (const auto p : tbl.primes()) {
        if (p <= s.x) continue;
        if (p > s.big_x) break;
        mpz_class pt;
        mpz_ui_pow_ui(pt.get_mpz_t(), p, s.t);
        prod *= mpq_class(pt, pt - 1);
      }
      prod.canonicalize();
      const auto log_tail = log_br(BoundedReal::from_rational(prod));
      CHECK(compare_non_strict(log_tail, tail_log_bound(s.t, s.x)).holds());
    }
  }

  TEST_CASE("log, loglog and exp") {
    const auto one = log_br(BoundedReal::exact(1));
    CHECK(one.contains(mpq_class(0)));
    CHECK(one.width() < 1e-30);
    const auto ll = loglog_br(BoundedReal::from_u64(5040));
    CHECK(near(ll, oracle::kLogLog5040, "1e-12"));
    CHECK(ll.width() < 1e-6);
    for (const char* v : {"0.001", "1", "2.5", "5040", "1e12"}) {
      CAPTURE(v);
      const auto x = BoundedReal::from_rational(parse_decimal(v));
      const auto round_trip = exp_br(log_br(x));
      CHECK(round_trip.contains(x));
    }
    CHECK_THROWS_AS(log_br(BoundedReal::exact(-1)), DomainError);
    CHECK_THROWS_AS(log_br(BoundedReal::exact(0)), DomainError);
  }

  TEST_CASE("comparison examples") {
    CHECK(compare_strict(BoundedReal::exact(1), BoundedReal::exact(2)).holds());
    CHECK(compare_strict(BoundedReal::exact(2), BoundedReal::exact(2)).fails());
    CHECK(compare_non_strict(BoundedReal::exact(2), BoundedReal::exact(2)).holds());
    CHECK(compare_strict(BoundedReal::exact(3), BoundedReal::exact(2)).fails());
    CHECK(compare_non_strict(BoundedReal::exact(3), BoundedReal::exact(2)).fails());
    const auto wide = BoundedReal::between(1, 3);
    CHECK(compare_strict(wide, BoundedReal::exact(2)).undecided());
    CHECK(compare_non_strict(wide, BoundedReal::exact(2)).undecided());
  }

  TEST_CASE("verdict invariants") {
    // Holds => margin.lo > 0; Fails => margin.hi <= 0; Undecided => straddle.
    testing::ExprGen gen(7);
    for (int i = 0; i < 500; ++i) {
      const auto a = gen.make(2), b = gen.make(2);
      BoundedReal x, y;
      try {
        x = testing::evaluate(*a, 24);
        y = testing::evaluate(*b, 24);
      } catch (const DomainError&) {
        continue;
      }
      const auto v = compare_strict(x, y);
      const auto& m = v.margin;
      if (v.holds()) CHECK(mpfr_sgn(m.lo()) > 0);
      if (v.fails()) CHECK(mpfr_sgn(m.hi()) <= 0);
      if (v.undecided()) CHECK((mpfr_sgn(m.lo()) <= 0 && mpfr_sgn(m.hi()) > 0));
      if (!v.undecided()) CHECK(v.holds() == (a->value < b->value));
    }
  }

  TEST_CASE("refinement stops at the cap with Undecided") {
    int calls = 0;
    const Evaluator straddle = [&](Precision p) {
      ++calls;
      return EnclosurePair{BoundedReal::between(1, 3, p), BoundedReal::exact(2, p)};
    };
    const auto v = compare_strict(straddle, RefinePolicy{128, 512});
    CHECK(v.undecided());
    CHECK(v.precision == 512);
    CHECK(calls == 3);

    const Evaluator tight = [](Precision p) {
      // 1/3 < 1/3 + 2^-200: needs more than 128 bits to separate.
      mpq_class eps(1);
      eps /= mpz_class(1) << 200;
      return EnclosurePair{BoundedReal::from_rational(mpq_class(1, 3), p),
                           BoundedReal::from_rational(mpq_class(1, 3) + eps, p)};
    };
    const auto t = compare_strict(tight, RefinePolicy{128, 512});
    CHECK(t.holds());
    CHECK(t.precision == 256);
  }

  TEST_CASE("printed-digit matching") {
    const auto x = BoundedReal::from_rational(mpq_class(1, 3));
    CHECK(x.matches_printed("0.333333"));
    CHECK_FALSE(x.matches_printed("0.333334"));
    CHECK_FALSE(x.contains_decimal("0.3333333333"));
    const auto y = BoundedReal::from_rational(mpq_class(2, 3));
    CHECK(y.matches_printed("0.666666"));
    CHECK_FALSE(y.matches_printed("0.666667"));
    CHECK(y.matches_printed("0.666667", BoundedReal::Printed::Rounded));
    CHECK_FALSE(y.matches_printed("0.666666", BoundedReal::Printed::Rounded));
    CHECK(y.matches_printed("0.666666", BoundedReal::Printed::Either));
    CHECK(y.matches_printed("0.666667", BoundedReal::Printed::Either));
    CHECK_FALSE(y.matches_printed("0.666668", BoundedReal::Printed::Either));
    CHECK(x.within("0.3333", "0.3334"));
  }

  TEST_CASE("LogAccumulator matches a direct log") {
    LogAccumulator acc;
    acc.multiply(2, 4);
    acc.multiply(3, 2);
    acc.multiply(5);
    acc.multiply(7);
    const auto direct = log_br(BoundedReal::from_u64(5040));
    const auto sum = acc.result();
    CHECK(compare_non_strict(sum, direct + BoundedReal::from_rational(parse_decimal("1e-30"))).holds());
    CHECK(compare_non_strict(direct - BoundedReal::from_rational(parse_decimal("1e-30")), sum).holds());
  }

  TEST_CASE("soundness fuzz, reduced size") {
    const auto r = testing::fuzz(10'000, 20260101);
    CHECK(r.contained + r.refused == r.trees);
    CHECK(r.nested + r.refused == r.trees);
    CHECK(r.refused < r.trees / 100);
  }
}
