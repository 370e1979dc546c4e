// Acceptance run: one PASS/FAIL line per criterion, each with its runtime
// budget. Exits 0 only when every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "robin/robin.hpp"
#include "support.hpp"

using namespace robin;
using Values = std::vector<std::uint64_t>;

namespace {

struct Result {
  bool ok = false;
  std::string detail;
};

std::string list(const Values& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << '}';
  return out.str();
}

Factorization fz(std::uint64_t n) { return factorize(n, testing::table()); }

ScanReport scan(ScanClassKind kind, CriterionId id, std::uint64_t xmax) {
  return scan_violators(ScanClass{kind, 2}, id, xmax, testing::table());
}

int failures = 0;

// Published digits are sometimes truncated (174.017694...) and sometimes
// rounded (8.992602079 for 8.9926020787...); accept either convention.
constexpr auto kEither = BoundedReal::Printed::Either;

void criterion(int number, const char* name, double budget_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d. %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", number, name, o.detail.c_str(),
              secs, budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

const Values kPublishedSetA = {1,  2,  3,  4,  5,  6,  8,   9,   10,  12,   16,   18,   20,   24,
                               30, 36, 48, 60, 72, 84, 120, 180, 240, 360, 720, 840, 2520, 5040};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  (void)testing::table();
  std::printf("prime table to %llu built in %.2f s\n", static_cast<unsigned long long>(testing::table().limit()),
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

  criterion(1, "set A from a Robin scan of [1, 5040]", 1, [] {
    const auto r = scan(ScanClassKind::All, CriterionId::Robin, 5040);
    const bool ok = r.violators == kPublishedSetA && r.undecided.empty();
    return Result{ok, std::to_string(r.violators.size()) + " violators, " + std::to_string(r.undecided.size()) +
                           " undecided"};
  });

  criterion(2, "odd Robin violators <= 10^6 are {1,3,5,9}", 30, [] {
    const auto r = scan(ScanClassKind::Odd, CriterionId::Robin, 1'000'000);
    return Result{r.violators == Values{1, 3, 5, 9} && r.undecided.empty(), list(r.violators)};
  });

  criterion(3, "odd Nicolas violators <= 10^6 are {1,3,5,9,15}", 30, [] {
    const auto r = scan(ScanClassKind::Odd, CriterionId::Nicolas, 1'000'000);
    return Result{r.violators == Values{1, 3, 5, 9, 15} && r.undecided.empty(), list(r.violators)};
  });

  criterion(4, "squarefree Robin violators <= 10^6 are {1} u B", 30, [] {
    const auto r = scan(ScanClassKind::Squarefree, CriterionId::Robin, 1'000'000);
    return Result{r.violators == Values{1, 2, 3, 5, 6, 10, 30} && r.undecided.empty(), list(r.violators)};
  });

  criterion(5, "squarefull Robin/Nicolas violators <= 116144 and the bound", 5, [] {
    const auto robin = scan(ScanClassKind::Squarefull, CriterionId::Robin, kThm8Range);
    const auto nicolas = scan(ScanClassKind::Squarefull, CriterionId::Nicolas, kThm8Range);
    const auto rep = verify_thm8_bound(testing::table());
    Values nicolas_ge2;
    for (const auto n : nicolas.violators)
      if (n >= 2) nicolas_ge2.push_back(n);
    const Values published_robin = {1, 4, 8, 9, 16, 36};
    const Values published_nicolas = {4, 8, 9, 16, 36, 72, 108, 144, 216, 900, 1800, 2700, 3600, 44100, 88200};
    const bool robin_ok = robin.violators == published_robin;
    const bool nicolas_ok = nicolas_ge2 == published_nicolas;
    std::string detail = "robin " + list(robin.violators) + (robin_ok ? " = published" : " != published {1,4,8,9,16,36}") +
                         "; nicolas " + std::to_string(nicolas_ge2.size()) + " values" +
                         (nicolas_ok ? " = published" : " != published") + "; bound " + rep.bound.to_string(12) +
                         (rep.bound_certified ? " < 116145" : " not certified");
    return Result{robin_ok && nicolas_ok && rep.bound_certified && robin.undecided.empty() &&
                       nicolas.undecided.empty(),
                   detail};
  });

  criterion(6, "sum 1/p <= log log x + gamma on [5, 3673337] and the constant gap", 10, [] {
    const RefinePolicy fixed{128, 128};
    const auto rep = verify_reciprocal_sum_bound(5, 3'673'337, testing::table(), fixed);
    const auto gap = verify_mertens_gap(3'673'337, fixed);
    std::ostringstream d;
    d << rep.primes_checked << " primes, " << rep.violations.size() << " violations, " << rep.undecided.size()
      << " undecided; gap " << outcome_name(gap.state) << " margin " << gap.margin.lo_string(6) << " at "
      << gap.precision << " bits";
    return Result{rep.passed() && rep.primes_checked > 0 && gap.holds(), d.str()};
  });

  criterion(7, "rq in R except (7,12),(7,120),(7,360) for r in A, 7 <= q <= 10^4", 10, [] {
    const auto rep = verify_lemma2(10'000, testing::table());
    const std::vector<QrPair> published = {{7, 12}, {7, 120}, {7, 360}};
    std::ostringstream d;
    d << "failures";
    for (const auto& f : rep.failures) d << " (" << f.q << "," << f.r << ")";
    d << ", " << rep.undecided.size() << " undecided";
    if (rep.failures != published) d << "; published list omits (7,720), and 7*720 = 5040 is in A";
    return Result{rep.failures == published && rep.undecided.empty(), d.str()};
  });

  criterion(8, "5-free Hardy-Ramanujan census with P(n) <= 73", 60, [] {
    const auto rep = hr_5free_census();
    std::ostringstream d;
    d << rep.total << " members, " << rep.above_5040 << " above 5040, " << rep.holds_above_5040 << " hold, "
      << rep.undecided.size() << " undecided";
    return Result{rep.total == 12649 && rep.above_5040 == 12614 && rep.holds_above_5040 == 12614 &&
                       rep.undecided.empty(),
                   d.str()};
  });

  criterion(9, "t = 5 cascade from 196 down to 73", 5, [] {
    const auto& t = testing::table();
    const bool at196 = z0_negative_at(5, 196, t).holds();
    const auto trace = cascade_down(5, 196, t);
    if (trace.steps.size() < 2) return Result{false, "fewer than two steps"};
    const auto& s0 = trace.steps[0];
    const auto& s1 = trace.steps[1];
    const bool p193 = s0.anchor == 193 && s0.p_value.matches_printed("9.18883221", kEither) && s0.p_value.width() < 1e-6;
    const bool next = s0.next_bound.matches_printed("174.017694", kEither) && s0.next_bound.width() < 1e-6;
    const bool p173 = s1.anchor == 173 && s1.p_value.matches_printed("8.992602079", kEither) && s1.p_value.width() < 1e-6;
    const bool term = trace.terminal_z == 73 && trace.terminal_certified;
    std::ostringstream d;
    d << "negative at 196: " << at196 << "; P5(193) " << s0.p_value.to_string(12) << "; bound "
      << s0.next_bound.to_string(12) << "; P5(173) " << s1.p_value.to_string(13) << "; terminal " << trace.terminal_z
      << (trace.terminal_certified ? " certified" : " not certified");
    return Result{at196 && p193 && next && p173 && term, d.str()};
  });

  criterion(10, "primorial ratio inequality holds for m <= 4, fails for 5..25", 1, [] {
    const auto rep = verify_lemma7(testing::table());
    bool ok = rep.rows.size() == 25;
    std::string bad;
    for (const auto& row : rep.rows) {
      const bool expect_hold = row.m <= 4;
      if (expect_hold ? !row.inequality.holds() : !row.inequality.fails()) {
        ok = false;
        bad += " m=" + std::to_string(row.m);
      }
    }
    return Result{ok, ok ? "boundary at m = 4" : "unexpected rows:" + bad};
  });

  criterion(11, "5-free small case: constant 4.6411 and every candidate holds", 10, [] {
    const auto rep = verify_thm5_smallcase(testing::table());
    const bool constant = rep.constant.matches_printed("4.6411") && rep.constant.width() < 1e-3;
    std::ostringstream d;
    d << "P5(11) " << rep.constant.to_string(10) << "; " << rep.in_range << " in range, " << rep.above_5040
      << " above 5040, " << rep.holds << " hold, " << rep.failures.size() << " fail, " << rep.undecided.size()
      << " undecided";
    return Result{constant && rep.log_bound_certified && rep.failures.empty() && rep.undecided.empty() &&
                       rep.holds == rep.above_5040,
                   d.str()};
  });

  criterion(12, "ratio series approach 6e^gamma/pi^2 and e^gamma at 10^5", 60, [] {
    const auto& t = testing::table();
    const auto a = limsup_experiment(Variant::F1, Family::TPowerful, 2, 100'000, t);
    const auto b = limsup_experiment(Variant::F2, Family::Primorial, 2, 100'000, t);
    auto rel = [](const RatioSeries& s) {
      const double v = (s.points.back().value.lower() + s.points.back().value.upper()) / 2;
      const double g = (s.target.lower() + s.target.upper()) / 2;
      return std::abs(v - g) / g;
    };
    const bool target_a = testing::near(a.target, oracle::kSixExpGammaOverPiSquared, "1e-10");
    const bool target_b = testing::near(b.target, oracle::kExpGamma, "1e-20");
    std::ostringstream d;
    d << "f1 at x=" << a.points.back().x << " off by " << 100 * rel(a) << "%, f2 off by " << 100 * rel(b)
      << "%; gaps " << a.first_gap() << " -> " << a.last_gap() << ", " << b.first_gap() << " -> " << b.last_gap();
    return Result{target_a && target_b && a.points.back().x == 99991 && rel(a) < 0.03 && rel(b) < 0.03 &&
                       a.last_gap() < a.first_gap() && b.last_gap() < b.first_gap(),
                   d.str()};
  });

  criterion(13, "enumerators and classify agree with brute force on [1, 10^5]", 60, [] {
    constexpr std::uint64_t kMax = 100'000;
    Values hr, sq;
    std::size_t class_mismatches = 0;
    for (std::uint64_t n = 1; n <= kMax; ++n) {
      if (oracle::is_hardy_ramanujan(n)) hr.push_back(n);
      if (oracle::is_squarefull(n)) sq.push_back(n);
      const auto c = classify(fz(n), 5);
      const bool ok = c.odd == (n % 2 == 1) && c.squarefree == oracle::is_squarefree(n) &&
                      c.squarefull == oracle::is_squarefull(n) && c.t_free == oracle::is_t_free(n, 5) &&
                      c.hardy_ramanujan == oracle::is_hardy_ramanujan(n) && c.in_set_s == oracle::in_set_s(n);
      if (!ok) ++class_mismatches;
    }
    const bool hr_ok = hr_enumerate(kMax) == hr;
    const bool sq_ok = squarefull_enumerate(kMax) == sq;
    std::ostringstream d;
    d << hr.size() << " HR (" << (hr_ok ? "match" : "MISMATCH") << "), " << sq.size() << " squarefull ("
      << (sq_ok ? "match" : "MISMATCH") << "), " << class_mismatches << " classify mismatches";
    return Result{hr_ok && sq_ok && class_mismatches == 0, d.str()};
  });

  criterion(14, "soundness fuzz over 10^5 rational expression trees", 60, [] {
    const auto r = testing::fuzz(100'000, 0x5eed'2026);
    std::ostringstream d;
    d << r.contained << " contained, " << r.nested << " nested under precision doubling, " << r.refused
      << " refused (divisor straddles 0) of " << r.trees;
    return Result{r.passed() && r.refused * 100 < r.trees, d.str()};
  });

  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
