#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "robin/parallel.hpp"
#include "robin/robin.hpp"

namespace robin::cli {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  std::istringstream in(text);
  if (!(in >> value) || !in.eof() || text.empty() || text[0] == '-')
    throw UsageError("config: bad value '" + text + "' for " + key);
  return value;
}

int exit_for(Outcome o) {
  switch (o) {
    case Outcome::Holds: return kExitHolds;
    case Outcome::Fails: return kExitFails;
    case Outcome::Undecided: return kExitUndecided;
  }
  return kExitInternal;
}

// 0 when the check passed, 2 if anything stayed undecided, else 1.
int verification_exit(bool passed, bool undecided) {
  if (undecided) return kExitUndecided;
  return passed ? kExitHolds : kExitFails;
}

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

Json to_array(const std::vector<std::uint64_t>& v) { return Json(v); }

template <class Range>
bool same(const std::vector<std::uint64_t>& got, const Range& want) {
  return std::equal(got.begin(), got.end(), std::begin(want), std::end(want));
}

std::string display(const Factorization& f) {
  const auto v = f.value();
  return v ? to_string(*v) : f.to_string();
}

Json verdict_json(const Verdict& v) {
  Json j = Json::object();
  j["outcome"] = outcome_name(v.state);
  j["margin"] = enclosure(v.margin);
  j["precision"] = v.precision;
  return j;
}

std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'") == std::string::npos) return a;
  std::string out = "'";
  for (char c : a) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct Context {
  RunConfig config;
  RefinePolicy policy;
  std::optional<PrimeTable> table_storage;

  const PrimeTable& table() {
    if (!table_storage) table_storage.emplace(config.sieve_limit);
    return *table_storage;
  }
};

// --- check -------------------------------------------------------------

struct CheckArgs {
  std::string n;
  std::string criterion = "robin";
};

void run_check(const CheckArgs& a, Context& ctx, Report& r) {
  const CriterionId id = parse_criterion(a.criterion);
  const Factorization f = parse_factorization(a.n, ctx.table());
  const Verdict v = check(id, f, ctx.policy);
  auto& t = r.table("verdict", {"n", "factorization", "criterion", "outcome", "margin_lo", "margin_hi", "precision"});
  t.add({display(f), f.to_string(), std::string(criterion_name(id)), std::string(outcome_name(v.state)),
         lo_text(v.margin), hi_text(v.margin), v.precision});
  r.summary["criterion"] = criterion_name(id);
  r.summary["outcome"] = outcome_name(v.state);
  r.exit_code = exit_for(v.state);
}

// --- scan --------------------------------------------------------------

struct ScanArgs {
  std::string cls;
  std::string criterion = "robin";
  std::uint64_t max = 0;
  std::string expect;
  std::uint64_t chunk = 1u << 16;
};

std::vector<std::uint64_t> parse_expect(const std::string& text) {
  if (auto fixture = expect_fixture(text)) return *fixture;
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number<std::uint64_t>("--expect", trim(item)));
  if (out.empty()) throw UsageError("--expect: empty list");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void run_scan(const ScanArgs& a, Context& ctx, Report& r) {
  const ScanClass cls = parse_scan_class(a.cls);
  const CriterionId id = parse_criterion(a.criterion);
  std::optional<std::vector<std::uint64_t>> expected;
  if (!a.expect.empty()) expected = parse_expect(a.expect);
  ScanOptions options;
  options.policy = ctx.policy;
  options.workers = ctx.config.workers;
  options.chunk_size = a.chunk;
  const ScanReport scan = scan_violators(cls, id, a.max, ctx.table(), options);

  auto& v = r.table("violator", {"n", "factorization"});
  for (const auto n : scan.violators) v.add({n, factorize(n, ctx.table()).to_string()});
  auto& u = r.table("undecided", {"n"});
  for (const auto n : scan.undecided) u.add({n});
  r.summary["class"] = scan.class_name;
  r.summary["criterion"] = criterion_name(scan.criterion);
  r.summary["range_max"] = scan.range_max;
  r.summary["scanned_count"] = scan.scanned_count;
  r.summary["violator_count"] = scan.violators.size();
  r.summary["violators"] = to_array(scan.violators);
  r.summary["undecided_count"] = scan.undecided.size();
  r.summary["notes"] = scan.notes;
  if (expected) {
    r.summary["expect"] = a.expect;
    r.summary["matches"] = scan.violators == *expected;
    r.exit_code = scan.violators == *expected ? kExitHolds : kExitFails;
  } else {
    r.exit_code = scan.undecided.empty() ? kExitHolds : kExitUndecided;
  }
}

// --- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string target;
  std::uint64_t qmax = 10'000;
  std::uint64_t max = 100'000;
  std::size_t kmax = 10'000;
  bool extended = false;
  bool list = false;
};

void verify_lemma1(Context& ctx, Report& r) {
  constexpr std::uint64_t kFrom = 5, kTo = 3'673'337;
  const auto rep = verify_reciprocal_sum_bound(kFrom, kTo, ctx.table(), ctx.policy, ctx.config.workers);
  const Verdict gap = verify_mertens_gap(kTo, ctx.policy);
  auto& v = r.table("violation", {"prime"});
  for (const auto p : rep.violations) v.add({p});
  auto& u = r.table("undecided", {"prime"});
  for (const auto p : rep.undecided) u.add({p});
  r.summary["first_prime"] = rep.first_prime;
  r.summary["last_prime"] = rep.last_prime;
  r.summary["primes_checked"] = rep.primes_checked;
  r.summary["violations"] = rep.violations.size();
  r.summary["undecided"] = rep.undecided.size();
  r.summary["min_margin"] = sci(rep.min_margin);
  r.summary["min_margin_prime"] = rep.min_margin_prime;
  r.summary["constant_gap"] = verdict_json(gap);
  r.exit_code = verification_exit(rep.passed() && gap.holds(), !rep.undecided.empty() || gap.undecided());
}

void verify_rq(const VerifyArgs& a, Context& ctx, Report& r) {
  const auto rep = verify_lemma2(a.qmax, ctx.table(), ctx.policy);
  auto& t = r.table("failure", {"q", "r", "rq", "expected"});
  for (const auto& f : rep.failures) {
    const bool expected = std::find(std::begin(kExpectedRqFailures), std::end(kExpectedRqFailures), f) !=
                          std::end(kExpectedRqFailures);
    t.add({f.q, f.r, f.q * f.r, expected});
  }
  auto& u = r.table("undecided", {"q", "r"});
  for (const auto& f : rep.undecided) u.add({f.q, f.r});
  r.summary["qmax"] = rep.qmax;
  r.summary["checked"] = rep.checked;
  r.summary["failures"] = rep.failures.size();
  r.summary["eleven_all_hold"] = rep.eleven_all_hold;
  r.summary["matches_expected"] = rep.matches_expected();
  r.exit_code = verification_exit(rep.matches_expected(), !rep.undecided.empty());
}

void verify_lemma5(const VerifyArgs& a, Context& ctx, Report& r) {
  const auto rep = verify_set_s(a.max, ctx.table(), ctx.policy);
  r.summary["xmax"] = rep.xmax;
  r.summary["members"] = rep.members;
  r.summary["robin_failures"] = to_array(rep.robin_failures);
  r.summary["nicolas_failures"] = to_array(rep.nicolas_failures);
  r.summary["undecided"] = to_array(rep.undecided);
  r.summary["matches_expected"] = rep.matches_expected();
  r.exit_code = verification_exit(rep.matches_expected(), !rep.undecided.empty());
}

void verify_boundary(Context& ctx, Report& r) {
  const auto rep = verify_lemma7(ctx.table(), ctx.policy);
  auto& t = r.table("row", {"m", "lhs_lo", "lhs_hi", "rhs_lo", "rhs_hi", "outcome", "expected"});
  bool undecided = false;
  for (const auto& row : rep.rows) {
    undecided = undecided || row.inequality.undecided();
    t.add({row.m, lo_text(row.lhs), hi_text(row.lhs), lo_text(row.rhs), hi_text(row.rhs),
           std::string(outcome_name(row.inequality.state)), row.m <= 4 ? "holds" : "fails"});
  }
  r.summary["chain_range"] = "26..100";
  r.summary["chain_failures"] = rep.chain_failures;
  r.summary["passed"] = rep.passed();
  r.exit_code = verification_exit(rep.passed(), undecided);
}

void verify_squarefull(Context& ctx, Report& r) {
  const auto rep = verify_thm8_bound(ctx.table(), ctx.policy, ctx.config.workers);
  r.summary["bound"] = enclosure(rep.bound);
  r.summary["bound_below_116145"] = rep.bound_certified;
  r.summary["nicolas_violators"] = to_array(rep.nicolas_violators);
  r.summary["nicolas_matches"] = rep.nicolas_matches;
  r.summary["robin_violators"] = to_array(rep.robin_violators);
  r.summary["robin_matches_published"] = rep.robin_matches;
  r.summary["undecided"] = rep.undecided;
  r.exit_code = verification_exit(rep.passed(), rep.undecided > 0);
}

void verify_census(const VerifyArgs& a, Context& ctx, Report& r) {
  const auto rep = hr_5free_census(ctx.policy);
  if (a.list) {
    auto& t = r.table("member", {"n", "factorization", "above_5040", "outcome"});
    for (const auto& e : rep.entries)
      t.add({display(e.factors), e.factors.to_string(), e.above_5040, std::string(outcome_name(e.robin.state))});
  }
  auto& f = r.table("failure", {"factorization"});
  for (const auto& x : rep.fails_above_5040) f.add({x.to_string()});
  auto& u = r.table("undecided", {"factorization"});
  for (const auto& x : rep.undecided) u.add({x.to_string()});
  r.summary["total"] = rep.total;
  r.summary["above_5040"] = rep.above_5040;
  r.summary["holds_above_5040"] = rep.holds_above_5040;
  const bool passed = rep.total == 12649 && rep.above_5040 == 12614 && rep.holds_above_5040 == rep.above_5040;
  r.summary["matches_expected"] = passed;
  r.exit_code = verification_exit(passed, !rep.undecided.empty());
}

void verify_small_case(const VerifyArgs& a, Context& ctx, Report& r) {
  const auto rep = verify_thm5_smallcase(ctx.table(), ctx.policy, a.extended, ctx.config.workers);
  auto& f = r.table("failure", {"factorization"});
  for (const auto& x : rep.failures) f.add({x.to_string()});
  auto& u = r.table("undecided", {"factorization"});
  for (const auto& x : rep.undecided) u.add({x.to_string()});
  r.summary["p5_11"] = enclosure(rep.constant);
  r.summary["log_n_bound"] = enclosure(rep.log_n_bound);
  r.summary["log_n_bound_below_13.55"] = rep.log_bound_certified;
  r.summary["candidates"] = rep.candidates;
  r.summary["in_range"] = rep.in_range;
  r.summary["above_5040"] = rep.above_5040;
  r.summary["holds"] = rep.holds;
  if (rep.extended_violators) r.summary["extended_tfree5_violators"] = to_array(*rep.extended_violators);
  r.summary["passed"] = rep.passed();
  r.exit_code = verification_exit(rep.passed(), !rep.undecided.empty());
}

void verify_prod73(Context& ctx, Report& r) {
  const auto rep = verify_prod73_vs_prod20000(ctx.table(), ctx.policy);
  r.summary["four_theta_73"] = enclosure(rep.four_theta_73);
  r.summary["theta_20000"] = enclosure(rep.theta_20000);
  r.summary["comparison"] = verdict_json(rep.verdict);
  r.summary["theta_20000_above_16800"] = verdict_json(rep.theta_lower);
  r.exit_code = verification_exit(rep.verdict.holds() && rep.theta_lower.holds(),
                                  rep.verdict.undecided() || rep.theta_lower.undecided());
}

void verify_set_a(Context& ctx, Report& r) {
  ScanOptions options;
  options.policy = ctx.policy;
  options.workers = ctx.config.workers;
  const auto scan = scan_violators(ScanClass{}, CriterionId::Robin, 5040, ctx.table(), options);
  auto& v = r.table("violator", {"n", "factorization"});
  for (const auto n : scan.violators) v.add({n, factorize(n, ctx.table()).to_string()});
  const bool passed = same(scan.violators, kSetA);
  r.summary["count"] = scan.violators.size();
  r.summary["undecided"] = scan.undecided.size();
  r.summary["matches_fixture"] = passed;
  r.exit_code = verification_exit(passed, !scan.undecided.empty());
}

void verify_primorial(const VerifyArgs& a, Context& ctx, Report& r) {
  const auto rep = primorial_nicolas_scan(a.kmax, ctx.table(), ctx.policy);
  r.summary["kmax"] = rep.kmax;
  r.summary["not_exceeding"] = rep.not_exceeding;
  r.summary["rs_upper_failures"] = rep.rs_upper_failures;
  r.summary["undecided"] = rep.undecided;
  r.exit_code = verification_exit(rep.not_exceeding.empty(), !rep.undecided.empty());
}

void run_verify(const VerifyArgs& a, Context& ctx, Report& r) {
  r.summary["target"] = a.target;
  if (a.target == "lemma1") return verify_lemma1(ctx, r);
  if (a.target == "lemma2") return verify_rq(a, ctx, r);
  if (a.target == "lemma5") return verify_lemma5(a, ctx, r);
  if (a.target == "lemma7") return verify_boundary(ctx, r);
  if (a.target == "thm8") return verify_squarefull(ctx, r);
  if (a.target == "doenbaar") return verify_census(a, ctx, r);
  if (a.target == "thm5-smallcase") return verify_small_case(a, ctx, r);
  if (a.target == "prod73") return verify_prod73(ctx, r);
  if (a.target == "setA") return verify_set_a(ctx, r);
  if (a.target == "primorial") return verify_primorial(a, ctx, r);
  throw UsageError("unknown verify target '" + a.target +
                   "' (lemma1|lemma2|lemma5|lemma7|thm8|doenbaar|thm5-smallcase|prod73|setA|primorial)");
}

// --- cascade -----------------------------------------------------------

struct CascadeArgs {
  unsigned t = 5;
  std::optional<std::uint64_t> start;
};

void run_cascade(const CascadeArgs& a, Context& ctx, Report& r) {
  const Z0Result z0 = find_z0(a.t, ctx.table(), ctx.policy);
  const std::uint64_t start = a.start.value_or(z0.z0);
  const Verdict at_start = z0_negative_at(a.t, start, ctx.table(), ctx.policy);
  const CascadeTrace trace = cascade_down(a.t, start, ctx.table(), ctx.policy.start);
  auto& t = r.table("step", {"z_bound", "anchor", "p_lo", "p_hi", "next_lo", "next_hi"});
  for (const auto& s : trace.steps)
    t.add({s.z_bound, s.anchor, lo_text(s.p_value), hi_text(s.p_value), lo_text(s.next_bound), hi_text(s.next_bound)});
  r.summary["t"] = a.t;
  r.summary["z0"] = z0.z0;
  r.summary["z0_negative"] = outcome_name(z0.at_z0.state);
  if (z0.before_z0) r.summary["nonnegative_before_z0"] = outcome_name(z0.before_z0->state);
  r.summary["start"] = start;
  r.summary["negative_at_start"] = outcome_name(at_start.state);
  r.summary["steps"] = trace.steps.size();
  r.summary["terminal_z"] = trace.terminal_z;
  r.summary["terminal_certified"] = trace.terminal_certified;
  r.exit_code = verification_exit(trace.terminal_certified && at_start.holds(), at_start.undecided());
}

// --- asym --------------------------------------------------------------

struct AsymArgs {
  std::string variant = "f1";
  std::string family = "t_powerful";
  unsigned t = 2;
  std::uint64_t max = 100'000;
};

void run_asym(const AsymArgs& a, Context& ctx, Report& r) {
  const Variant variant = parse_variant(a.variant);
  const Family family = parse_family(a.family);
  const RatioSeries s =
      limsup_experiment(variant, family, a.t, a.max, ctx.table(), ctx.policy.start, ctx.config.workers);
  auto& t = r.table("point", {"x", "log_n_lo", "log_n_hi", "lo", "hi", "target_lo", "target_hi"});
  for (const auto& p : s.points)
    t.add({p.x, lo_text(p.log_n), hi_text(p.log_n), lo_text(p.value), hi_text(p.value), lo_text(s.target),
           hi_text(s.target)});
  r.summary["variant"] = variant_name(variant);
  r.summary["family"] = family_name(family);
  r.summary["t"] = a.t;
  r.summary["xmax"] = a.max;
  r.summary["target"] = enclosure(s.target);
  r.summary["first_gap"] = sci(s.first_gap());
  r.summary["last_gap"] = sci(s.last_gap());
  r.summary["trend_decreasing"] = s.last_gap() < s.first_gap();
  r.summary["warnings"] = s.warnings;
  r.exit_code = kExitHolds;
}

}  // namespace

Json RunConfig::to_json() const {
  Json j = Json::object();
  j["precision_bits"] = precision;
  j["sieve_limit"] = sieve_limit;
  j["workers"] = workers;
  j["output_format"] = format_name(format);
  return j;
}

void RunConfig::validate() const {
  if (precision < 16 || precision > kRefineCap)
    throw UsageError("precision must be in [16, " + std::to_string(kRefineCap) + "]");
  if (sieve_limit < 100) throw UsageError("sieve_limit must be >= 100");
  if (workers < 1) throw UsageError("workers must be >= 1");
}

RunConfig default_config() {
  RunConfig c;
  c.workers = default_workers();
  return c;
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "precision") config.precision = parse_number<unsigned>(key, value);
    else if (key == "sieve_limit") config.sieve_limit = parse_number<std::uint64_t>(key, value);
    else if (key == "workers") config.workers = parse_number<unsigned>(key, value);
    else if (key == "format") config.format = parse_format(value);
    else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified checks of Robin-type divisor inequalities", "robin_tool"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<unsigned> precision, workers;
  std::optional<std::uint64_t> sieve_limit;
  std::optional<std::string> format;
  std::string config_path;
  app.add_option("--precision", precision, "Starting precision in bits (refinement doubles up to 512)");
  app.add_option("--sieve-limit", sieve_limit, "Largest integer in the prime table");
  app.add_option("--workers", workers, "Worker threads");
  app.add_option("--format", format, "json-lines|csv|human");
  app.add_option("--config", config_path, "key=value config file; flags override it");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Check one integer or factorization literal");
  check_cmd->add_option("n", check_args.n, "Integer or literal such as 2^4*3^2*5*7")->required();
  check_cmd->add_option("--criterion", check_args.criterion, "robin|nicolas|lagarias|rs-upper");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Collect violators of a criterion within a class");
  scan_cmd->add_option("--class", scan_args.cls, "all|odd|squarefree|squarefull|tfree:t|hr")->required();
  scan_cmd->add_option("--criterion", scan_args.criterion, "robin|nicolas|lagarias|rs-upper");
  scan_cmd->add_option("--max", scan_args.max, "Upper end of the range")->required();
  scan_cmd->add_option("--expect", scan_args.expect, "Fixture name or comma-separated list");
  scan_cmd->add_option("--chunk", scan_args.chunk, "Integers per work unit");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification");
  verify_cmd->add_option("target", verify_args.target,
                         "lemma1|lemma2|lemma5|lemma7|thm8|doenbaar|thm5-smallcase|prod73|setA|primorial")
      ->required();
  verify_cmd->add_option("--qmax", verify_args.qmax, "lemma2: largest prime q");
  verify_cmd->add_option("--max", verify_args.max, "lemma5: range of the S scan");
  verify_cmd->add_option("--kmax", verify_args.kmax, "primorial: number of primorials");
  verify_cmd->add_flag("--extended", verify_args.extended, "thm5-smallcase: also scan every 5-free n <= e^13.55");
  verify_cmd->add_flag("--list", verify_args.list, "doenbaar: emit every census member");

  CascadeArgs cascade_args;
  auto* cascade_cmd = app.add_subcommand("cascade", "Find z0 and cascade the prime bound down");
  cascade_cmd->add_option("--t", cascade_args.t, "t >= 2")->required();
  cascade_cmd->add_option("--start", cascade_args.start, "Starting bound (default: minimal z0)");

  AsymArgs asym_args;
  auto* asym_cmd = app.add_subcommand("asym", "Ratio series along an extremal family");
  asym_cmd->add_option("--variant", asym_args.variant, "f1|f2");
  asym_cmd->add_option("--family", asym_args.family, "t_powerful|odd_t_powerful|primorial|squarefull_squares");
  asym_cmd->add_option("--t", asym_args.t, "t >= 2");
  asym_cmd->add_option("--max", asym_args.max, "Largest grid point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Context ctx;
    ctx.config = default_config();
    if (!config_path.empty()) apply_config_file(config_path, ctx.config);
    if (precision) ctx.config.precision = *precision;
    if (sieve_limit) ctx.config.sieve_limit = *sieve_limit;
    if (workers) ctx.config.workers = *workers;
    if (format) ctx.config.format = parse_format(*format);
    ctx.config.validate();
    ctx.policy = RefinePolicy{ctx.config.precision, std::max<Precision>(ctx.config.precision, kRefineCap)};

    Report report;
    report.config = ctx.config.to_json();
    for (int i = 0; i < argc; ++i) report.command_line += (i ? " " : "") + quote_arg(argv[i]);

    const auto t0 = std::chrono::steady_clock::now();
    if (check_cmd->parsed()) {
      report.command = "check";
      run_check(check_args, ctx, report);
    } else if (scan_cmd->parsed()) {
      report.command = "scan";
      run_scan(scan_args, ctx, report);
    } else if (verify_cmd->parsed()) {
      report.command = "verify";
      run_verify(verify_args, ctx, report);
    } else if (cascade_cmd->parsed()) {
      report.command = "cascade";
      run_cascade(cascade_args, ctx, report);
    } else if (asym_cmd->parsed()) {
      report.command = "asym";
      run_asym(asym_args, ctx, report);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_report(report, ctx.config.format, out);
    return report.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "usage error: " << e.what() << " (raise --sieve-limit?)\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PrecisionCapError& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace robin::cli
