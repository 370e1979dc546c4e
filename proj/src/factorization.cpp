#include "robin/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "robin/errors.hpp"
#include "robin/prime_table.hpp"

namespace robin {

Factorization::Factorization(std::vector<PrimePower> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].prime < 2) throw UsageError("factorization base < 2");
    if (entries_[i].exponent == 0) throw UsageError("factorization exponent 0");
    if (i > 0 && entries_[i - 1].prime >= entries_[i].prime)
      throw UsageError("factorization primes must be strictly increasing");
  }
}

std::uint64_t Factorization::total_exponent() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.exponent;
  return total;
}

std::uint64_t Factorization::largest_prime() const {
  return entries_.empty() ? 1 : entries_.back().prime;
}

std::uint32_t Factorization::exponent_of(std::uint64_t prime) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), prime,
                             [](const PrimePower& e, std::uint64_t p) { return e.prime < p; });
  return it != entries_.end() && it->prime == prime ? it->exponent : 0;
}

std::optional<u128> Factorization::value() const {
  u128 n = 1;
  for (const auto& e : entries_) {
    for (std::uint32_t i = 0; i < e.exponent; ++i) {
      if (__builtin_mul_overflow(n, static_cast<u128>(e.prime), &n)) return std::nullopt;
    }
  }
  return n;
}

bool Factorization::exceeds(std::uint64_t bound) const {
  const auto v = value();
  return !v || *v > bound;
}

BoundedReal Factorization::log_value(Precision prec) const {
  LogAccumulator acc(prec);
  for (const auto& e : entries_) acc.multiply(e.prime, e.exponent);
  return acc.result();
}

Factorization& Factorization::operator*=(const Factorization& other) {
  std::vector<PrimePower> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->prime < b->prime)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->prime < a->prime) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->prime, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

std::string Factorization::to_string() const {
  if (entries_.empty()) return "1";
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += '*';
    out += std::to_string(e.prime);
    if (e.exponent > 1) out += '^' + std::to_string(e.exponent);
  }
  return out;
}

ExponentPattern::ExponentPattern(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) throw UsageError("exponent pattern entries must be >= 1");
    if (i > 0 && exps_[i] > exps_[i - 1]) throw UsageError("exponent pattern must be non-increasing");
  }
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3 * 10^24.
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw UsageError("factorize: n must be >= 1");
  std::vector<PrimePower> entries;
  std::uint64_t m = n;
  bool exhausted = true;
  for (std::uint32_t p : table.primes()) {
    if (static_cast<u128>(p) * p > m) {
      exhausted = false;
      break;
    }
    if (m % p != 0) continue;
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    entries.push_back({p, e});
  }
  if (m > 1) {
    // Either every prime <= sqrt(m) was tried, or m must be certified prime.
    if (exhausted && !is_prime_u64(m))
      throw IncompleteFactorization("factorize: cofactor " + std::to_string(m) +
                                    " has no factor in the prime table");
    entries.push_back({m, 1});
  }
  return Factorization(std::move(entries));
}

Factorization parse_factorization(std::string_view text, const PrimeTable& table) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_u64 = [&](std::string_view s) {
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw UsageError("cannot parse integer '" + std::string(s) + "'");
    return v;
  };
  text = trim(text);
  if (text.empty()) throw UsageError("empty integer/factorization literal");
  if (text.find_first_of("*^") == std::string_view::npos) {
    const std::uint64_t n = parse_u64(text);
    if (n == 0) throw UsageError("n must be a positive integer");
    return factorize(n, table);
  }
  std::map<std::uint64_t, std::uint64_t> powers;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t star = std::min(text.find('*', pos), text.size());
    const std::string_view term = trim(text.substr(pos, star - pos));
    const std::size_t caret = term.find('^');
    const std::uint64_t base = parse_u64(term.substr(0, caret));
    const std::uint64_t exp = caret == std::string_view::npos ? 1 : parse_u64(term.substr(caret + 1));
    if (base == 1 && caret == std::string_view::npos) {
      // "1" is the empty product.
    } else {
      if (!is_prime_u64(base)) throw UsageError("factorization base " + std::to_string(base) + " is not prime");
      if (exp == 0) throw UsageError("factorization exponent must be >= 1");
      powers[base] += exp;
      if (powers[base] > UINT32_MAX) throw UsageError("factorization exponent too large");
    }
    pos = star + 1;
  }
  std::vector<PrimePower> entries;
  for (auto [p, e] : powers) entries.push_back({p, static_cast<std::uint32_t>(e)});
  return Factorization(std::move(entries));
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

}  // namespace robin
