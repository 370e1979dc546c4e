// Test helpers that need the library: tolerance checks against reference
// decimals and the random rational expression trees used by the soundness
// fuzz (unit suite and acceptance binary share one generator).
#ifndef ROBIN_TESTS_SUPPORT_HPP
#define ROBIN_TESTS_SUPPORT_HPP

#include <memory>
#include <random>
#include <string>

#include <gmpxx.h>

#include "robin/bounded_real.hpp"
#include "robin/errors.hpp"
#include "robin/prime_table.hpp"

namespace testing {

// One table large enough for every unit test (Lemma-1 range included).
inline const robin::PrimeTable& table() {
  static const robin::PrimeTable t(4'000'000);
  return t;
}

// The whole enclosure lies within tol of the decimal reference.
inline bool near(const robin::BoundedReal& x, const char* decimal, const char* tol) {
  const mpq_class v = robin::parse_decimal(decimal);
  const mpq_class t = robin::parse_decimal(tol);
  return mpfr_cmp_q(x.lo(), mpq_class(v - t).get_mpq_t()) >= 0 &&
         mpfr_cmp_q(x.hi(), mpq_class(v + t).get_mpq_t()) <= 0;
}

struct Expr {
  enum Op { Leaf, Add, Sub, Mul, Div, Neg } op = Leaf;
  mpq_class value;  // exact value of the subtree
  std::unique_ptr<Expr> a, b;
};

class ExprGen {
 public:
  explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

  std::unique_ptr<Expr> make(int depth) {
    auto e = std::make_unique<Expr>();
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
    const int op = pick(rng_);
    if (op == 0) {
      std::uniform_int_distribution<long> num(-1000, 1000), den(1, 999);
      e->value = mpq_class(num(rng_), den(rng_));
      e->value.canonicalize();
      return e;
    }
    e->op = static_cast<Expr::Op>(op);
    e->a = make(depth - 1);
    if (e->op != Expr::Neg) e->b = make(depth - 1);
    switch (e->op) {
      case Expr::Add: e->value = e->a->value + e->b->value; break;
      case Expr::Sub: e->value = e->a->value - e->b->value; break;
      case Expr::Mul: e->value = e->a->value * e->b->value; break;
      case Expr::Div:
        if (e->b->value == 0) return make(0);
        e->value = e->a->value / e->b->value;
        break;
      case Expr::Neg: e->value = -e->a->value; break;
      case Expr::Leaf: break;
    }
    return e;
  }

  robin::Precision precision() {
    static constexpr robin::Precision kChoices[] = {24, 53, 64, 128, 256};
    std::uniform_int_distribution<int> pick(0, 4);
    return kChoices[pick(rng_)];
  }

 private:
  std::mt19937_64 rng_;
};

inline robin::BoundedReal evaluate(const Expr& e, robin::Precision prec) {
  using robin::BoundedReal;
  switch (e.op) {
    case Expr::Leaf: return BoundedReal::from_rational(e.value, prec);
    case Expr::Add: return evaluate(*e.a, prec) + evaluate(*e.b, prec);
    case Expr::Sub: return evaluate(*e.a, prec) - evaluate(*e.b, prec);
    case Expr::Mul: return evaluate(*e.a, prec) * evaluate(*e.b, prec);
    case Expr::Div: return evaluate(*e.a, prec) / evaluate(*e.b, prec);
    case Expr::Neg: return -evaluate(*e.a, prec);
  }
  return BoundedReal(prec);
}

struct FuzzResult {
  std::size_t trees = 0;
  std::size_t contained = 0;
  std::size_t nested = 0;
  // Divisor enclosures that straddle zero at low precision; not a soundness
  // failure, the operation refuses instead of answering.
  std::size_t refused = 0;
  bool passed() const { return contained + refused == trees && nested + refused == trees; }
};

inline FuzzResult fuzz(std::size_t trees, std::uint64_t seed, int depth = 5) {
  ExprGen gen(seed);
  FuzzResult r;
  for (std::size_t i = 0; i < trees; ++i) {
    const auto e = gen.make(depth);
    const robin::Precision p = gen.precision();
    ++r.trees;
    try {
      const auto low = evaluate(*e, p);
      const auto high = evaluate(*e, 2 * p);
      if (low.contains(e->value) && high.contains(e->value)) ++r.contained;
      if (low.contains(high)) ++r.nested;
    } catch (const robin::DomainError&) {
      ++r.refused;
    }
  }
  return r;
}

}  // namespace testing

#endif  // ROBIN_TESTS_SUPPORT_HPP
