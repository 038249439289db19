#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "dinf/field/field.hpp"
#include "dinf/laurent.hpp"
#include "test_util.hpp"

using namespace dinf;
using dinf::testing::kind_of;

namespace {

using GL = Laurent<GFElement>;
using QL = Laurent<Rational>;

template <class K>
auto lp(const K& k, std::vector<std::pair<int, std::int64_t>> terms) {
  std::vector<std::pair<int, typename K::element_type>> v;
  for (auto [e, c] : terms) v.emplace_back(e, k.from_int(c));
  return Laurent<typename K::element_type>::from_terms(v);
}

template <class K>
auto random_laurent(const K& k, std::mt19937_64& rng, int span = 3) {
  std::vector<std::pair<int, typename K::element_type>> v;
  const int n = static_cast<int>(rng() % 5);
  for (int i = 0; i < n; ++i)
    v.emplace_back(static_cast<int>(rng() % (2 * span + 1)) - span, k.random_element(rng));
  return Laurent<typename K::element_type>::from_terms(v);
}

}  // namespace

TEST(LaurentArith, Examples) {
  Rationals q;
  EXPECT_EQ(lp(q, {{1, 1}, {-1, 1}}) * lp(q, {{1, 1}}), lp(q, {{2, 1}, {0, 1}}));
  const auto z = lp(q, {{1, 1}}) - lp(q, {{1, 1}});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z, QL{});
  EXPECT_EQ(z.min_exp(), 0);
  EXPECT_EQ(lp(q, {{0, 1}, {1, 1}}) * lp(q, {{0, 1}, {-1, 1}}), lp(q, {{-1, 1}, {0, 2}, {1, 1}}));
}

TEST(LaurentArith, RepresentationIsCanonical) {
  Rationals q;
  const QL a(-2, Poly<Rational>({q.zero(), q.zero(), q.from_int(5)}));
  EXPECT_EQ(a.min_exp(), 0);
  EXPECT_EQ(a, QL::constant(q.from_int(5)));
  EXPECT_EQ(a.coeff(0), q.from_int(5));
  EXPECT_EQ(a.coeff(-7), q.zero());
}

TEST(Star, Examples) {
  Rationals q;
  EXPECT_EQ(lp(q, {{1, 1}}).star(), lp(q, {{-1, 1}}));
  EXPECT_EQ(lp(q, {{0, 2}, {2, 3}}).star(), lp(q, {{0, 2}, {-2, 3}}));
}

template <class K>
void check_star_properties(const K& k) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(k, rng), b = random_laurent(k, rng);
    ASSERT_EQ(a.star().star(), a);
    ASSERT_EQ((a * b).star(), a.star() * b.star());
    ASSERT_EQ((a + b).star(), a.star() + b.star());
    for (int e = -4; e <= 4; ++e) ASSERT_EQ(a.star().coeff(e), a.coeff(-e));
  }
}

TEST(Star, IsInvolutiveAutomorphism) {
  check_star_properties(Rationals{});
  check_star_properties(PrimeClosure(7));
  check_star_properties(PrimeClosure(101));
}

TEST(LaurentArith, RingAxioms) {
  PrimeClosure k(5);
  std::mt19937_64 rng(3);
  const auto one = GL::constant(k.one());
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(k, rng), b = random_laurent(k, rng), c = random_laurent(k, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * one, a);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(UnitDecompose, Examples) {
  Rationals q;
  EXPECT_EQ(unit_decompose(lp(q, {{-3, 5}})), (UnitPart<Rational>{q.from_int(5), -3}));
  EXPECT_EQ(unit_decompose(lp(q, {{1, -1}})), (UnitPart<Rational>{q.from_int(-1), 1}));
  EXPECT_EQ(kind_of([&] { unit_decompose(lp(q, {{1, 1}, {0, 1}})); }), ErrorKind::NotAUnit);
  EXPECT_EQ(kind_of([&] { unit_decompose(QL{}); }), ErrorKind::NotAUnit);
}

TEST(UnitDecompose, ProductConsistency) {
  PrimeClosure k(7);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = k.random_nonzero(rng), y = k.random_nonzero(rng);
    const int m = static_cast<int>(rng() % 9) - 4, n = static_cast<int>(rng() % 9) - 4;
    const auto u = unit_decompose(GL::monomial(x, m) * GL::monomial(y, n));
    ASSERT_EQ(u.scalar, x * y);
    ASSERT_EQ(u.exponent, m + n);
  }
}

TEST(FactorLinear, WorkedPrimeFieldValue) {
  PrimeClosure k(7);
  const auto half = k.from_int(2).inv();
  // 1 + (t^-1 - t)/2
  const GL a = GL::constant(k.one()) + (lp(k, {{-1, 1}, {1, -1}})).scaled(half);
  // Oracle: -1/2 mod 7 and the roots of t^2 - 2t - 1 mod 7 by enumeration.
  std::int64_t neg_half = 0;
  for (std::int64_t x = 0; x < 7; ++x)
    if ((2 * x + 1) % 7 == 0) neg_half = x;
  std::vector<std::int64_t> roots;
  for (std::int64_t x = 0; x < 7; ++x)
    if ((x * x - 2 * x - 1 + 70) % 7 == 0) roots.push_back(x);
  ASSERT_EQ(neg_half, 3);
  ASSERT_EQ(roots, (std::vector<std::int64_t>{4, 5}));

  const auto fac = factor_linear(k, a);
  EXPECT_EQ(fac.unit.scalar, k.from_int(neg_half));
  EXPECT_EQ(fac.unit.exponent, -1);
  ASSERT_EQ(fac.primes.size(), 2u);
  EXPECT_EQ(fac.primes[0], (Root<GFElement>{k.from_int(roots[0]), 1}));
  EXPECT_EQ(fac.primes[1], (Root<GFElement>{k.from_int(roots[1]), 1}));
  EXPECT_EQ(fac.expand(k.one()), a);
}

TEST(FactorLinear, Examples) {
  Rationals q;
  const auto pure = factor_linear(q, lp(q, {{2, 1}}));
  EXPECT_EQ(pure.unit, (UnitPart<Rational>{q.one(), 2}));
  EXPECT_TRUE(pure.primes.empty());
  const auto lin = factor_linear(q, lp(q, {{1, 2}, {0, -2}}));
  EXPECT_EQ(lin.unit, (UnitPart<Rational>{q.from_int(2), 0}));
  ASSERT_EQ(lin.primes.size(), 1u);
  EXPECT_EQ(lin.primes[0], (Root<Rational>{q.one(), 1}));
  EXPECT_EQ(kind_of([&] { factor_linear(q, lp(q, {{2, 1}, {0, -2}})); }), ErrorKind::NotSplitOverField);
}

TEST(FactorLinear, RoundTripOverClosure) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    PrimeClosure k(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 100; ++i) {
      const auto a = random_laurent(k, rng);
      if (a.is_zero()) continue;
      const auto fac = factor_linear(k, a);
      ASSERT_EQ(fac.expand(k.one()), a);
      ASSERT_EQ(fac.prime_count(), a.body().degree());
      for (const auto& r : fac.primes) ASSERT_FALSE(r.value.is_zero());
    }
  }
}

TEST(FactorLinear, RoundTripOverRationals) {
  Rationals q;
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    QL a = QL::monomial(q.random_nonzero(rng), static_cast<int>(rng() % 7) - 3);
    const int n = static_cast<int>(rng() % 4);
    for (int j = 0; j < n; ++j) a = a * (lp(q, {{1, 1}}) - QL::constant(q.random_nonzero(rng)));
    const auto fac = factor_linear(q, a);
    ASSERT_EQ(fac.expand(q.one()), a);
    ASSERT_EQ(fac.prime_count(), n);
  }
}

TEST(FactorLinear, StarOfFactorization) {
  PrimeClosure k(7);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_laurent(k, rng);
    if (a.is_zero()) continue;
    const auto fa = factor_linear(k, a);
    const auto fs = factor_linear(k, a.star());
    GFElement scalar = fa.unit.scalar;
    int shift = -fa.unit.exponent;
    RootMultiset<GFElement> inv_roots;
    for (const auto& r : fa.primes) {
      for (int j = 0; j < r.multiplicity; ++j) scalar = scalar * -r.value;
      shift -= r.multiplicity;
      inv_roots.push_back({r.value.inv(), r.multiplicity});
    }
    ASSERT_EQ(fs.unit.scalar, scalar);
    ASSERT_EQ(fs.unit.exponent, shift);
    ASSERT_EQ(fs.primes, normalize_roots(inv_roots));
  }
}

TEST(StarOfPrime, Examples) {
  PrimeClosure k(7);
  std::int64_t inv4 = 0;
  for (std::int64_t x = 1; x < 7; ++x)
    if (4 * x % 7 == 1) inv4 = x;
  const auto s = star_of_prime(k.from_int(4));
  EXPECT_EQ(s.root, k.from_int(inv4));
  EXPECT_EQ(s.scalar, k.from_int(3));
  EXPECT_EQ(star_of_prime(k.from_int(1)).root, k.one());
  EXPECT_EQ(star_of_prime(k.from_int(-1)).root, k.from_int(-1));
  // (t - λ)* == scalar * t^-1 * (t - root)
  const auto lambda = k.from_int(4);
  const GL prime = lp(k, {{1, 1}}) - GL::constant(lambda);
  EXPECT_EQ(prime.star(), GL::monomial(s.scalar, -1) * (lp(k, {{1, 1}}) - GL::constant(s.root)));
}

TEST(ExactDiv, DividesOrReportsRemainder) {
  Rationals q;
  const auto a = lp(q, {{-1, 1}, {0, 2}, {1, 1}});
  EXPECT_EQ(exact_div(a, lp(q, {{0, 1}, {1, 1}})), lp(q, {{-1, 1}, {0, 1}}));
  EXPECT_FALSE(exact_div(a, lp(q, {{0, 1}, {1, 2}})).has_value());
  EXPECT_EQ(kind_of([&] { exact_div(a, QL{}); }), ErrorKind::DivisionByZero);
}

TEST(LaurentFormat, CanonicalText) {
  Rationals q;
  EXPECT_EQ(format(q, lp(q, {{-1, 3}, {0, 1}, {1, 2}})), "3*t^-1 + 1 + 2*t");
  EXPECT_EQ(format(q, lp(q, {{0, 1}, {1, -1}})), "1 - t");
  EXPECT_EQ(format(q, lp(q, {{-2, -1}})), "-t^-2");
  EXPECT_EQ(format(q, QL::constant(q.from_ratio(-1, 2))), "-1/2");
  EXPECT_EQ(format(q, QL{}), "0");
  PrimeClosure k(7);
  EXPECT_EQ(format(k, lp(k, {{0, 1}, {1, -1}})), "1 + 6*t");
}

TEST(LaurentEval, AgreesWithTermSum) {
  PrimeClosure k(11);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_laurent(k, rng);
    const auto x = k.random_nonzero(rng);
    GFElement sum = k.zero();
    for (const auto& [e, c] : a.terms()) sum = sum + c * power(x, e, k.one());
    ASSERT_EQ(a.eval(x, k.one()), sum);
  }
}
