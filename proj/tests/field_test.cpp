#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <thread>
#include <vector>

#include "dinf/field/field.hpp"
#include "test_util.hpp"

using namespace dinf;
using dinf::testing::kind_of;

namespace {

using GPoly = Poly<GFElement>;
using QPoly = Poly<Rational>;

GPoly gpoly(const PrimeClosure& k, std::vector<std::int64_t> c) {
  std::vector<GFElement> v;
  for (auto x : c) v.push_back(k.from_int(x));
  return GPoly(std::move(v));
}

QPoly qpoly(std::vector<std::int64_t> c) {
  Rationals q;
  std::vector<Rational> v;
  for (auto x : c) v.push_back(q.from_int(x));
  return QPoly(std::move(v));
}

template <class E>
Poly<E> expand(const E& unit, const RootMultiset<E>& roots) {
  Poly<E> acc = Poly<E>::constant(unit);
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) acc = acc * Poly<E>::linear(unit * unit.inv(), r.value);
  return acc;
}

}  // namespace

TEST(FieldMake, Characteristics) {
  EXPECT_EQ(characteristic(make_field(FieldSpec::prime_closure(7))), 7u);
  EXPECT_EQ(characteristic(make_field(FieldSpec::rationals())), 0u);
  EXPECT_EQ(kind_of([] { make_field(FieldSpec::prime_closure(2)); }), ErrorKind::CharacteristicTwo);
  EXPECT_EQ(kind_of([] { make_field(FieldSpec::prime_closure(9)); }), ErrorKind::BadSpec);
  EXPECT_EQ(kind_of([] { make_field(FieldSpec::prime_closure(7, 0)); }), ErrorKind::BadSpec);
  EXPECT_EQ(kind_of([] { FieldSpec::parse("fp:x"); }), ErrorKind::BadSpec);
  EXPECT_EQ(FieldSpec::parse("fp:101").p, 101u);
}

TEST(FieldArith, PrimeFieldExamples) {
  PrimeClosure k(7);
  EXPECT_EQ(k.from_int(3) + k.from_int(5), k.from_int(1));
  // Brute-force oracle for the inverse of 4 mod 7.
  std::int64_t expected = 0;
  for (std::int64_t b = 1; b < 7; ++b)
    if (4 * b % 7 == 1) expected = b;
  EXPECT_EQ(expected, 2);
  EXPECT_EQ(k.from_int(4).inv(), k.from_int(expected));
  EXPECT_EQ(kind_of([&] { k.zero().inv(); }), ErrorKind::DivisionByZero);
  EXPECT_EQ(k.from_decimal("700000000000000000000003"), k.from_int(3));
}

TEST(FieldArith, RationalExamples) {
  Rationals q;
  EXPECT_EQ(q.from_ratio(1, 2) + q.from_ratio(1, 3), q.from_ratio(5, 6));
  EXPECT_EQ(q.from_ratio(2, -4).to_string(), "-1/2");
  EXPECT_EQ(kind_of([&] { q.zero().inv(); }), ErrorKind::DivisionByZero);
}

TEST(PolyArith, Examples) {
  PrimeClosure k(7);
  auto [quot, rem] = divmod(qpoly({-1, 0, 1}), qpoly({-1, 1}));
  EXPECT_EQ(quot, qpoly({1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(qpoly({-1, 0, 1}), qpoly({1, -2, 1})), qpoly({-1, 1}));
  EXPECT_TRUE(gcd(QPoly{}, QPoly{}).is_zero());
  EXPECT_EQ(eval(gpoly(k, {1, 0, 1}), k.from_int(3)), k.from_int((9 + 1) % 7));
  EXPECT_EQ(derivative(gpoly(k, {1, 2, 3})), gpoly(k, {2, 6}));
  EXPECT_EQ(kind_of([&] { divmod(qpoly({1}), QPoly{}); }), ErrorKind::DivisionByZero);
}

TEST(RootsOf, PrimeFieldBruteForce) {
  PrimeClosure k(7);
  auto roots = roots_of(k, gpoly(k, {-2, 0, 1}));
  std::vector<std::int64_t> brute;
  for (std::int64_t x = 0; x < 7; ++x)
    if ((x * x - 2) % 7 == 0) brute.push_back(x);
  ASSERT_EQ(brute, (std::vector<std::int64_t>{3, 4}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].value, k.from_int(3));
  EXPECT_EQ(roots[1].value, k.from_int(4));
  EXPECT_EQ(roots[0].multiplicity, 1);
}

TEST(RootsOf, QuadraticExtensionMatchesEnumeration) {
  PrimeClosure k(7);
  auto roots = roots_of(k, gpoly(k, {1, 0, 1}));
  ASSERT_EQ(roots.size(), 2u);
  // Enumerate all 49 elements of the degree-2 level.
  std::vector<GFElement> brute;
  for (std::uint64_t a = 0; a < 7; ++a)
    for (std::uint64_t b = 0; b < 7; ++b) {
      const std::uint64_t c[2] = {a, b};
      auto x = k.from_coords(2, c);
      if ((x * x + k.one()).is_zero()) brute.push_back(x);
    }
  std::sort(brute.begin(), brute.end());
  ASSERT_EQ(brute.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(roots[i].value, brute[i]);
    EXPECT_EQ(roots[i].value.level(), 2);
    EXPECT_EQ(roots[i].multiplicity, 1);
  }
}

TEST(RootsOf, RationalBackend) {
  Rationals q;
  auto roots = roots_of(q, qpoly({1, -2, 1}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].value, q.one());
  EXPECT_EQ(roots[0].multiplicity, 2);
  EXPECT_EQ(kind_of([&] { roots_of(q, qpoly({-1, -2, 1})); }), ErrorKind::NotSplitOverField);
  // 6t^2 - 5t + 1 = (2t - 1)(3t - 1)
  auto frac = roots_of(q, qpoly({1, -5, 6}));
  ASSERT_EQ(frac.size(), 2u);
  EXPECT_EQ(frac[0].value, q.from_ratio(1, 3));
  EXPECT_EQ(frac[1].value, q.from_ratio(1, 2));
  auto with_zero = roots_of(q, qpoly({0, 0, -1, 1}));
  ASSERT_EQ(with_zero.size(), 2u);
  EXPECT_EQ(with_zero[0].multiplicity, 2);
}

TEST(Embed, Examples) {
  PrimeClosure k(7);
  auto three = k.embed(k.from_int(3), 2);
  EXPECT_EQ(three.level, 2);
  const Level& l2 = k.tower().level(2);
  EXPECT_EQ(l2.mul(three.coords, three.coords), l2.from_base(2));

  auto roots = roots_of(k, gpoly(k, {1, 0, 1}));
  auto r4 = k.embed(roots[0].value, 4);
  const Level& l4 = k.tower().level(4);
  EXPECT_TRUE(Level::is_zero(l4.add(l4.mul(r4.coords, r4.coords), l4.from_base(1))));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto x = k.random_element(rng, 2);
    EXPECT_EQ(k.embed(k.embed(x, 2), 6), k.embed(x, 6));
  }
  EXPECT_EQ(kind_of([&] { k.embed(roots[0].value, 3); }), ErrorKind::BadLevel);
  EXPECT_EQ(kind_of([&] { k.embed(roots[0].value, 128); }), ErrorKind::LevelOverflow);
}

TEST(FieldArith, LevelOverflowOnCompositum) {
  PrimeClosure k(7, 4);
  std::mt19937_64 rng(3);
  auto a = k.random_element(rng, 2);
  while (a.level() != 2) a = k.random_element(rng, 2);
  auto b = k.random_element(rng, 4);
  while (b.level() != 4) b = k.random_element(rng, 4);
  EXPECT_NO_THROW(a * b);
  PrimeClosure small(7, 5);
  EXPECT_EQ(kind_of([&] { small.random_element(rng, 6); }), ErrorKind::LevelOverflow);
  auto c = small.random_element(rng, 2);
  while (c.level() != 2) c = small.random_element(rng, 2);
  auto d = small.random_element(rng, 3);
  while (d.level() != 3) d = small.random_element(rng, 3);
  EXPECT_EQ(kind_of([&] { c + d; }), ErrorKind::LevelOverflow);
}

template <class K>
void check_field_axioms(const K& k, auto draw) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    auto x = draw(rng), y = draw(rng), z = draw(rng);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x * y, y * x);
    ASSERT_TRUE((x - x).is_zero());
    ASSERT_EQ(x * k.one(), x);
    if (!x.is_zero()) {
      ASSERT_EQ(x * x.inv(), k.one());
    }
  }
}

TEST(FieldProperties, AxiomsPrimeClosureMixedLevels) {
  PrimeClosure k(5);
  check_field_axioms(k, [&](std::mt19937_64& rng) { return k.random_element(rng, static_cast<int>(1 + rng() % 3)); });
}

TEST(FieldProperties, AxiomsRationals) {
  Rationals q;
  check_field_axioms(q, [&](std::mt19937_64& rng) {
    return q.from_ratio(static_cast<std::int64_t>(rng() % 19) - 9, static_cast<std::int64_t>(1 + rng() % 7));
  });
}

TEST(FieldProperties, RootsReexpandAndFrobeniusPermutes) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    PrimeClosure k(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 60; ++i) {
      const int deg = 1 + static_cast<int>(rng() % 7);
      std::vector<GFElement> c;
      for (int j = 0; j < deg; ++j) c.push_back(k.random_element(rng));
      c.push_back(k.random_nonzero(rng));
      GPoly a(c);
      auto roots = roots_of(k, a);
      ASSERT_EQ(total_multiplicity(roots), deg);
      ASSERT_EQ(expand(a.lead(), roots), a);
      std::vector<GFElement> values, images;
      for (const auto& r : roots) {
        values.push_back(r.value);
        images.push_back(k.frobenius(r.value));
      }
      std::sort(images.begin(), images.end());
      ASSERT_EQ(images, values);
    }
  }
}

TEST(FieldProperties, ExtensionCoefficientPolynomials) {
  PrimeClosure k(3);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    std::vector<GFElement> c;
    for (int j = 0; j < 4; ++j) c.push_back(k.random_element(rng, 2));
    c.push_back(k.one());
    GPoly a(c);
    auto roots = roots_of(k, a);
    ASSERT_EQ(total_multiplicity(roots), 4);
    ASSERT_EQ(expand(a.lead(), roots), a);
  }
}

TEST(FieldProperties, EmbeddingsCommuteOnDivisorChains) {
  PrimeClosure k(3);
  std::mt19937_64 rng(5);
  for (int e : {4, 6, 8, 12}) {
    for (int d : detail::divisors(e)) {
      for (int c : detail::divisors(d)) {
        for (int i = 0; i < 5; ++i) {
          LevelCoords x{c, Coords(static_cast<std::size_t>(c))};
          for (auto& v : x.coords) v = rng() % 3;
          ASSERT_EQ(k.embed(k.embed(x, d), e), k.embed(x, e)) << c << "|" << d << "|" << e;
        }
      }
    }
  }
}

TEST(FieldProperties, EmbeddingIsMultiplicative) {
  PrimeClosure k(5);
  std::mt19937_64 rng(8);
  const Level& l6 = k.tower().level(6);
  for (int i = 0; i < 50; ++i) {
    auto x = k.random_element(rng, 3), y = k.random_element(rng, 3);
    auto lhs = k.embed(x * y, 6).coords;
    auto rhs = l6.mul(k.embed(x, 6).coords, k.embed(y, 6).coords);
    ASSERT_EQ(lhs, rhs);
  }
}

TEST(FieldConcurrency, LevelCreationIsIdempotent) {
  PrimeClosure k(5);
  const Level* seen[2] = {nullptr, nullptr};
  std::thread a([&] { seen[0] = &k.tower().level(6); });
  std::thread b([&] { seen[1] = &k.tower().level(6); });
  a.join();
  b.join();
  EXPECT_EQ(seen[0], seen[1]);
  PrimeClosure fresh(5);
  auto& l = fresh.tower().level(6);
  EXPECT_TRUE(std::equal(l.modulus().begin(), l.modulus().end(), seen[0]->modulus().begin()));
}
