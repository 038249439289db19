#pragma once

// The rationals with arbitrary-precision numerator and denominator. Root
// finding is partial: only rational roots exist here, and anything that is
// left over raises NotSplitOverField instead of being approximated.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dinf/error.hpp"
#include "dinf/field/roots.hpp"
#include "dinf/poly.hpp"

namespace dinf {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() = default;
  Rational(BigRational v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den) {
    if (den == 0) raise(ErrorKind::DivisionByZero, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = BigRational(std::move(num), std::move(den));
  }

  const BigRational& value() const noexcept { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational inv() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(BigRational(1) / v_);
  }

  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
  friend Rational operator-(const Rational& a) { return Rational(BigRational(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigRational v_;
};

/// Handle for Q. Stateless; characteristic 0.
class Rationals {
 public:
  using element_type = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }
  std::string name() const { return "q"; }

  Rational zero() const { return {}; }
  Rational one() const { return from_int(1); }
  Rational from_int(std::int64_t n) const { return Rational(BigRational(n)); }
  Rational from_decimal(std::string_view digits) const { return Rational(BigRational(BigInt(std::string(digits)))); }
  Rational from_ratio(std::int64_t num, std::int64_t den) const { return Rational(BigInt(num), BigInt(den)); }

  /// Draws from {±1, ±2, ±3, ±1/2}.
  template <class Rng>
  Rational random_nonzero(Rng& rng) const {
    static constexpr std::int64_t kNum[] = {1, -1, 2, -2, 3, -3, 1, -1};
    static constexpr std::int64_t kDen[] = {1, 1, 1, 1, 1, 1, 2, 2};
    const auto i = rng() % 8;
    return from_ratio(kNum[i], kDen[i]);
  }
  /// Small integers in [-3, 3].
  template <class Rng>
  Rational random_element(Rng& rng, int = 1) const {
    return from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  }

  std::string format(const Rational& x) const { return x.to_string(); }
  bool is_negative(const Rational& x) const { return x.value() < 0; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Rational roots with multiplicity; NotSplitOverField if an irreducible
/// factor of degree >= 2 remains.
inline RootMultiset<Rational> roots_of(const Rationals& field, const Poly<Rational>& a) {
  if (a.is_zero()) raise(ErrorKind::DivisionByZero, "roots of the zero polynomial");
  RootMultiset<Rational> out;
  std::size_t low = 0;
  while (a.coeffs()[low].is_zero()) ++low;
  if (low > 0) out.push_back({field.zero(), static_cast<int>(low)});
  Poly<Rational> rest(std::vector<Rational>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(low), a.coeffs().end()));

  while (rest.degree() > 0) {
    // Clear denominators to get integer end coefficients for the rational root test.
    BigInt den_lcm = 1;
    for (const auto& c : rest.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    const BigInt a0 = boost::multiprecision::numerator(BigRational(rest.coeffs().front().value() * den_lcm));
    const BigInt an = boost::multiprecision::numerator(BigRational(rest.lead().value() * den_lcm));
    bool found = false;
    for (const auto& num : detail::positive_divisors(a0)) {
      for (const auto& den : detail::positive_divisors(an)) {
        for (int sign : {1, -1}) {
          const Rational r(BigInt(num * sign), den);
          if (!eval(rest, r).is_zero()) continue;
          const Poly<Rational> lin(std::vector<Rational>{-r, field.one()});
          int mult = 0;
          for (;;) {
            auto [q, rem] = divmod(rest, lin);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
          }
          out.push_back({r, mult});
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) raise(ErrorKind::NotSplitOverField, "factor of degree " + std::to_string(rest.degree()) + " has no rational root");
  }
  return normalize_roots(std::move(out));
}

}  // namespace dinf
