#pragma once

// Dense univariate polynomials over an exact field element type.
//
// The element type E must be a regular value type whose default-constructed
// value is zero, with the usual field operators, `operator==` and a member
// `is_zero()`; nonzero values provide `inv()`. Both field backends and the
// fixed-level tower arithmetic satisfy this.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dinf/error.hpp"

namespace dinf {

/// n·x by double-and-add, so no integer embedding of the field is needed.
template <class E>
E times_int(const E& x, std::int64_t n) {
  if (n < 0) return -times_int(x, -n);
  E acc{};
  E base = x;
  while (n > 0) {
    if (n & 1) acc = acc + base;
    n >>= 1;
    if (n > 0) base = base + base;
  }
  return acc;
}

template <class E>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const E& c) { return Poly(std::vector<E>{c}); }
  static Poly monomial(const E& c, std::size_t k) {
    std::vector<E> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
  }
  /// t - root
  static Poly linear(const E& one, const E& root) { return Poly(std::vector<E>{-root, one}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const E> coeffs() const noexcept { return c_; }
  E coeff(std::size_t i) const { return i < c_.size() ? c_[i] : E{}; }
  const E& lead() const { return c_.back(); }

  Poly scaled(const E& s) const {
    if (s.is_zero()) return {};
    std::vector<E> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
    return Poly(std::move(out));
  }

  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<E> out(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return Poly(std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<E> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size())
        out[i] = a.c_[i] + b.c_[i];
      else
        out[i] = i < a.c_.size() ? a.c_[i] : b.c_[i];
    }
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<E> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.c_[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<E> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<E> c_;
};

/// Quotient and remainder with a = q·b + r, deg r < deg b.
template <class E>
std::pair<Poly<E>, Poly<E>> divmod(const Poly<E>& a, const Poly<E>& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<E>{}, a};
  std::vector<E> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<E> quot(rem.size() - db);
  const E inv_lead = b.lead().inv();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const E c = rem[k + db] * inv_lead;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - c * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly<E>(std::move(quot)), Poly<E>(std::move(rem))};
}

template <class E>
Poly<E> operator%(const Poly<E>& a, const Poly<E>& b) {
  return divmod(a, b).second;
}

template <class E>
Poly<E> monic(const Poly<E>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inv());
}

/// Monic gcd; gcd(0, 0) = 0.
template <class E>
Poly<E> gcd(Poly<E> a, Poly<E> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class E>
Poly<E> derivative(const Poly<E>& a) {
  if (a.degree() < 1) return {};
  std::vector<E> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = times_int(a.coeffs()[i], static_cast<std::int64_t>(i));
  return Poly<E>(std::move(out));
}

template <class E>
E eval(const Poly<E>& a, const E& x) {
  E acc{};
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a.coeffs()[i];
  return acc;
}

/// base^e mod m with the exponent given as little-endian bits.
template <class E>
Poly<E> powmod(const Poly<E>& base, const std::vector<bool>& exponent_bits, const Poly<E>& m) {
  Poly<E> result = Poly<E>::constant(m.lead() * m.lead().inv()) % m;
  Poly<E> b = base % m;
  for (std::size_t i = exponent_bits.size(); i-- > 0;) {
    result = (result * result) % m;
    if (exponent_bits[i]) result = (result * b) % m;
  }
  return result;
}

}  // namespace dinf
