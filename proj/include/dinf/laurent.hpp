#pragma once

// Laurent polynomials K[t, 1/t], stored as t^v * body(t) with a body whose
// constant and leading coefficients are nonzero.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/field/roots.hpp"
#include "dinf/poly.hpp"

namespace dinf {

/// x^n for any integer n; x must be nonzero when n < 0.
template <class E>
E power(const E& x, std::int64_t n, const E& one) {
  E base = n < 0 ? x.inv() : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  E acc = one;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

template <class E>
class Laurent {
 public:
  Laurent() = default;
  Laurent(int valuation, Poly<E> body) : v_(valuation), body_(std::move(body)) { normalize(); }

  static Laurent constant(const E& c) { return Laurent(0, Poly<E>::constant(c)); }
  static Laurent monomial(const E& c, int k) { return Laurent(k, Poly<E>::constant(c)); }
  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  static Laurent from_terms(const std::vector<std::pair<int, E>>& terms) {
    Laurent out;
    for (const auto& [k, c] : terms) out = out + monomial(c, k);
    return out;
  }

  bool is_zero() const noexcept { return body_.is_zero(); }
  /// Lowest exponent; 0 for the zero value.
  int min_exp() const noexcept { return v_; }
  int max_exp() const noexcept { return v_ + body_.degree(); }
  const Poly<E>& body() const noexcept { return body_; }
  E coeff(int k) const {
    if (is_zero() || k < v_) return E{};
    return body_.coeff(static_cast<std::size_t>(k - v_));
  }
  std::vector<std::pair<int, E>> terms() const {
    std::vector<std::pair<int, E>> out;
    for (std::size_t i = 0; i < body_.size(); ++i)
      if (!body_.coeffs()[i].is_zero()) out.emplace_back(v_ + static_cast<int>(i), body_.coeffs()[i]);
    return out;
  }

  /// h(t) -> h(1/t)
  Laurent star() const {
    if (is_zero()) return {};
    auto c = body_.coeffs();
    std::vector<E> rev(c.rbegin(), c.rend());
    return Laurent(-max_exp(), Poly<E>(std::move(rev)));
  }

  Laurent shifted(int k) const { return is_zero() ? Laurent{} : Laurent(v_ + k, body_); }
  Laurent scaled(const E& s) const { return Laurent(v_, body_.scaled(s)); }

  E eval(const E& x, const E& one) const {
    if (is_zero()) return E{};
    return dinf::eval(body_, x) * power(x, v_, one);
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int v = std::min(a.v_, b.v_);
    return Laurent(v, a.body_.shifted(static_cast<std::size_t>(a.v_ - v)) +
                          b.body_.shifted(static_cast<std::size_t>(b.v_ - v)));
  }
  friend Laurent operator-(const Laurent& a) { return Laurent(a.v_, -a.body_); }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Laurent(a.v_ + b.v_, a.body_ * b.body_);
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.v_ == b.v_ && a.body_ == b.body_; }

 private:
  void normalize() {
    if (body_.is_zero()) {
      v_ = 0;
      return;
    }
    std::size_t low = 0;
    while (body_.coeffs()[low].is_zero()) ++low;
    if (low == 0) return;
    v_ += static_cast<int>(low);
    body_ = Poly<E>(std::vector<E>(body_.coeffs().begin() + static_cast<std::ptrdiff_t>(low), body_.coeffs().end()));
  }

  int v_ = 0;
  Poly<E> body_;
};

/// a / b when b divides a in K[t, 1/t].
template <class E>
std::optional<Laurent<E>> exact_div(const Laurent<E>& a, const Laurent<E>& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "Laurent division by zero");
  if (a.is_zero()) return Laurent<E>{};
  auto [q, r] = divmod(a.body(), b.body());
  if (!r.is_zero()) return std::nullopt;
  return Laurent<E>(a.min_exp() - b.min_exp(), std::move(q));
}

/// λ t^m
template <class E>
struct UnitPart {
  E scalar;
  int exponent = 0;
  friend bool operator==(const UnitPart&, const UnitPart&) = default;
};

template <class E>
UnitPart<E> unit_decompose(const Laurent<E>& a) {
  if (a.is_zero()) raise(ErrorKind::NotAUnit, "zero is not a unit");
  if (a.body().degree() != 0) raise(ErrorKind::NotAUnit, "more than one term");
  return {a.body().coeffs()[0], a.min_exp()};
}

template <class E>
bool is_unit(const Laurent<E>& a) {
  return !a.is_zero() && a.body().degree() == 0;
}

/// unit * prod (t - λ_i)^{m_i}
template <class E>
struct LaurentFactorization {
  UnitPart<E> unit;
  RootMultiset<E> primes;

  int prime_count() const { return total_multiplicity(primes); }

  Laurent<E> expand(const E& one) const {
    Poly<E> acc = Poly<E>::constant(unit.scalar);
    for (const auto& r : primes)
      for (int i = 0; i < r.multiplicity; ++i) acc = acc * Poly<E>::linear(one, r.value);
    return Laurent<E>(unit.exponent, std::move(acc));
  }
};

template <class K, class E = typename K::element_type>
LaurentFactorization<E> factor_linear(const K& field, const Laurent<E>& a) {
  if (a.is_zero()) raise(ErrorKind::DivisionByZero, "factorization of zero");
  const E lead = a.body().lead();
  LaurentFactorization<E> out{{lead, a.min_exp()}, {}};
  if (a.body().degree() > 0) out.primes = roots_of(field, monic(a.body()));
  return out;
}

/// (t - λ)* = t^-1 - λ = (-λ) t^-1 (t - 1/λ)
template <class E>
struct StarredPrime {
  E scalar;
  E root;
};

template <class E>
StarredPrime<E> star_of_prime(const E& lambda) {
  if (lambda.is_zero()) raise(ErrorKind::DivisionByZero, "t is a unit, not a prime");
  return {-lambda, lambda.inv()};
}

/// Terms by increasing exponent, e.g. "3*t^-1 + 1 + 2*t".
template <class K, class E = typename K::element_type>
std::string format(const K& field, const Laurent<E>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    const bool neg = field.is_negative(c);
    const E mag = neg ? -c : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const bool unit_coeff = mag == field.one();
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty())
      out += field.format(mag);
    else if (unit_coeff)
      out += mono;
    else
      out += field.format(mag) + "*" + mono;
  }
  return out;
}

}  // namespace dinf
