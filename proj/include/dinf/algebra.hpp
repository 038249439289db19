#pragma once

// The group algebra R = K<s, t : s^2 = 1, ts = st^-1> of the infinite
// dihedral group. Every element is f(t) + s*g(t) for Laurent polynomials
// f, g; the other presentation uses a = s, b = st (so t = ab).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "dinf/error.hpp"
#include "dinf/laurent.hpp"

namespace dinf {

template <class E>
struct AlgebraElement {
  Laurent<E> f;
  Laurent<E> g;

  bool is_zero() const noexcept { return f.is_zero() && g.is_zero(); }

  friend AlgebraElement operator+(const AlgebraElement& u, const AlgebraElement& v) { return {u.f + v.f, u.g + v.g}; }
  friend AlgebraElement operator-(const AlgebraElement& u, const AlgebraElement& v) { return {u.f - v.f, u.g - v.g}; }
  friend AlgebraElement operator-(const AlgebraElement& u) { return {-u.f, -u.g}; }
  /// (f1 + s g1)(f2 + s g2) = (f1 f2 + g1* g2) + s (f1* g2 + g1 f2)
  friend AlgebraElement operator*(const AlgebraElement& u, const AlgebraElement& v) {
    return {u.f * v.f + u.g.star() * v.g, u.f.star() * v.g + u.g * v.f};
  }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  AlgebraElement scaled(const E& c) const { return {f.scaled(c), g.scaled(c)}; }
};

/// 2x2 matrix over K[t, 1/t], row-major.
template <class E>
struct Matrix2 {
  Laurent<E> a, b, c, d;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// f + s g  ->  [[f, g*], [g, f*]]
template <class E>
Matrix2<E> iota(const AlgebraElement<E>& u) {
  return {u.f, u.g.star(), u.g, u.f.star()};
}

/// Inverse of iota on matrices of the right shape.
template <class E>
std::optional<AlgebraElement<E>> from_matrix(const Matrix2<E>& m) {
  if (m.b != m.c.star() || m.d != m.a.star()) return std::nullopt;
  return AlgebraElement<E>{m.a, m.c};
}

/// (trace, determinant) of iota(u): (f + f*, f f* - g g*).
template <class E>
std::pair<Laurent<E>, Laurent<E>> trace_det(const AlgebraElement<E>& u) {
  return {u.f + u.f.star(), u.f * u.f.star() - u.g * u.g.star()};
}

// ---- constants and generators ---------------------------------------------

template <class K, class E = typename K::element_type>
AlgebraElement<E> scalar(const K& k, const E& c) {
  (void)k;
  return {Laurent<E>::constant(c), {}};
}
template <class K, class E = typename K::element_type>
AlgebraElement<E> one(const K& k) {
  return scalar(k, k.one());
}
/// t^m
template <class K, class E = typename K::element_type>
AlgebraElement<E> t_power(const K& k, int m) {
  return {Laurent<E>::monomial(k.one(), m), {}};
}
/// s t^m
template <class K, class E = typename K::element_type>
AlgebraElement<E> s_t_power(const K& k, int m) {
  return {{}, Laurent<E>::monomial(k.one(), m)};
}
template <class K>
auto gen_s(const K& k) {
  return s_t_power(k, 0);
}
template <class K>
auto gen_t(const K& k) {
  return t_power(k, 1);
}
template <class K>
auto gen_a(const K& k) {
  return gen_s(k);
}
template <class K>
auto gen_b(const K& k) {
  return s_t_power(k, 1);
}

// ---- involutions and idempotents ------------------------------------------

/// u^2 = 1, i.e. f^2 + g* g = 1 and g (f + f*) = 0.
template <class K, class E = typename K::element_type>
bool is_involution(const K& k, const AlgebraElement<E>& u) {
  return u.f * u.f + u.g.star() * u.g == Laurent<E>::constant(k.one()) && (u.g * (u.f + u.f.star())).is_zero();
}

template <class E>
bool is_idempotent(const AlgebraElement<E>& r) {
  return r * r == r;
}

/// 2r - 1
template <class K, class E = typename K::element_type>
AlgebraElement<E> to_involution(const K& k, const AlgebraElement<E>& r) {
  return r.scaled(k.from_int(2)) - one(k);
}

/// (u + 1) / 2
template <class K, class E = typename K::element_type>
AlgebraElement<E> to_idempotent(const K& k, const AlgebraElement<E>& u) {
  return (u + one(k)).scaled(k.from_int(2).inv());
}

// ---- one-dimensional characters ----------------------------------------------

/// The representation with a -> alpha, b -> beta (so s -> alpha, t -> alpha*beta).
struct Character {
  int alpha = 1;
  int beta = 1;
  friend bool operator==(const Character&, const Character&) = default;
};

inline constexpr std::array<Character, 4> kCharacters{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

template <class K, class E = typename K::element_type>
E character_eval(const K& k, Character chi, const AlgebraElement<E>& u) {
  const E x = k.from_int(chi.alpha * chi.beta);
  return u.f.eval(x, k.one()) + k.from_int(chi.alpha) * u.g.eval(x, k.one());
}

// ---- units ------------------------------------------------------------------

/// v^-1 = (F* - s G) / D with D = F F* - G G*. D is self-dual, so it is a unit
/// exactly when it is a nonzero monomial of exponent 0.
template <class K, class E = typename K::element_type>
AlgebraElement<E> inverse(const K& k, const AlgebraElement<E>& v) {
  const auto det = trace_det(v).second;
  if (!is_unit(det)) raise(ErrorKind::NotInvertible, "determinant is not a unit of K[t, 1/t]");
  const auto [lambda, m] = unit_decompose(det);
  const auto dinv = Laurent<E>::monomial(lambda.inv(), -m);
  AlgebraElement<E> out{v.f.star() * dinv, -(v.g * dinv)};
  if (v * out != one(k) || out * v != one(k))
    raise(ErrorKind::InverseOutsideR, "adjugate inverse does not lie in R");
  return out;
}

/// v^-1 u v
template <class K, class E = typename K::element_type>
AlgebraElement<E> conjugate(const K& k, const AlgebraElement<E>& v, const AlgebraElement<E>& u) {
  return inverse(k, v) * u * v;
}

/// 1 + e x (1 - e); the middle term squares to zero.
template <class K, class E = typename K::element_type>
AlgebraElement<E> unipotent_unit(const K& k, const AlgebraElement<E>& e, const AlgebraElement<E>& x) {
  if (!is_idempotent(e)) raise(ErrorKind::NotIdempotent, "unipotent_unit needs an idempotent");
  return one(k) + e * x * (one(k) - e);
}

// ---- the six canonical involutions ----------------------------------------------

struct CanonicalInvolution {
  enum class Kind { One, MinusOne, Eps };
  Kind kind = Kind::One;
  int epsilon = 1;  // Eps only
  int theta = 0;    // Eps only

  static CanonicalInvolution plus_one() { return {Kind::One, 1, 0}; }
  static CanonicalInvolution minus_one() { return {Kind::MinusOne, 1, 0}; }
  static CanonicalInvolution eps(int epsilon, int theta) { return {Kind::Eps, epsilon, theta}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::One: return "One";
      case Kind::MinusOne: return "MinusOne";
      case Kind::Eps: return std::string("Eps(") + (epsilon > 0 ? "+1" : "-1") + "," + std::to_string(theta) + ")";
    }
    return {};
  }
  /// The representative in the a, b alphabet: 1, -1, a, -a, b, -b.
  std::string representative_name() const {
    switch (kind) {
      case Kind::One: return "1";
      case Kind::MinusOne: return "-1";
      case Kind::Eps: return std::string(epsilon > 0 ? "" : "-") + (theta == 0 ? "a" : "b");
    }
    return {};
  }

  friend bool operator==(const CanonicalInvolution& x, const CanonicalInvolution& y) {
    if (x.kind != y.kind) return false;
    return x.kind != Kind::Eps || (x.epsilon == y.epsilon && x.theta == y.theta);
  }
};

inline const std::array<CanonicalInvolution, 6>& all_canonical_involutions() {
  static const std::array<CanonicalInvolution, 6> labels{
      CanonicalInvolution::plus_one(),     CanonicalInvolution::minus_one(), CanonicalInvolution::eps(1, 0),
      CanonicalInvolution::eps(-1, 0), CanonicalInvolution::eps(1, 1),   CanonicalInvolution::eps(-1, 1)};
  return labels;
}

/// 1, -1 or u_{eps,theta} = eps * s t^theta.
template <class K, class E = typename K::element_type>
AlgebraElement<E> representative(const K& k, const CanonicalInvolution& label) {
  switch (label.kind) {
    case CanonicalInvolution::Kind::One: return one(k);
    case CanonicalInvolution::Kind::MinusOne: return -one(k);
    case CanonicalInvolution::Kind::Eps: return s_t_power(k, label.theta).scaled(k.from_int(label.epsilon));
  }
  return one(k);
}

// ---- random generation --------------------------------------------------------

/// Laurent polynomial with exponents in [lo, hi] and random coefficients.
template <class K, class Rng, class E = typename K::element_type>
Laurent<E> random_laurent(const K& k, Rng& rng, int lo, int hi) {
  std::vector<E> c(static_cast<std::size_t>(hi - lo + 1));
  for (auto& x : c) x = k.random_element(rng);
  return Laurent<E>(lo, Poly<E>(std::move(c)));
}

template <class K, class Rng, class E = typename K::element_type>
AlgebraElement<E> random_element(const K& k, Rng& rng, int degree_bound) {
  return {random_laurent(k, rng, -degree_bound, degree_bound), random_laurent(k, rng, -degree_bound, degree_bound)};
}

/// The four idempotents (1 -+ a)/2 and (1 -+ b)/2.
template <class K, class E = typename K::element_type>
std::array<AlgebraElement<E>, 4> basic_idempotents(const K& k) {
  const E half = k.from_int(2).inv();
  return {(one(k) - gen_a(k)).scaled(half), (one(k) + gen_a(k)).scaled(half), (one(k) - gen_b(k)).scaled(half),
          (one(k) + gen_b(k)).scaled(half)};
}

/// Product of num_factors factors, each uniformly one of: a nonzero scalar,
/// t^m, s t^m (|m| <= 3), or a unipotent 1 + e x (1 - e) with e a basic
/// idempotent and x having t-exponents in [0, degree_bound].
template <class K, class Rng, class E = typename K::element_type>
AlgebraElement<E> random_unit(const K& k, Rng& rng, int degree_bound, int num_factors) {
  AlgebraElement<E> v = one(k);
  for (int i = 0; i < num_factors; ++i) {
    AlgebraElement<E> factor;
    switch (rng() % 4) {
      case 0: factor = scalar(k, k.random_nonzero(rng)); break;
      case 1: factor = t_power(k, static_cast<int>(rng() % 7) - 3); break;
      case 2: factor = s_t_power(k, static_cast<int>(rng() % 7) - 3); break;
      default: {
        const auto e = basic_idempotents(k)[rng() % 4];
        AlgebraElement<E> x{random_laurent(k, rng, 0, degree_bound), random_laurent(k, rng, 0, degree_bound)};
        factor = unipotent_unit(k, e, x);
      }
    }
    v = v * factor;
  }
  return v;
}

struct InvolutionParams {
  int degree_bound = 3;
  int max_factors = 4;
  std::optional<CanonicalInvolution> force_label;
};

template <class E>
struct GeneratedInvolution {
  AlgebraElement<E> u;
  CanonicalInvolution label;
  AlgebraElement<E> conjugator;
};

/// v^-1 r v for a uniformly chosen representative r and a random unit v with
/// 0..max_factors factors. `force_unit` overrides v.
template <class K, class Rng, class E = typename K::element_type>
GeneratedInvolution<E> random_involution(const K& k, Rng& rng, const InvolutionParams& params,
                                         const std::optional<AlgebraElement<E>>& force_unit = std::nullopt) {
  const auto label = params.force_label ? *params.force_label : all_canonical_involutions()[rng() % 6];
  AlgebraElement<E> v;
  if (force_unit) {
    v = *force_unit;
  } else {
    const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(params.max_factors + 1));
    v = random_unit(k, rng, params.degree_bound, n);
  }
  return {conjugate(k, v, representative(k, label)), label, v};
}

// ---- text -------------------------------------------------------------------

/// "f-part + s*(g-part)"; a zero part is omitted.
template <class K, class E = typename K::element_type>
std::string format(const K& k, const AlgebraElement<E>& u) {
  if (u.g.is_zero()) return format(k, u.f);
  const std::string gs = "s*(" + format(k, u.g) + ")";
  if (u.f.is_zero()) return gs;
  return format(k, u.f) + " + " + gs;
}

}  // namespace dinf
