#pragma once

// Root finding over a single finite field F_q, q = p^L, for polynomials whose
// coefficients live at that level: squarefree decomposition, distinct-degree
// splitting and Cantor-Zassenhaus equal-degree splitting into linear factors.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dinf/field/level.hpp"
#include "dinf/poly.hpp"

namespace dinf::detail {

using LPoly = Poly<LevelElem>;
using boost::multiprecision::cpp_int;

inline std::vector<bool> to_bits(cpp_int n) {
  std::vector<bool> bits;
  while (n > 0) {
    bits.push_back(static_cast<bool>(n & 1));
    n >>= 1;
  }
  return bits;
}

inline cpp_int field_order(const Level& lv) {
  cpp_int q = 1;
  for (int i = 0; i < lv.degree(); ++i) q *= lv.p();
  return q;
}

inline LevelElem level_one(const Level& lv) { return {lv, lv.from_base(1)}; }

inline LPoly x_poly(const Level& lv) { return LPoly::monomial(level_one(lv), 1); }

/// Unique p-th root in a finite field of characteristic p: a^(p^(L-1)).
inline LevelElem pth_root(const LevelElem& a, const Level& lv) {
  if (!a.level()) return a;
  LevelElem r = a;
  for (int i = 1; i < lv.degree(); ++i) r = r.pow(lv.p());
  return r;
}

/// f(x) = g(x^p) -> g^(1/p)(x); requires f' = 0.
inline LPoly pth_root(const LPoly& f, const Level& lv) {
  const auto p = static_cast<std::size_t>(lv.p());
  std::vector<LevelElem> out(f.size() / p + 1);
  for (std::size_t i = 0; i < f.size(); i += p) out[i / p] = pth_root(f.coeffs()[i], lv);
  return LPoly(std::move(out));
}

/// Monic squarefree factors with multiplicities; f must be monic and nonconstant.
inline std::vector<std::pair<LPoly, int>> squarefree(const LPoly& f, const Level& lv) {
  std::vector<std::pair<LPoly, int>> out;
  const LPoly one = LPoly::constant(level_one(lv));
  LPoly c = gcd(f, derivative(f));
  LPoly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    LPoly y = gcd(w, c);
    LPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    ++i;
    w = std::move(y);
    c = divmod(c, w).first;
  }
  if (c.degree() > 0) {
    const int p = static_cast<int>(lv.p());
    for (auto& [g, m] : squarefree(monic(pth_root(c, lv)), lv)) out.emplace_back(std::move(g), m * p);
  }
  return out;
}

/// Splits a monic squarefree f into (product of all irreducible factors of
/// degree k over F_q, k).
inline std::vector<std::pair<LPoly, int>> distinct_degree(LPoly f, const Level& lv) {
  std::vector<std::pair<LPoly, int>> out;
  const auto q_bits = to_bits(field_order(lv));
  const LPoly x = x_poly(lv);
  LPoly h = x % f;
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = powmod(h, q_bits, f);
    LPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = divmod(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

inline void split_linear(const LPoly& f, const Level& lv, const std::vector<bool>& half_bits, std::mt19937_64& rng,
                         std::vector<LevelElem>& roots) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    roots.push_back(-(f.coeffs()[0] * f.lead().inv()));
    return;
  }
  const LevelElem one = level_one(lv);
  const LPoly one_poly = LPoly::constant(one);
  for (;;) {
    Coords c = lv.zero();
    for (auto& v : c) v = rng() % lv.p();
    const LPoly probe(std::vector<LevelElem>{LevelElem(lv, c), one});
    LPoly g = gcd(powmod(probe, half_bits, f) - one_poly, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, lv, half_bits, rng, roots);
      split_linear(divmod(f, g).first, lv, half_bits, rng, roots);
      return;
    }
  }
}

/// All roots of f, which must be a squarefree product of linear factors over
/// this level. The random probes come from a fixed seed so runs reproduce.
inline std::vector<LevelElem> linear_roots(const LPoly& f, const Level& lv) {
  std::vector<LevelElem> roots;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.degree()));
  const auto half_bits = to_bits((field_order(lv) - 1) / 2);
  split_linear(monic(f), lv, half_bits, rng, roots);
  return roots;
}

}  // namespace dinf::detail
