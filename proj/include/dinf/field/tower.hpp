#pragma once

// Lazily built tower of finite fields F_{p^d} approximating the algebraic
// closure of F_p.
//
// Level d is F_p[x]/(h_d) with h_d the lexicographically least monic
// irreducible of degree d (coefficients compared from x^(d-1) down to x^0).
// Embeddings between levels are chosen so that the whole system commutes:
// for every maximal proper divisor d of e, the image of the generator of
// level d is the lexicographically least root of h_d in level e that agrees
// with the embeddings already fixed for the other maximal divisors on their
// common subfield. Every other divisor is embedded through a maximal one.
// Elements are canonically stored at their minimal level.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/field/ff_factor.hpp"
#include "dinf/field/level.hpp"
#include "dinf/field/modular.hpp"

namespace dinf {

namespace detail {

/// Ben-Or irreducibility test over F_p.
inline bool is_irreducible(const RawPoly& h, u64 p) {
  const int n = static_cast<int>(h.size()) - 1;
  if (n <= 1) return n == 1;
  if (h[0] == 0) return false;
  const RawPoly x{0, 1};
  RawPoly u = x;
  for (int i = 1; 2 * i <= n; ++i) {
    // u <- u^p mod h
    RawPoly result{1}, base = u;
    for (u64 e = p; e > 0; e >>= 1) {
      if (e & 1) result = raw_mod(raw_mul(result, base, p), h, p);
      if (e > 1) base = raw_mod(raw_mul(base, base, p), h, p);
    }
    u = std::move(result);
    RawPoly a = h, b = raw_sub(u, x, p);
    while (!b.empty()) {
      RawPoly r = raw_mod(a, b, p);
      a = std::move(b);
      b = std::move(r);
    }
    if (a.size() > 1) return false;
  }
  return true;
}

inline RawPoly least_irreducible(u64 p, int degree) {
  RawPoly h(static_cast<std::size_t>(degree) + 1, 0);
  h.back() = 1;
  // Odometer over (c_0, ..., c_{d-1}) with c_0 the fastest digit, which walks
  // the coefficient vectors in lexicographic order from the top coefficient.
  for (;;) {
    if (is_irreducible(h, p)) return h;
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(degree) && ++h[i] == p) h[i++] = 0;
    if (i == static_cast<std::size_t>(degree)) raise(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
  }
}

inline bool lex_less(std::span<const u64> a, std::span<const u64> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Coordinates of a value at an explicitly chosen level.
struct LevelCoords {
  int level = 1;
  Coords coords;
  friend bool operator==(const LevelCoords&, const LevelCoords&) = default;
};

class PrimeTower {
 public:
  PrimeTower(std::uint64_t p, int max_level) : p_(p), max_level_(max_level) {
    if (p == 2) raise(ErrorKind::CharacteristicTwo, "characteristic 2 is not supported");
    if (!detail::is_prime(p) || p >= (1ULL << 32)) raise(ErrorKind::BadSpec, std::to_string(p) + " is not an odd prime below 2^32");
    if (max_level < 1) raise(ErrorKind::BadSpec, "max_extension_degree must be positive");
    level_one_ = &level(1);
  }

  PrimeTower(const PrimeTower&) = delete;
  PrimeTower& operator=(const PrimeTower&) = delete;

  std::uint64_t p() const noexcept { return p_; }
  int max_level() const noexcept { return max_level_; }

  /// Level d, built on first use. Concurrent callers observe one construction.
  const Level& level(int d) const {
    if (d == 1 && level_one_) return *level_one_;
    if (d < 1) raise(ErrorKind::BadLevel, "level must be positive");
    if (d > max_level_)
      raise(ErrorKind::LevelOverflow, "level " + std::to_string(d) + " exceeds max " + std::to_string(max_level_));
    {
      std::shared_lock lock(mu_);
      auto it = levels_.find(d);
      if (it != levels_.end()) return *it->second;
    }
    std::unique_lock lock(mu_);
    return create_locked(d);
  }

  int compositum(int a, int b) const {
    const auto l = detail::lcm_int(a, b);
    if (l > max_level_)
      raise(ErrorKind::LevelOverflow,
            "compositum of levels " + std::to_string(a) + " and " + std::to_string(b) + " exceeds max " +
                std::to_string(max_level_));
    return static_cast<int>(l);
  }

  /// Image of x (given at level `from`) in level `to`; requires from | to.
  Coords embed(int from, std::span<const std::uint64_t> x, int to) const {
    if (to % from != 0)
      raise(ErrorKind::BadLevel, "level " + std::to_string(from) + " does not divide " + std::to_string(to));
    const Level& target = level(to);
    if (from == to) return Coords(x.begin(), x.end());
    return target.apply(target.embedding_from(from), x);
  }

  LevelCoords embed(const LevelCoords& x, int to) const { return {to, embed(x.level, x.coords, to)}; }

  /// Moves x down to the smallest level containing it.
  LevelCoords canonicalize(int lvl, Coords x) const {
    for (;;) {
      if (lvl == 1) return {1, std::move(x)};
      const Level& lv = level(lvl);
      bool moved = false;
      for (int q : detail::prime_divisors(lvl)) {
        const int d = lvl / q;
        if (auto y = lv.preimage(lv.embedding_from(d), x)) {
          lvl = d;
          x = std::move(*y);
          moved = true;
          break;
        }
      }
      if (!moved) return {lvl, std::move(x)};
    }
  }

 private:
  const Level* find_locked(int d) const {
    auto it = levels_.find(d);
    return it == levels_.end() ? nullptr : it->second.get();
  }

  const Level& create_locked(int e) const {
    if (const Level* found = find_locked(e)) return *found;
    for (int d : detail::divisors(e))
      if (d < e) create_locked(d);

    auto lv = std::make_unique<Level>(p_, e, detail::least_irreducible(p_, e));
    if (e > 1) {
      lv->set_embedding(1, {lv->from_base(1)});
      std::vector<int> maximal;
      for (int q : detail::prime_divisors(e)) {
        const int d = e / q;
        if (d == 1) continue;
        choose_maximal_embedding(*lv, d, maximal);
        maximal.push_back(d);
      }
      for (int c : detail::divisors(e)) {
        if (c == 1 || c == e || std::find(maximal.begin(), maximal.end(), c) != maximal.end()) continue;
        const int via = *std::find_if(maximal.begin(), maximal.end(), [c](int d) { return d % c == 0; });
        const Level& mid = *find_locked(via);
        const Embedding& outer = lv->embedding_from(via);
        const Embedding& inner = mid.embedding_from(c);
        std::vector<Coords> cols;
        for (const auto& col : inner.columns) cols.push_back(lv->apply(outer, col));
        lv->set_embedding(c, std::move(cols));
      }
    }
    const Level& ref = *lv;
    levels_.emplace(e, std::move(lv));
    return ref;
  }

  void choose_maximal_embedding(Level& lv, int d, const std::vector<int>& fixed) const {
    const Level& sub = *find_locked(d);
    std::vector<LevelElem> coeffs;
    for (auto c : sub.modulus()) coeffs.emplace_back(lv, lv.from_base(c));
    auto roots = detail::linear_roots(detail::LPoly(std::move(coeffs)), lv);
    std::sort(roots.begin(), roots.end(),
              [](const LevelElem& a, const LevelElem& b) { return detail::lex_less(a.coords(), b.coords()); });

    for (const auto& r : roots) {
      std::vector<Coords> cols;
      Coords power = lv.from_base(1);
      for (int j = 0; j < d; ++j) {
        cols.push_back(power);
        power = lv.mul(power, r.coords());
      }
      Embedding candidate;
      candidate.from = d;
      candidate.columns = cols;
      bool ok = true;
      for (int other : fixed) {
        const int c = detail::gcd_int(d, other);
        if (c == 1) continue;
        const Level& small = *find_locked(c);
        const Coords gen = small.generator();
        const Coords via_d = lv.apply(candidate, find_locked(d)->apply(find_locked(d)->embedding_from(c), gen));
        const Level& o = *find_locked(other);
        const Coords via_other = lv.apply(lv.embedding_from(other), o.apply(o.embedding_from(c), gen));
        if (via_d != via_other) {
          ok = false;
          break;
        }
      }
      if (ok) {
        lv.set_embedding(d, std::move(cols));
        return;
      }
    }
    raise(ErrorKind::InternalInconsistency,
          "no compatible embedding of level " + std::to_string(d) + " into " + std::to_string(lv.degree()));
  }

  std::uint64_t p_;
  int max_level_;
  const Level* level_one_ = nullptr;
  mutable std::shared_mutex mu_;
  mutable std::map<int, std::unique_ptr<Level>> levels_;
};

}  // namespace dinf
