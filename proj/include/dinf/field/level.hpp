#pragma once

// One member F_{p^d} = F_p[x]/(h_d) of the prime-field tower, and a
// fixed-level element type for polynomial algorithms that must not change
// level mid-computation (root finding, tower construction).

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/field/modular.hpp"

namespace dinf {

using Coords = std::vector<std::uint64_t>;

/// Linear map F_{p^c} -> F_{p^d} stored column-wise (image of x^j for j < c),
/// together with a left inverse on c pivot rows for descending.
struct Embedding {
  int from = 1;
  std::vector<Coords> columns;
  std::vector<int> pivot_rows;
  std::vector<Coords> pivot_inverse;  // c x c, row-major
};

class Level {
 public:
  Level(std::uint64_t p, int degree, std::vector<std::uint64_t> modulus)
      : p_(p), degree_(degree), modulus_(std::move(modulus)) {}

  std::uint64_t p() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  std::span<const std::uint64_t> modulus() const noexcept { return modulus_; }

  Coords zero() const { return Coords(static_cast<std::size_t>(degree_), 0); }
  Coords from_base(std::uint64_t c) const {
    Coords out = zero();
    out[0] = c % p_;
    return out;
  }
  /// The class of x, i.e. the generator fixed by the defining polynomial.
  Coords generator() const {
    if (degree_ == 1) return from_base(modulus_[0] == 0 ? 0 : detail::neg_mod(modulus_[0], p_));
    Coords out = zero();
    out[1] = 1;
    return out;
  }

  static bool is_zero(std::span<const std::uint64_t> a) {
    for (auto x : a)
      if (x != 0) return false;
    return true;
  }

  Coords add(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = detail::add_mod(a[i], b[i], p_);
    return out;
  }
  Coords sub(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = detail::sub_mod(a[i], b[i], p_);
    return out;
  }
  Coords neg(std::span<const std::uint64_t> a) const {
    Coords out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = detail::neg_mod(a[i], p_);
    return out;
  }

  Coords mul(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) const {
    const auto d = static_cast<std::size_t>(degree_);
    if (d == 1) return Coords{detail::mul_mod(a[0], b[0], p_)};
    std::vector<std::uint64_t> prod(2 * d - 1);
    for (std::size_t k = 0; k < 2 * d - 1; ++k) {
      detail::u128 acc = 0;
      const std::size_t lo = k >= d ? k - d + 1 : 0;
      const std::size_t hi = std::min(k, d - 1);
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<detail::u128>(a[i]) * b[k - i];
      prod[k] = static_cast<std::uint64_t>(acc % p_);
    }
    // modulus is monic: x^d = -sum h_j x^j
    for (std::size_t i = 2 * d - 1; i-- > d;) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        prod[i - d + j] = detail::sub_mod(prod[i - d + j], detail::mul_mod(c, modulus_[j], p_), p_);
    }
    return Coords(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  }

  Coords inv(std::span<const std::uint64_t> a) const {
    if (is_zero(a)) raise(ErrorKind::DivisionByZero, "inverse of zero");
    if (degree_ == 1) return Coords{detail::inv_mod(a[0], p_)};
    detail::RawPoly raw(a.begin(), a.end());
    detail::trim(raw);
    detail::RawPoly h(modulus_.begin(), modulus_.end());
    auto r = detail::raw_inverse_mod(raw, h, p_);
    if (r.empty()) raise(ErrorKind::InternalInconsistency, "defining polynomial is not irreducible");
    Coords out = zero();
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i];
    return out;
  }

  Coords pow(std::span<const std::uint64_t> a, std::uint64_t e) const {
    Coords result = from_base(1);
    Coords base(a.begin(), a.end());
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  Coords frobenius(std::span<const std::uint64_t> a) const { return pow(a, p_); }

  // ---- embeddings from proper divisors -----------------------------------

  void set_embedding(int from, std::vector<Coords> columns) {
    Embedding emb;
    emb.from = from;
    emb.columns = std::move(columns);
    compute_left_inverse(emb);
    embeddings_[from] = std::move(emb);
  }

  const Embedding& embedding_from(int from) const {
    auto it = embeddings_.find(from);
    if (it == embeddings_.end()) raise(ErrorKind::BadLevel, "no embedding from level " + std::to_string(from));
    return it->second;
  }

  Coords apply(const Embedding& emb, std::span<const std::uint64_t> x) const {
    Coords out = zero();
    for (std::size_t j = 0; j < emb.columns.size(); ++j) {
      if (x[j] == 0) continue;
      for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = detail::add_mod(out[i], detail::mul_mod(x[j], emb.columns[j][i], p_), p_);
    }
    return out;
  }

  /// Coordinates in the subfield of degree emb.from, if x lies in it.
  std::optional<Coords> preimage(const Embedding& emb, std::span<const std::uint64_t> x) const {
    const auto c = static_cast<std::size_t>(emb.from);
    Coords y(c, 0);
    for (std::size_t i = 0; i < c; ++i) {
      detail::u128 acc = 0;
      for (std::size_t k = 0; k < c; ++k)
        acc += static_cast<detail::u128>(emb.pivot_inverse[i][k]) * x[static_cast<std::size_t>(emb.pivot_rows[k])];
      y[i] = static_cast<std::uint64_t>(acc % p_);
    }
    Coords back = apply(emb, y);
    for (std::size_t i = 0; i < back.size(); ++i)
      if (back[i] != x[i]) return std::nullopt;
    return y;
  }

 private:
  void compute_left_inverse(Embedding& emb) const {
    const auto c = emb.columns.size();
    const auto d = static_cast<std::size_t>(degree_);
    // Gaussian elimination on the d x c matrix to find c independent rows.
    std::vector<std::vector<std::uint64_t>> rows(d, std::vector<std::uint64_t>(c));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < c; ++j) rows[i][j] = emb.columns[j][i];
    std::vector<int> pivots;
    {
      auto work = rows;
      std::vector<std::size_t> order(d);
      for (std::size_t i = 0; i < d; ++i) order[i] = i;
      std::size_t r = 0;
      for (std::size_t col = 0; col < c && r < d; ++col) {
        std::size_t sel = r;
        while (sel < d && work[sel][col] == 0) ++sel;
        if (sel == d) raise(ErrorKind::InternalInconsistency, "embedding matrix is singular");
        std::swap(work[sel], work[r]);
        std::swap(order[sel], order[r]);
        const auto inv = detail::inv_mod(work[r][col], p_);
        for (auto& v : work[r]) v = detail::mul_mod(v, inv, p_);
        for (std::size_t i = 0; i < d; ++i) {
          if (i == r || work[i][col] == 0) continue;
          const auto f = work[i][col];
          for (std::size_t j = 0; j < c; ++j)
            work[i][j] = detail::sub_mod(work[i][j], detail::mul_mod(f, work[r][j], p_), p_);
        }
        ++r;
      }
      for (std::size_t i = 0; i < c; ++i) pivots.push_back(static_cast<int>(order[i]));
    }
    // Invert the c x c submatrix on the pivot rows.
    std::vector<std::vector<std::uint64_t>> aug(c, std::vector<std::uint64_t>(2 * c, 0));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) aug[i][j] = rows[static_cast<std::size_t>(pivots[i])][j];
      aug[i][c + i] = 1;
    }
    for (std::size_t col = 0; col < c; ++col) {
      std::size_t sel = col;
      while (sel < c && aug[sel][col] == 0) ++sel;
      if (sel == c) raise(ErrorKind::InternalInconsistency, "pivot block is singular");
      std::swap(aug[sel], aug[col]);
      const auto inv = detail::inv_mod(aug[col][col], p_);
      for (auto& v : aug[col]) v = detail::mul_mod(v, inv, p_);
      for (std::size_t i = 0; i < c; ++i) {
        if (i == col || aug[i][col] == 0) continue;
        const auto f = aug[i][col];
        for (std::size_t j = 0; j < 2 * c; ++j)
          aug[i][j] = detail::sub_mod(aug[i][j], detail::mul_mod(f, aug[col][j], p_), p_);
      }
    }
    emb.pivot_rows = std::move(pivots);
    emb.pivot_inverse.assign(c, Coords(c, 0));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) emb.pivot_inverse[i][j] = aug[i][c + j];
  }

  std::uint64_t p_;
  int degree_;
  std::vector<std::uint64_t> modulus_;  // monic, size degree + 1
  std::map<int, Embedding> embeddings_;
};

/// Element of a single fixed level. The default value is a level-less zero
/// that adopts the level of whatever it is combined with.
class LevelElem {
 public:
  LevelElem() = default;
  LevelElem(const Level& level, Coords coords) : level_(&level), c_(std::move(coords)) {}

  const Level* level() const noexcept { return level_; }
  std::span<const std::uint64_t> coords() const noexcept { return {c_.data(), c_.size()}; }
  bool is_zero() const noexcept { return Level::is_zero(coords()); }

  LevelElem inv() const {
    if (!level_) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return {*level_, level_->inv(coords())};
  }
  LevelElem pow(std::uint64_t e) const { return {*level_, level_->pow(coords(), e)}; }

  friend LevelElem operator+(const LevelElem& a, const LevelElem& b) {
    if (!a.level_) return b;
    if (!b.level_) return a;
    return {*a.level_, a.level_->add(a.coords(), b.coords())};
  }
  friend LevelElem operator-(const LevelElem& a) {
    if (!a.level_) return a;
    return {*a.level_, a.level_->neg(a.coords())};
  }
  friend LevelElem operator-(const LevelElem& a, const LevelElem& b) {
    if (!b.level_) return a;
    if (!a.level_) return -b;
    return {*a.level_, a.level_->sub(a.coords(), b.coords())};
  }
  friend LevelElem operator*(const LevelElem& a, const LevelElem& b) {
    if (!a.level_) return a;
    if (!b.level_) return b;
    return {*a.level_, a.level_->mul(a.coords(), b.coords())};
  }
  friend LevelElem operator/(const LevelElem& a, const LevelElem& b) { return a * b.inv(); }
  friend bool operator==(const LevelElem& a, const LevelElem& b) {
    if (!a.level_ || !b.level_) return a.is_zero() && b.is_zero();
    return a.c_ == b.c_;
  }

 private:
  const Level* level_ = nullptr;
  Coords c_;
};

}  // namespace dinf
