#pragma once

// The algebraic closure of F_p, realized as the compatible tower of
// PrimeTower. GFElement values always sit at their minimal level, so equality
// is plain coordinate comparison.

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dinf/error.hpp"
#include "dinf/field/ff_factor.hpp"
#include "dinf/field/roots.hpp"
#include "dinf/field/tower.hpp"
#include "dinf/poly.hpp"

namespace dinf {

class GFElement {
 public:
  GFElement() = default;
  GFElement(const PrimeTower& tower, const LevelCoords& canonical)
      : tower_(&tower), level_(&tower.level(canonical.level)), c_(canonical.coords) {}

  const PrimeTower* tower() const noexcept { return tower_; }
  int level() const noexcept { return level_ ? level_->degree() : 1; }
  std::span<const std::uint64_t> coords() const noexcept {
    static constexpr std::uint64_t kZero[1] = {0};
    if (!level_) return {kZero, 1};
    return {c_.data(), c_.size()};
  }
  bool is_zero() const noexcept { return Level::is_zero(coords()); }

  /// Value as an integer residue; only meaningful at level 1.
  std::uint64_t residue() const { return coords()[0]; }

  LevelCoords at_level(int target) const {
    if (!tower_) return {target, Coords(static_cast<std::size_t>(target), 0)};
    return {target, tower_->embed(level(), coords(), target)};
  }

  GFElement inv() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
    return make(level(), level_->inv(coords()));
  }

  GFElement pow(std::uint64_t e) const {
    if (!tower_) return *this;
    return make(level(), level_->pow(coords(), e));
  }

  friend GFElement operator+(const GFElement& a, const GFElement& b) {
    return binary(a, b, [](const Level& lv, auto x, auto y) { return lv.add(x, y); });
  }
  friend GFElement operator-(const GFElement& a, const GFElement& b) {
    return binary(a, b, [](const Level& lv, auto x, auto y) { return lv.sub(x, y); });
  }
  friend GFElement operator*(const GFElement& a, const GFElement& b) {
    return binary(a, b, [](const Level& lv, auto x, auto y) { return lv.mul(x, y); });
  }
  friend GFElement operator/(const GFElement& a, const GFElement& b) { return a * b.inv(); }
  friend GFElement operator-(const GFElement& a) {
    if (!a.tower_) return a;
    return a.make(a.level(), a.level_->neg(a.coords()));
  }

  friend bool operator==(const GFElement& a, const GFElement& b) {
    if (a.level() != b.level()) return false;
    auto x = a.coords(), y = b.coords();
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  }
  /// Canonical (not field) order: by level, then coordinates lexicographically.
  friend std::strong_ordering operator<=>(const GFElement& a, const GFElement& b) {
    if (auto c = a.level() <=> b.level(); c != 0) return c;
    auto x = a.coords(), y = b.coords();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  GFElement make(int lvl, Coords x) const {
    if (lvl == 1) return GFElement(*tower_, LevelCoords{1, std::move(x)});
    return GFElement(*tower_, tower_->canonicalize(lvl, std::move(x)));
  }

  template <class Op>
  static GFElement binary(const GFElement& a, const GFElement& b, Op op) {
    const GFElement& ref = a.tower_ ? a : b;
    if (!ref.tower_) return {};
    if (a.tower_ && b.tower_ && a.tower_ != b.tower_)
      raise(ErrorKind::InternalInconsistency, "elements from different fields");
    const int la = a.level(), lb = b.level();
    if (la == lb) {
      const Level& lv = *ref.level_;
      return ref.make(la, op(lv, a.padded(la).coords, b.padded(lb).coords));
    }
    const int l = ref.tower_->compositum(la, lb);
    const Level& lv = ref.tower_->level(l);
    return ref.make(l, op(lv, std::span<const std::uint64_t>(a.at_level(l).coords),
                          std::span<const std::uint64_t>(b.at_level(l).coords)));
  }

  struct Padded {
    Coords coords;
  };
  Padded padded(int lvl) const {
    if (level_) return {c_};
    return {Coords(static_cast<std::size_t>(lvl), 0)};
  }

  const PrimeTower* tower_ = nullptr;
  const Level* level_ = nullptr;
  Coords c_;
};

/// Handle for the algebraic closure of F_p. Copies share one tower.
class PrimeClosure {
 public:
  using element_type = GFElement;

  explicit PrimeClosure(std::uint64_t p, int max_level = 64) : tower_(std::make_shared<PrimeTower>(p, max_level)) {}

  std::uint64_t characteristic() const noexcept { return tower_->p(); }
  int max_level() const noexcept { return tower_->max_level(); }
  const PrimeTower& tower() const noexcept { return *tower_; }
  std::string name() const { return "fp:" + std::to_string(tower_->p()); }

  GFElement zero() const { return from_int(0); }
  GFElement one() const { return from_int(1); }
  GFElement from_int(std::int64_t n) const {
    const auto p = static_cast<std::int64_t>(tower_->p());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return GFElement(*tower_, LevelCoords{1, Coords{static_cast<std::uint64_t>(r)}});
  }
  /// Decimal digits reduced mod p, for literals of any length.
  GFElement from_decimal(std::string_view digits) const {
    const auto p = tower_->p();
    std::uint64_t r = 0;
    for (char ch : digits) r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
    return GFElement(*tower_, LevelCoords{1, Coords{r}});
  }
  GFElement from_coords(int level, std::span<const std::uint64_t> coords) const {
    if (static_cast<int>(coords.size()) != level) raise(ErrorKind::BadLevel, "coordinate count does not match level");
    Coords c(coords.begin(), coords.end());
    for (auto& v : c) v %= tower_->p();
    tower_->level(level);
    return GFElement(*tower_, tower_->canonicalize(level, std::move(c)));
  }
  GFElement from_coords(const LevelCoords& x) const { return from_coords(x.level, x.coords); }

  LevelCoords embed(const GFElement& x, int target) const {
    if (target % x.level() != 0)
      raise(ErrorKind::BadLevel, "level " + std::to_string(x.level()) + " does not divide " + std::to_string(target));
    return x.at_level(target);
  }
  LevelCoords embed(const LevelCoords& x, int target) const { return tower_->embed(x, target); }

  GFElement frobenius(const GFElement& x) const { return x.is_zero() ? x : x.pow(tower_->p()); }

  template <class Rng>
  GFElement random_element(Rng& rng, int level = 1) const {
    Coords c(static_cast<std::size_t>(level));
    for (auto& v : c) v = rng() % tower_->p();
    return from_coords(level, c);
  }
  template <class Rng>
  GFElement random_nonzero(Rng& rng) const {
    return from_int(static_cast<std::int64_t>(1 + rng() % (tower_->p() - 1)));
  }

  std::string format(const GFElement& x) const {
    if (x.level() == 1) return std::to_string(x.residue());
    std::ostringstream os;
    os << '[';
    auto c = x.coords();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]@" << x.level();
    return os.str();
  }

  /// Field elements here carry no sign; callers print every coefficient as is.
  bool is_negative(const GFElement&) const { return false; }

  friend bool operator==(const PrimeClosure& a, const PrimeClosure& b) { return a.tower_ == b.tower_; }

 private:
  std::shared_ptr<PrimeTower> tower_;
};

/// All roots in the tower with multiplicities, extending it as needed.
/// Pipeline: squarefree decomposition, distinct-degree split over the
/// coefficient level, equal-degree split in the extension of that degree.
inline RootMultiset<GFElement> roots_of(const PrimeClosure& field, const Poly<GFElement>& a) {
  if (a.is_zero()) raise(ErrorKind::DivisionByZero, "roots of the zero polynomial");
  const PrimeTower& tower = field.tower();
  RootMultiset<GFElement> out;
  std::size_t low = 0;
  while (a.coeffs()[low].is_zero()) ++low;
  if (low > 0) out.push_back({field.zero(), static_cast<int>(low)});
  if (a.degree() - static_cast<int>(low) <= 0) return normalize_roots(std::move(out));

  int base = 1;
  for (const auto& c : a.coeffs())
    if (!c.is_zero()) base = tower.compositum(base, c.level());
  const Level& base_level = tower.level(base);
  std::vector<LevelElem> lifted;
  for (std::size_t i = low; i < a.size(); ++i)
    lifted.emplace_back(base_level, a.coeffs()[i].at_level(base).coords);
  const detail::LPoly f = monic(detail::LPoly(std::move(lifted)));

  for (auto& [part, mult] : detail::squarefree(f, base_level)) {
    for (auto& [product, k] : detail::distinct_degree(part, base_level)) {
      const int ext = tower.compositum(base, base * k);
      const Level& lv = tower.level(ext);
      std::vector<LevelElem> up;
      for (const auto& c : product.coeffs()) up.emplace_back(lv, tower.embed(base, c.coords(), ext));
      for (const auto& r : detail::linear_roots(detail::LPoly(std::move(up)), lv)) {
        Coords x(r.coords().begin(), r.coords().end());
        out.push_back({GFElement(tower, tower.canonicalize(ext, std::move(x))), mult});
      }
    }
  }
  return normalize_roots(std::move(out));
}

}  // namespace dinf
