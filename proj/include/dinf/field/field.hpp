#pragma once

// Runtime choice of the coefficient field.

#include <charconv>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "dinf/error.hpp"
#include "dinf/field/gf.hpp"
#include "dinf/field/rational.hpp"

namespace dinf {

/// What every coefficient-field handle provides to the algebra layers.
template <class K>
concept FieldHandle = requires(const K& k, const typename K::element_type& x, std::int64_t n) {
  { k.characteristic() } -> std::convertible_to<std::uint64_t>;
  { k.zero() } -> std::same_as<typename K::element_type>;
  { k.one() } -> std::same_as<typename K::element_type>;
  { k.from_int(n) } -> std::same_as<typename K::element_type>;
  { k.format(x) } -> std::convertible_to<std::string>;
  { x + x } -> std::same_as<typename K::element_type>;
  { x * x } -> std::same_as<typename K::element_type>;
  { x.inv() } -> std::same_as<typename K::element_type>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x < x } -> std::convertible_to<bool>;
  { roots_of(k, Poly<typename K::element_type>{}) };
};

static_assert(FieldHandle<PrimeClosure>);
static_assert(FieldHandle<Rationals>);

struct FieldSpec {
  enum class Kind { PrimeClosure, Rationals };

  Kind kind = Kind::PrimeClosure;
  std::uint64_t p = 7;
  int max_extension_degree = 64;

  static FieldSpec rationals() { return {Kind::Rationals, 0, 64}; }
  static FieldSpec prime_closure(std::uint64_t p, int max_level = 64) { return {Kind::PrimeClosure, p, max_level}; }

  /// Accepts "q" or "fp:<prime>".
  static FieldSpec parse(std::string_view text, int max_level = 64) {
    if (text == "q" || text == "Q") return {Kind::Rationals, 0, max_level};
    if (text.starts_with("fp:")) {
      std::uint64_t p = 0;
      auto digits = text.substr(3);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
        return {Kind::PrimeClosure, p, max_level};
    }
    raise(ErrorKind::BadSpec, "field must be 'q' or 'fp:<prime>', got '" + std::string(text) + "'");
  }
};

using AnyField = std::variant<Rationals, PrimeClosure>;

/// Validates the spec (CharacteristicTwo, BadSpec) and builds the context.
inline AnyField make_field(const FieldSpec& spec) {
  if (spec.max_extension_degree < 1) raise(ErrorKind::BadSpec, "max_extension_degree must be positive");
  if (spec.kind == FieldSpec::Kind::Rationals) return Rationals{};
  return PrimeClosure(spec.p, spec.max_extension_degree);
}

inline std::uint64_t characteristic(const AnyField& f) {
  return std::visit([](const auto& k) { return k.characteristic(); }, f);
}

}  // namespace dinf
