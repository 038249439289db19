#pragma once

// JSON renderings: element {f, g, field} with terms as [exponent, coefficient]
// pairs, and the classification transcript.

#include <charconv>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "dinf/algebra.hpp"
#include "dinf/classify.hpp"

namespace dinf {

using json = nlohmann::ordered_json;

/// Integers as numbers; fractions and extension-field values as strings.
template <class K, class E = typename K::element_type>
json coeff_json(const K& k, const E& c) {
  const std::string s = k.format(c);
  std::int64_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec == std::errc{} && ptr == s.data() + s.size()) return n;
  return s;
}

template <class K, class E = typename K::element_type>
json laurent_json(const K& k, const Laurent<E>& a) {
  json out = json::array();
  for (const auto& [e, c] : a.terms()) out.push_back(json::array({e, coeff_json(k, c)}));
  return out;
}

template <class K, class E = typename K::element_type>
json element_json(const K& k, const AlgebraElement<E>& u) {
  return json{{"f", laurent_json(k, u.f)}, {"g", laurent_json(k, u.g)}, {"field", k.name()}};
}

template <class K, class E = typename K::element_type>
json transcript_json(const K& k, const Classification<E>& c) {
  const bool eps = c.label.kind == CanonicalInvolution::Kind::Eps;
  json out;
  out["label"] = c.label.to_string();
  out["epsilon"] = eps ? json(c.label.epsilon) : json(nullptr);
  out["theta"] = eps ? json(c.label.theta) : json(nullptr);
  out["witness"] = c.witness ? element_json(k, c.witness->nu) : json(nullptr);
  out["checks"] = json{{"in_R", c.checks.in_R}, {"det_one", c.checks.det_one}, {"conjugation", c.checks.conjugation}};
  return out;
}

}  // namespace dinf
