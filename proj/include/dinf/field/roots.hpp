#pragma once

#include <algorithm>
#include <vector>

namespace dinf {

template <class E>
struct Root {
  E value;
  int multiplicity = 1;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Distinct roots with multiplicities, sorted by the backend's canonical order.
template <class E>
using RootMultiset = std::vector<Root<E>>;

/// Sorts and merges equal roots.
template <class E>
RootMultiset<E> normalize_roots(RootMultiset<E> roots) {
  std::sort(roots.begin(), roots.end(), [](const Root<E>& a, const Root<E>& b) { return a.value < b.value; });
  RootMultiset<E> out;
  for (auto& r : roots) {
    if (!out.empty() && out.back().value == r.value)
      out.back().multiplicity += r.multiplicity;
    else
      out.push_back(std::move(r));
  }
  return out;
}

template <class E>
int total_multiplicity(const RootMultiset<E>& roots) {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

}  // namespace dinf
