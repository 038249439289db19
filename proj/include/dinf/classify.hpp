#pragma once

// Conjugacy classification of involutions u = f + s g in R.
//
// Pipeline: precheck -> factor_stage -> match_subset -> extract_eps_theta ->
// build_witness -> verify_witness. A non-central u is conjugate to
// u_{eps,theta} = eps s t^theta, and the witness nu satisfies
// nu^-1 u nu = u_{eps,theta} with det iota(nu) = 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dinf/algebra.hpp"
#include "dinf/error.hpp"
#include "dinf/laurent.hpp"

namespace dinf {

template <class E>
struct FactorizationContext {
  LaurentFactorization<E> one_plus_f;  // unit (delta, m), primes t - lambda_i
  LaurentFactorization<E> g_fact;
};

template <class E>
struct SubsetAssignment {
  RootMultiset<E> in_I;
  RootMultiset<E> in_Ic;
  E gamma;
  int l = 0;
};

template <class E>
struct Witness {
  Laurent<E> g1;
  Laurent<E> g2;
  AlgebraElement<E> nu;
  CanonicalInvolution label;
};

struct VerificationReport {
  bool in_R = false;
  bool det_one = false;
  bool conjugation = false;
  bool all() const noexcept { return in_R && det_one && conjugation; }
};

template <class E>
struct Classification {
  CanonicalInvolution label;
  std::optional<Witness<E>> witness;  // empty for the central cases
  VerificationReport checks;
  std::optional<FactorizationContext<E>> factors;
  std::optional<SubsetAssignment<E>> subset;
};

enum class PrecheckOutcome { Central, NonCentral, NotInvolution };

struct Precheck {
  PrecheckOutcome outcome = PrecheckOutcome::NotInvolution;
  std::optional<CanonicalInvolution> central;
};

namespace detail {

template <class K, class E>
std::string describe_roots(const K& k, const RootMultiset<E>& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += k.format(roots[i].value);
    if (roots[i].multiplicity != 1) out += "^" + std::to_string(roots[i].multiplicity);
  }
  return out + "}";
}

template <class K, class E>
std::string describe(const K& k, const LaurentFactorization<E>& fac) {
  return "unit (" + k.format(fac.unit.scalar) + ", " + std::to_string(fac.unit.exponent) +
         "), primes " + describe_roots(k, fac.primes);
}

template <class K, class E>
[[noreturn]] void inconsistent(const K& k, const FactorizationContext<E>& fc, const std::string& what) {
  raise(ErrorKind::InternalInconsistency, what + " [1+f: " + describe(k, fc.one_plus_f) + "; g: " +
                                              describe(k, fc.g_fact) + "; field " + k.name() + "]");
}

/// prod (t - lambda) over the multiset.
template <class K, class E>
Laurent<E> prime_product(const K& k, const RootMultiset<E>& roots) {
  Poly<E> acc = Poly<E>::constant(k.one());
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) acc = acc * Poly<E>::linear(k.one(), r.value);
  return Laurent<E>(0, std::move(acc));
}

template <class E>
int multiplicity_of(const RootMultiset<E>& roots, const E& x) {
  for (const auto& r : roots)
    if (r.value == x) return r.multiplicity;
  return 0;
}

/// g / (prod_I (t - lambda) * prod_Ic (t - lambda)*), when that is a unit.
template <class K, class E>
std::optional<UnitPart<E>> subset_quotient(const K& k, const Laurent<E>& g, const RootMultiset<E>& in_I,
                                           const RootMultiset<E>& in_Ic) {
  const auto denom = prime_product(k, in_I) * prime_product(k, in_Ic).star();
  auto q = exact_div(g, denom);
  if (!q || !is_unit(*q)) return std::nullopt;
  return unit_decompose(*q);
}

inline int parity(int n) { return ((n % 2) + 2) % 2; }

}  // namespace detail

/// Decides u^2 = 1 and centrality. For a non-central involution also
/// confirms f* = -f, f f* - g g* = -1 and g != 0.
template <class K, class E = typename K::element_type>
Precheck precheck(const K& k, const AlgebraElement<E>& u) {
  if (!is_involution(k, u)) return {PrecheckOutcome::NotInvolution, std::nullopt};
  if (u == one(k)) return {PrecheckOutcome::Central, CanonicalInvolution::plus_one()};
  if (u == -one(k)) return {PrecheckOutcome::Central, CanonicalInvolution::minus_one()};
  const auto [tr, det] = trace_det(u);
  if (!tr.is_zero() || det != Laurent<E>::constant(k.from_int(-1)) || u.g.is_zero())
    raise(ErrorKind::InternalInconsistency, "non-central involution without trace 0 and determinant -1");
  return {PrecheckOutcome::NonCentral, std::nullopt};
}

template <class K, class E = typename K::element_type>
FactorizationContext<E> factor_stage(const K& k, const AlgebraElement<E>& u) {
  const auto one_plus_f = Laurent<E>::constant(k.one()) + u.f;
  FactorizationContext<E> fc{factor_linear(k, one_plus_f), factor_linear(k, u.g)};
  if (fc.one_plus_f.expand(k.one()) != one_plus_f || fc.g_fact.expand(k.one()) != u.g)
    detail::inconsistent(k, fc, "factorization does not reassemble");
  return fc;
}

/// Splits the primes of 1+f into I and I^c so that the roots contributed,
/// lambda for I and 1/lambda for I^c, are exactly the roots of g.
///
/// Roots are grouped in orbits {lambda, 1/lambda}. With a1, a2 the
/// multiplicities of lambda, 1/lambda in 1+f and b1 those of lambda in g, the
/// counts x1, x2 placed in I must satisfy x1 - x2 = b1 - a2; |I| grows with
/// x2, so the smallest feasible x2 gives the unique minimal assignment.
/// Self-paired roots +-1 all go to I.
template <class K, class E = typename K::element_type>
SubsetAssignment<E> match_subset(const K& k, const FactorizationContext<E>& fc, const Laurent<E>& g) {
  const auto& A = fc.one_plus_f.primes;
  const auto& B = fc.g_fact.primes;
  SubsetAssignment<E> sa;
  std::vector<E> done;
  auto seen = [&](const E& x) { return std::find(done.begin(), done.end(), x) != done.end(); };

  for (const auto& r : A) {
    if (seen(r.value)) continue;
    const E lam = r.value, inv = lam.inv();
    done.push_back(lam);
    if (lam == inv) {
      sa.in_I.push_back({lam, r.multiplicity});
      continue;
    }
    done.push_back(inv);
    const int a1 = r.multiplicity, a2 = detail::multiplicity_of(A, inv);
    const int b1 = detail::multiplicity_of(B, lam);
    const int x2 = std::max(0, a2 - b1);
    const int x1 = x2 + b1 - a2;
    if (x1 < 0 || x1 > a1 || x2 > a2) detail::inconsistent(k, fc, "no feasible subset for root " + k.format(lam));
    if (x1 > 0) sa.in_I.push_back({lam, x1});
    if (a1 - x1 > 0) sa.in_Ic.push_back({lam, a1 - x1});
    if (x2 > 0) sa.in_I.push_back({inv, x2});
    if (a2 - x2 > 0) sa.in_Ic.push_back({inv, a2 - x2});
  }
  sa.in_I = normalize_roots(std::move(sa.in_I));
  sa.in_Ic = normalize_roots(std::move(sa.in_Ic));

  const auto q = detail::subset_quotient(k, g, sa.in_I, sa.in_Ic);
  if (!q) detail::inconsistent(k, fc, "g divided by the matched primes is not a unit");
  sa.gamma = q->scalar;
  sa.l = q->exponent;
  return sa;
}

/// eps = gamma / delta, theta = (l + m) mod 2 in {0, 1}.
template <class K, class E = typename K::element_type>
std::pair<int, int> extract_eps_theta(const K& k, const FactorizationContext<E>& fc, const SubsetAssignment<E>& sa) {
  const E eps = sa.gamma / fc.one_plus_f.unit.scalar;
  int e = 0;
  if (eps == k.one())
    e = 1;
  else if (eps == k.from_int(-1))
    e = -1;
  else
    detail::inconsistent(k, fc, "gamma/delta = " + k.format(eps) + " is not +-1");
  return {e, detail::parity(sa.l + fc.one_plus_f.unit.exponent)};
}

/// Checks (1) the closed-form entries agree with the fraction-field
/// definition and give a matrix of iota-shape, (2) det nu = 1, (3) u nu = nu u_{eps,theta}.
template <class K, class E = typename K::element_type>
VerificationReport verify_witness(const K& k, const AlgebraElement<E>& u, const Witness<E>& w) {
  VerificationReport rep;
  const auto target = representative(k, w.label);
  rep.conjugation = u * w.nu == w.nu * target;
  rep.det_one = trace_det(w.nu).second == Laurent<E>::constant(k.one());

  bool shape = from_matrix(iota(w.nu)).has_value();
  if (w.label.kind == CanonicalInvolution::Kind::Eps) {
    // The unnormalized closed forms are eps * nu. Clearing the denominator
    // 2g from a = (eps t^theta g2 + g1)/2g and b = (eps t^theta g2 - g1)/2g:
    //   2g F  = t^theta g2 (1+f) + eps g1 (1-f)
    //   2g G* = eps g2 (1+f) - t^-theta g1 (1-f)
    const E eps = k.from_int(w.label.epsilon);
    const auto F = w.nu.f.scaled(eps), G = w.nu.g.scaled(eps);
    const auto one_l = Laurent<E>::constant(k.one());
    const auto tt = Laurent<E>::monomial(k.one(), w.label.theta);
    const auto two_g = u.g.scaled(k.from_int(2));
    shape = shape && w.g1 * w.g2 == u.g &&
            two_g * F == tt * w.g2 * (one_l + u.f) + (w.g1 * (one_l - u.f)).scaled(eps) &&
            two_g * G.star() == (w.g2 * (one_l + u.f)).scaled(eps) - tt.star() * w.g1 * (one_l - u.f);
  }
  rep.in_R = shape;
  return rep;
}

/// g1 = eps t^{(l+m+theta)/2} prod_I (t - lambda),
/// g2 = delta t^{(l-m-theta)/2} prod_Ic (t - lambda)*,
/// F = (eps g2* + t^theta g1*)/2, G = (t^theta g2 - eps g1)/2.
/// The returned nu is eps (F + s G), which has the same determinant and
/// conjugation property and equals 1 when u is already canonical.
template <class K, class E = typename K::element_type>
Witness<E> build_witness(const K& k, const AlgebraElement<E>& u, const FactorizationContext<E>& fc,
                         const SubsetAssignment<E>& sa, int epsilon, int theta) {
  const int m = fc.one_plus_f.unit.exponent;
  const E delta = fc.one_plus_f.unit.scalar;
  const E eps = k.from_int(epsilon);
  if (detail::parity(sa.l + m + theta) != 0) detail::inconsistent(k, fc, "theta has the wrong parity");
  const auto g1 = Laurent<E>::monomial(eps, (sa.l + m + theta) / 2) * detail::prime_product(k, sa.in_I);
  const auto g2 = Laurent<E>::monomial(delta, (sa.l - m - theta) / 2) * detail::prime_product(k, sa.in_Ic).star();
  const auto tt = Laurent<E>::monomial(k.one(), theta);
  const E half = k.from_int(2).inv();
  const auto F = (g2.star().scaled(eps) + tt * g1.star()).scaled(half);
  const auto G = (tt * g2 - g1.scaled(eps)).scaled(half);
  Witness<E> w{g1, g2, AlgebraElement<E>{F, G}.scaled(eps), CanonicalInvolution::eps(epsilon, theta)};
  if (g1 * g2 != u.g) detail::inconsistent(k, fc, "g1 g2 != g");
  return w;
}

/// Full classification with an inline verification of the witness.
template <class K, class E = typename K::element_type>
Classification<E> classify(const K& k, const AlgebraElement<E>& u) {
  const auto pre = precheck(k, u);
  if (pre.outcome == PrecheckOutcome::NotInvolution) raise(ErrorKind::NotInvolution, "u^2 != 1");
  if (pre.outcome == PrecheckOutcome::Central) return {*pre.central, std::nullopt, {true, true, true}, {}, {}};

  auto fc = factor_stage(k, u);
  auto sa = match_subset(k, fc, u.g);
  const auto [eps, theta] = extract_eps_theta(k, fc, sa);
  auto w = build_witness(k, u, fc, sa, eps, theta);
  const auto rep = verify_witness(k, u, w);
  if (!rep.all())
    detail::inconsistent(k, fc,
                         std::string("witness failed verification (in_R ") + (rep.in_R ? "ok" : "FAIL") + ", det " +
                             (rep.det_one ? "ok" : "FAIL") + ", conjugation " + (rep.conjugation ? "ok" : "FAIL") + ")");
  const auto label = w.label;
  return {label, std::move(w), rep, std::move(fc), std::move(sa)};
}

/// Every split of the primes of 1+f, taken as a list with repetition, into
/// index sets I and I^c for which g / (prod_I p_i prod_Ic p_i*) is a unit.
/// Exponential; meant for cross-checking match_subset on small inputs.
template <class K, class E = typename K::element_type>
std::vector<SubsetAssignment<E>> all_feasible_assignments(const K& k, const FactorizationContext<E>& fc,
                                                          const Laurent<E>& g, int max_primes = 16) {
  std::vector<E> primes;
  for (const auto& r : fc.one_plus_f.primes)
    for (int i = 0; i < r.multiplicity; ++i) primes.push_back(r.value);
  const auto n = primes.size();
  if (static_cast<int>(n) > max_primes) raise(ErrorKind::BadSpec, "too many primes to enumerate");
  std::vector<SubsetAssignment<E>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SubsetAssignment<E> sa;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? sa.in_I : sa.in_Ic).push_back({primes[i], 1});
    sa.in_I = normalize_roots(std::move(sa.in_I));
    sa.in_Ic = normalize_roots(std::move(sa.in_Ic));
    if (auto q = detail::subset_quotient(k, g, sa.in_I, sa.in_Ic)) {
      sa.gamma = q->scalar;
      sa.l = q->exponent;
      out.push_back(std::move(sa));
    }
  }
  return out;
}

}  // namespace dinf
