#pragma once

// Word-size arithmetic modulo an odd prime p < 2^32, plus the handful of
// dense F_p polynomial routines the tower needs below the generic Poly layer.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace dinf::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 neg_mod(u64 a, u64 p) { return a == 0 ? 0 : p - a; }
inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Requires a != 0 mod p and p prime.
inline u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline int gcd_int(int a, int b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}
inline long long lcm_int(long long a, long long b) { return a / gcd_int(static_cast<int>(a), static_cast<int>(b)) * b; }

// ---- dense F_p polynomials, little-endian, trimmed -------------------------

using RawPoly = std::vector<u64>;

inline void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo b (b nonzero).
inline RawPoly raw_mod(RawPoly a, const RawPoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 inv_lead = inv_mod(b.back(), p);
  while (a.size() > db) {
    const u64 c = mul_mod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = sub_mod(a[shift + j], mul_mod(c, b[j], p), p);
    trim(a);
  }
  return a;
}

inline std::pair<RawPoly, RawPoly> raw_divmod(RawPoly a, const RawPoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {RawPoly{}, a};
  RawPoly q(a.size() - db, 0);
  const u64 inv_lead = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const u64 c = mul_mod(a[k + db], inv_lead, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] = sub_mod(a[k + j], mul_mod(c, b[j], p), p);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

inline RawPoly raw_mul(const RawPoly& a, const RawPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  RawPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], p), p);
  trim(out);
  return out;
}

inline RawPoly raw_sub(const RawPoly& a, const RawPoly& b, u64 p) {
  RawPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = sub_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(out);
  return out;
}

/// Inverse of a modulo the irreducible h via the extended Euclidean algorithm.
/// Returns an empty polynomial if a is not invertible.
inline RawPoly raw_inverse_mod(const RawPoly& a, const RawPoly& h, u64 p) {
  RawPoly r0 = h, r1 = raw_mod(a, h, p);
  RawPoly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = raw_divmod(r0, r1, p);
    RawPoly s = raw_sub(s0, raw_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) return {};
  const u64 c = inv_mod(r0[0], p);
  for (auto& x : s0) x = mul_mod(x, c, p);
  return raw_mod(s0, h, p);
}

}  // namespace dinf::detail
