#pragma once

// Modular arithmetic on 64-bit residues (moduli < 2^62, products taken in
// u128). Includes the pieces needed to pick canonical automorphism exponents:
// multiplicative order and least primitive root modulo p^m.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "metablock/errors.hpp"
#include "metablock/wide.hpp"

namespace metablock {

inline u64 mul_mod(u64 a, u64 b, u64 mod) { return u64((u128)a * b % mod); }

inline u64 pow_mod(u64 base, u64 exp, u64 mod) {
  if (mod == 1) return 0;
  u64 r = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(u64 v) {
  if (v < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (v % q == 0) return v == q;
  }
  u64 d = v - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Trial division; fine for the 32-bit-ish values (p-1 and friends) seen here.
inline std::vector<u64> prime_factors(u64 v) {
  std::vector<u64> fs;
  for (u64 q = 2; q * q <= v; ++q) {
    if (v % q == 0) {
      fs.push_back(q);
      while (v % q == 0) v /= q;
    }
  }
  if (v > 1) fs.push_back(v);
  return fs;
}

// Order of a in (Z/modulus)^*, given the group order and its prime factors.
inline u64 multiplicative_order(u64 a, u64 modulus, u64 group_order, const std::vector<u64>& group_order_factors) {
  if (std::gcd(a % modulus, modulus) != 1) throw invalid_input("multiplicative_order: not a unit");
  u64 t = group_order;
  for (u64 q : group_order_factors) {
    while (t % q == 0 && pow_mod(a, t / q, modulus) == 1) t /= q;
  }
  if (pow_mod(a, t, modulus) != 1) throw internal_error("multiplicative_order: order search failed");
  return t;
}

// Order of a modulo p^k, p an odd prime.
inline u64 order_mod_prime_power(u64 a, u64 p, unsigned k) {
  u64 pk = 1;
  for (unsigned i = 0; i < k; ++i) pk = u64(checked_mul(pk, p));
  u64 phi = pk / p * (p - 1);
  std::vector<u64> fs = prime_factors(p - 1);
  if (k > 1) fs.push_back(p);
  return multiplicative_order(a, pk, phi, fs);
}

// Least primitive root modulo p^k strictly above `floor` (p odd, so the unit
// group is cyclic). floor = 1 gives the least one.
inline u64 primitive_root_above(u64 p, unsigned k, u64 floor) {
  u64 pk = 1;
  for (unsigned i = 0; i < k; ++i) pk = u64(checked_mul(pk, p));
  u64 phi = pk / p * (p - 1);
  std::vector<u64> fs = prime_factors(p - 1);
  if (k > 1) fs.push_back(p);
  for (u64 g = floor + 1; g < pk; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (u64 q : fs) {
      if (pow_mod(g, phi / q, pk) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw internal_error("primitive_root_above: none found");
}

inline u64 least_primitive_root(u64 p, unsigned k) { return primitive_root_above(p, k, 1); }

inline u64 mod_inverse(u64 a, u64 modulus) {
  i64 t = 0, nt = 1, r = i64(modulus), nr = i64(a % modulus);
  while (nr != 0) {
    i64 q = r / nr;
    i64 t2 = t - q * nt;
    t = nt, nt = t2;
    i64 r2 = r - q * nr;
    r = nr, nr = r2;
  }
  if (r != 1) throw invalid_input("mod_inverse: not a unit");
  return u64(t < 0 ? t + i64(modulus) : t);
}

// p-adic valuation of v; `cap` is returned for v = 0 (the natural cutoff when
// working modulo p^cap).
inline unsigned p_valuation(u64 v, u64 p, unsigned cap) {
  if (v == 0) return cap;
  unsigned w = 0;
  while (w < cap && v % p == 0) v /= p, ++w;
  return w;
}

inline u64 isqrt_u64(u64 v) {
  if (v == 0) return 0;
  u64 r = u64(std::sqrt(double(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace metablock
