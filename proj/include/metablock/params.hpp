#pragma once

// Parameters (p, m, n, l) of the split metacyclic p-group
//
//   D = < x, y | x^(p^m) = y^(p^n) = 1,  y x y^-1 = x^(1+p^l) >
//
// with p an odd prime, m >= 2, n >= 1, 0 < l < m and m - l <= n. |D| = p^(m+n)
// and D is minimal non-abelian exactly when l = m - 1.
//
// Residue arithmetic runs on 64-bit exponents, formula evaluation on checked
// 128-bit integers, so validation bounds the moduli at 2^62 and the group
// order at 2^96 (headroom for the products formed by the bound checks).

#include "metablock/errors.hpp"
#include "metablock/modarith.hpp"
#include "metablock/wide.hpp"

namespace metablock {

struct GroupParams {
  u64 p = 0;
  unsigned m = 0, n = 0, l = 0;
  u64 pm = 0;  // p^m
  u64 pn = 0;  // p^n
  u64 pl = 0;  // p^l

  GroupParams(u64 p_, unsigned m_, unsigned n_, unsigned l_) : p(p_), m(m_), n(n_), l(l_) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p)) throw invalid_input("p must be an odd prime");
    if (m < 2) throw invalid_input("m must be at least 2");
    if (n < 1) throw invalid_input("n must be at least 1");
    if (l < 1 || l >= m) throw invalid_input("l must satisfy 0 < l < m");
    if (m - l > n) throw invalid_input("parameters must satisfy m - l <= n");
    u128 xm = checked_pow(p, m);
    u128 ym = checked_pow(p, n);
    if (xm >= (u128(1) << 62) || ym >= (u128(1) << 62))
      throw invalid_input("p^m and p^n must stay below 2^62");
    if (checked_mul(xm, ym) > (u128(1) << 96))
      throw invalid_input("p^(m+n) must stay below 2^96");
    pm = u64(xm);
    pn = u64(ym);
    pl = u64(checked_pow(p, l));
  }

  bool minimal_nonabelian() const { return l + 1 == m; }

  u128 order() const { return (u128)pm * pn; }

  // The unit 1 + p^l by which y-conjugation scales x-exponents.
  u64 conj_unit() const { return pl + 1; }

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

}  // namespace metablock
