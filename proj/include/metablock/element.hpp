#pragma once

// Group elements in the normal form x^a y^b (0 <= a < p^m, 0 <= b < p^n).
// The defining relation y x y^-1 = x^s with s = 1 + p^l collapses every word
// to this form:
//
//   (x^a1 y^b1)(x^a2 y^b2) = x^(a1 + a2 * s^b1) y^(b1 + b2).
//
// s has multiplicative order p^(m-l) mod p^m, so s^b only depends on
// b mod p^(m-l).

#include <compare>

#include "metablock/errors.hpp"
#include "metablock/modarith.hpp"
#include "metablock/params.hpp"

namespace metablock {

struct Element {
  u64 a = 0;
  u64 b = 0;

  friend bool operator==(const Element&, const Element&) = default;
  // Lexicographic (a, b); class representatives are minima in this order.
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline Element identity() { return {0, 0}; }

inline bool in_range(Element g, const GroupParams& P) { return g.a < P.pm && g.b < P.pn; }

inline void require_in_range(Element g, const GroupParams& P) {
  if (!in_range(g, P)) throw invalid_input("element exponents out of range for these parameters");
}

// (1+p^l)^b mod p^m for a signed exponent; reduced mod the order p^(m-l).
inline u64 conj_unit_pow(const GroupParams& P, i64 b) {
  u64 ord = P.pm / P.pl;  // p^(m-l)
  u64 e = b >= 0 ? u64(b) % ord : (ord - u64(-b) % ord) % ord;
  return pow_mod(P.conj_unit(), e, P.pm);
}

inline Element multiply(Element g, Element h, const GroupParams& P) {
  require_in_range(g, P);
  require_in_range(h, P);
  u64 a = (g.a + mul_mod(h.a, conj_unit_pow(P, i64(g.b)), P.pm)) % P.pm;
  u64 b = (g.b + h.b) % P.pn;
  return {a, b};
}

inline Element inverse(Element g, const GroupParams& P) {
  require_in_range(g, P);
  u64 b = (P.pn - g.b) % P.pn;
  u64 a = (P.pm - mul_mod(g.a, conj_unit_pow(P, -i64(g.b)), P.pm)) % P.pm;
  return {a, b};
}

inline Element power(Element g, i64 k, const GroupParams& P) {
  require_in_range(g, P);
  if (k < 0) {
    g = inverse(g, P);
    k = -k;
  }
  Element acc = identity();
  while (k > 0) {
    if (k & 1) acc = multiply(acc, g, P);
    g = multiply(g, g, P);
    k >>= 1;
  }
  return acc;
}

// g^(p^j) by repeated p-th powers; element orders in a p-group are p-powers.
inline u64 element_order(Element g, const GroupParams& P) {
  require_in_range(g, P);
  u64 ord = 1;
  Element cur = g;
  unsigned cap = (P.m > P.n ? P.m : P.n);
  for (unsigned j = 0; j <= cap; ++j) {
    if (cur == identity()) return ord;
    cur = power(cur, i64(P.p), P);
    ord = u64(checked_mul(ord, P.p));
  }
  throw internal_error("element_order: order exceeds exponent bound");
}

// h g h^-1, by the definitional word. The closed forms
//   y-conjugation: (a, b) -> (a(1+p^l), b)
//   x-conjugation: (a, b) -> (a + 1 - (1+p^l)^b, b)
// are exercised against this in the tests and used by the enumeration layer.
inline Element conjugate(Element g, Element h, const GroupParams& P) {
  return multiply(multiply(h, g, P), inverse(h, P), P);
}

}  // namespace metablock
