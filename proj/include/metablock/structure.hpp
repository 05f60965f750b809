#pragma once

// Closed forms for the subgroup lattice landmarks and the class theory of D.
//
//   D' = < x^(p^l) >            cyclic of order p^(m-l)
//   Z(D) = < x^(p^(m-l)) > x < y^(p^(m-l)) >   of type (p^l, p^(n-m+l))
//
// Conjugation acts on the x-exponent only: the class of (a, b) is
// { (a', b) : a' = a mod p^sigma } with sigma = min(m, l + min(v(a), v(b))),
// v the p-adic valuation. Class sizes are p^(m - sigma).
//
// The class list, k(D) and the character degrees are exposed for the minimal
// non-abelian case l = m-1 (sizes 1 and p only); everything else goes through
// the enumeration oracle.

#include <utility>
#include <vector>

#include "metablock/element.hpp"
#include "metablock/errors.hpp"
#include "metablock/oracle.hpp"
#include "metablock/subgroup.hpp"

namespace metablock {

inline Subgroup derived_subgroup(const GroupParams& P) {
  Subgroup H;
  H.generators = {Element{P.pl, 0}};
  H.order = P.pm / P.pl;  // p^(m-l)
  H.cyclic_decomposition = {P.pm / P.pl};
  return H;
}

inline Subgroup center(const GroupParams& P) {
  u64 step = P.pm / P.pl;  // p^(m-l); both coordinates are its multiples
  Subgroup H;
  H.generators.push_back({step, 0});
  if (step < P.pn) H.generators.push_back({0, step});
  u64 x_part = P.pl;         // p^l
  u64 y_part = P.pn / step;  // p^(n-m+l)
  H.order = (u128)x_part * y_part;
  H.cyclic_decomposition = {x_part, y_part};
  return H;
}

// sigma = min(m, l + min(v(a), v(b))); the class of u is u shifted by
// p^sigma Z on the x-exponent.
inline unsigned class_exponent(Element u, const GroupParams& P) {
  unsigned va = p_valuation(u.a, P.p, P.m);
  unsigned vb = p_valuation(u.b, P.p, P.m);  // capped at m; only min matters
  unsigned v = va < vb ? va : vb;
  unsigned s = P.l + v;
  return s < P.m ? s : P.m;
}

inline u64 class_size(Element u, const GroupParams& P) {
  require_in_range(u, P);
  u64 size = 1;
  for (unsigned i = class_exponent(u, P); i < P.m; ++i) size *= P.p;
  return size;
}

inline bool is_central(Element u, const GroupParams& P) { return class_size(u, P) == 1; }

// Centralizer of u = (a, b), by solving a(s^d - 1) = c(s^b - 1) mod p^m for
// (c, d). With beta = v(s^b - 1), A = v(a) and delta = max(0, beta - A - l):
// valid d are the multiples of p^delta, and for each the c form one coset of
// p^(m-beta) Z. Generators: the c-kernel and one solution at d = p^delta.
inline Subgroup centralizer(Element u, const GroupParams& P) {
  require_in_range(u, P);
  u64 w = (conj_unit_pow(P, i64(u.b)) + P.pm - 1) % P.pm;  // s^b - 1
  unsigned beta = p_valuation(w, P.p, P.m);
  unsigned A = p_valuation(u.a, P.p, P.m);
  unsigned delta = beta > A + P.l ? beta - (A + P.l) : 0;
  if (delta > P.n) throw internal_error("centralizer: delta out of range");

  u64 p_delta = 1;
  for (unsigned i = 0; i < delta; ++i) p_delta *= P.p;

  Subgroup H;
  if (beta == P.m) {
    // s^b = 1: the condition constrains d only and c is free.
    H.generators.push_back({1, 0});
    if (p_delta < P.pn) H.generators.push_back({0, p_delta});
  } else {
    u64 kernel = P.pm;
    for (unsigned i = 0; i < beta; ++i) kernel /= P.p;  // p^(m-beta)
    H.generators.push_back({kernel, 0});
    // Particular solution at d0 = p^delta (always < p^n when beta < m).
    u64 rhs = mul_mod(u.a, (conj_unit_pow(P, i64(p_delta)) + P.pm - 1) % P.pm, P.pm);
    u64 p_beta = P.pm / kernel;
    if (rhs % p_beta != 0) throw internal_error("centralizer: congruence not solvable");
    u64 c0 = mul_mod(rhs / p_beta, mod_inverse(w / p_beta, kernel), kernel);
    H.generators.push_back({c0, p_delta});
  }
  H.order = checked_pow(P.p, beta + (P.n - delta));  // p^beta * p^(n - delta)

  for (const Element& g : H.generators)
    if (conjugate(u, g, P) != u) throw internal_error("centralizer: generator fails to centralize");
  if (checked_mul(H.order, class_size(u, P)) != P.order())
    throw internal_error("centralizer: order times class size is not |D|");

  bool abelian = true;
  if (H.generators.size() == 2)
    abelian = multiply(H.generators[0], H.generators[1], P) == multiply(H.generators[1], H.generators[0], P);
  if (abelian) {
    u64 o0 = element_order(H.generators[0], P);
    u64 o1 = H.generators.size() == 2 ? element_order(H.generators[1], P) : 1;
    u64 big = o0 > o1 ? o0 : o1;
    u128 rest = exact_div(H.order, big);
    if (rest > big) throw internal_error("centralizer: decomposition not invariant-factor ordered");
    H.cyclic_decomposition = {big};
    if (rest > 1) H.cyclic_decomposition.push_back(u64(rest));
  }
  return H;
}

// Class count for l = m-1: p^(n+m-3) (p^2 + p - 1).
inline u128 class_count(const GroupParams& P) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("class count formula requires l = m-1");
  u128 t = checked_pow(P.p, P.n + P.m - 3);
  return checked_mul(t, (u128)P.p * P.p + P.p - 1);
}

// k(D) = p^(n+m-1) + p^(n+m-2) - p^(n+m-3); equals class_count identically.
inline u128 k_of_D(const GroupParams& P) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("k(D) formula requires l = m-1");
  u128 sum = checked_add(checked_pow(P.p, P.n + P.m - 1), checked_pow(P.p, P.n + P.m - 2));
  return exact_sub(sum, checked_pow(P.p, P.n + P.m - 3));
}

// (degree, multiplicity) pairs: p^(n+m-1) linear characters and
// p^(n+m-2) - p^(n+m-3) of degree p.
inline std::vector<std::pair<u64, u128>> irr_degree_multiset(const GroupParams& P) {
  if (!P.minimal_nonabelian())
    throw unsupported_parameters("character degree formula requires l = m-1");
  u128 linear = checked_pow(P.p, P.n + P.m - 1);
  u128 deg_p = exact_sub(checked_pow(P.p, P.n + P.m - 2), checked_pow(P.p, P.n + P.m - 3));
  return {{1, linear}, {P.p, deg_p}};
}

enum class ClassMode { closed_form, oracle };

// Class list. closed_form needs l = m-1 and materializes members only when
// |D| fits the cap; oracle mode enumerates D (any l) under the cap.
inline std::vector<ConjClass> conjugacy_classes(const GroupParams& P, ClassMode mode,
                                                u64 cap = oracle::kDefaultCap) {
  if (mode == ClassMode::oracle) {
    oracle::DenseGroup G(P, cap);
    return oracle::conjugacy_classes(G);
  }
  if (!P.minimal_nonabelian())
    throw unsupported_parameters("closed-form classes require l = m-1");
  if (class_count(P) > cap)
    throw oracle_cap_exceeded("class list exceeds the materialization cap");
  bool with_members = P.order() <= cap;
  u64 head = P.pm / P.p;  // p^(m-1): representatives have a < p^(m-1) or are central
  std::vector<ConjClass> classes;
  for (u64 b = 0; b < P.pn; ++b) {
    bool b_div = b % P.p == 0;
    if (b_div) {
      for (u64 a = 0; a < P.pm; a += P.p) classes.push_back({{a, b}, 1, {}});
    }
    for (u64 a0 = 0; a0 < head; ++a0) {
      if (b_div && a0 % P.p == 0) continue;  // that line is central singletons
      ConjClass cl{{a0, b}, P.p, {}};
      if (with_members)
        for (u64 t = 0; t < P.p; ++t) cl.members.push_back({a0 + t * head, b});
      classes.push_back(std::move(cl));
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjClass& u, const ConjClass& v) { return u.representative < v.representative; });
  if (with_members)
    for (ConjClass& cl : classes)
      if (cl.members.empty()) cl.members = {cl.representative};
  return classes;
}

}  // namespace metablock
