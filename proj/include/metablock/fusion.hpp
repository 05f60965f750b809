#pragma once

// Controlled fusion on D: the fusion system is determined by a p'-automorphism
// group of order e | p-1 acting on <x>. Canonical generator
//
//   alpha: x -> x^r, y -> y,   r = g^(phi(p^m)/e) mod p^m,
//
// g the least primitive root mod p^m. Any order-e choice of r generates the
// same subgroup of (Z/p^m)^*, so orbit data does not depend on it (tested).
//
// For e > 1, alpha fixes exactly the p^n classes meeting <y>, and every other
// class lies in an alpha-orbit of length exactly e: for a class not meeting
// <y>, a fixed class would need (r^j - 1) a = 0 mod p^sigma with r^j - 1 a
// p-unit. At e = 1 alpha is the identity and every class is its own orbit.

#include <algorithm>
#include <string>
#include <vector>

#include "metablock/errors.hpp"
#include "metablock/oracle.hpp"
#include "metablock/structure.hpp"

namespace metablock {

struct FusionData {
  u64 e = 1;  // |Out_F(D)|, divides p-1
  u64 r = 1;  // alpha multiplies x-exponents by r
};

inline FusionData make_fusion(const GroupParams& P, u64 e) {
  if (e == 0 || (P.p - 1) % e != 0) throw invalid_input("e must divide p - 1");
  u64 phi = P.pm / P.p * (P.p - 1);
  u64 r = pow_mod(least_primitive_root(P.p, P.m), phi / e, P.pm);
  if (order_mod_prime_power(r, P.p, P.m) != e) throw internal_error("make_fusion: r has wrong order");
  return {e, r};
}

inline Element apply_alpha(Element g, const FusionData& F, const GroupParams& P) {
  require_in_range(g, P);
  return {mul_mod(F.r, g.a, P.pm), g.b};
}

// Focal subgroup: D' for the nilpotent system (e = 1), all of <x> otherwise
// (alpha contributes x^(r-1) with r - 1 prime to p).
inline Subgroup focal_subgroup(const GroupParams& P, const FusionData& F) {
  if (F.e == 1) return derived_subgroup(P);
  Subgroup H;
  H.generators = {Element{1, 0}};
  H.order = P.pm;
  H.cyclic_decomposition = {P.pm};
  return H;
}

// Number of alpha-orbits of non-<y> classes: (class_count - p^n) / e.
// The difference is divisible by e because those orbits are free.
inline u128 orbit_split_count(const GroupParams& P, u64 e) {
  if (e == 0 || (P.p - 1) % e != 0) throw invalid_input("e must divide p - 1");
  return exact_div(exact_sub(class_count(P), P.pn), e);
}

// One alpha-orbit of D-classes: the orbit representative is the least class
// representative, and class_reps walks the orbit in alpha-application order.
struct FOrbit {
  Element representative;
  std::vector<Element> class_reps;
};

namespace detail {
// Least member of the class of u, straight from the class description.
inline Element class_rep_of(Element u, const GroupParams& P) {
  u64 mod = 1;
  for (unsigned i = 0; i < class_exponent(u, P); ++i) mod *= P.p;
  return {u.a % mod, u.b};
}

inline std::vector<FOrbit> alpha_orbits(const std::vector<ConjClass>& classes, const FusionData& F,
                                        const GroupParams& P) {
  std::vector<Element> reps(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) reps[i] = classes[i].representative;
  auto locate = [&](Element rep) {
    auto it = std::lower_bound(reps.begin(), reps.end(), rep);
    if (it == reps.end() || *it != rep) throw internal_error("f_classes: image class not found");
    return std::size_t(it - reps.begin());
  };
  std::vector<char> done(classes.size(), 0);
  std::vector<FOrbit> y_orbits, rest;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (done[i]) continue;
    FOrbit orb;
    orb.representative = reps[i];
    std::size_t cur = i;
    do {
      done[cur] = 1;
      orb.class_reps.push_back(reps[cur]);
      cur = locate(detail::class_rep_of(apply_alpha(reps[cur], F, P), P));
    } while (cur != i);
    bool meets_y = orb.representative.a == 0;  // class of y^b has least member (0, b)
    (meets_y ? y_orbits : rest).push_back(std::move(orb));
  }
  // Powers of y first (ascending exponent; reps sort that way), then the rest.
  y_orbits.insert(y_orbits.end(), rest.begin(), rest.end());
  return y_orbits;
}
}  // namespace detail

inline std::vector<FOrbit> f_classes(const GroupParams& P, const FusionData& F, ClassMode mode,
                                     u64 cap = oracle::kDefaultCap) {
  return detail::alpha_orbits(conjugacy_classes(P, mode, cap), F, P);
}

// k(B) - l(B) as the sum of l(b_u) over non-trivial subsection representatives:
// e for each of the p^n - 1 powers of y, 1 for each orbit-fused class.
struct SubsectionLedger {
  struct Row {
    std::string label;
    u128 rep_count = 0;
    u64 l_per_rep = 1;
  };
  u128 total = 0;
  std::vector<Row> rows;
};

inline SubsectionLedger subsection_ledger(const GroupParams& P, u64 e) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("subsection ledger requires l = m-1");
  if (e == 0 || (P.p - 1) % e != 0) throw invalid_input("e must divide p - 1");
  SubsectionLedger L;
  u128 y_reps = u128(P.pn) - 1;
  u128 fused = orbit_split_count(P, e);
  L.rows.push_back({"y-power subsections", y_reps, e});
  L.rows.push_back({"orbit-fused subsections", fused, 1});
  L.total = checked_add(checked_mul(y_reps, e), fused);
  return L;
}

// Same total as a single closed form:
// ((p^(m-1) + p^(m-2) - p^(m-3) - 1)/e + e) p^n - e, evaluated with the p^n
// factor pulled in first so every intermediate is an integer.
inline u128 subsection_ledger_formula(const GroupParams& P, u64 e) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("subsection ledger requires l = m-1");
  if (e == 0 || (P.p - 1) % e != 0) throw invalid_input("e must divide p - 1");
  u128 num = exact_sub(
      checked_add(checked_pow(P.p, P.n + P.m - 1), checked_pow(P.p, P.n + P.m - 2)),
      checked_add(checked_pow(P.p, P.n + P.m - 3), u128(P.pn)));
  return exact_sub(checked_add(exact_div(num, e), checked_mul(e, P.pn)), e);
}

namespace oracle {

// Closure of { f(g) g^-1 : g in D, f in Inn(D) or f = alpha }. The inner maps
// contribute every commutator; alpha contributes ((r-1)c, 0) for each c.
inline Subgroup focal_subgroup(const DenseGroup& G, const FusionData& F) {
  std::vector<Element> gens = all_commutator_values(G);
  u64 rm1 = (F.r + G.P.pm - 1) % G.P.pm;
  for (u64 c = 0; c < G.P.pm; ++c) gens.push_back({mul_mod(rm1, c, G.P.pm), 0});
  return subgroup_from_elements(G, closure(G, gens));
}

inline std::vector<FOrbit> f_classes(const DenseGroup& G, const FusionData& F) {
  return detail::alpha_orbits(conjugacy_classes(G), F, G.P);
}

}  // namespace oracle

}  // namespace metablock
