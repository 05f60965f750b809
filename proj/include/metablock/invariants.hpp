#pragma once

// Character-count invariants of a block with defect group D and inertial
// index e, plus the inequality battery they must satisfy. All evaluation is
// exact: formulas run over unsigned 128-bit integers and every rational
// inequality is compared after clearing denominators.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metablock/errors.hpp"
#include "metablock/modarith.hpp"
#include "metablock/params.hpp"
#include "metablock/structure.hpp"
#include "metablock/wide.hpp"

namespace metablock {

struct InvariantSet {
  u128 k = 0;   // irreducible ordinary characters
  u128 k0 = 0;  // height zero
  u128 k1 = 0;  // height one
  u64 l = 0;    // irreducible Brauer characters
  u64 e = 1;    // inertial index
  std::string source;   // which evaluator produced the values
  bool proved = false;  // inside the proved parameter range, not extrapolated
};

inline void require_inertial_index(const GroupParams& P, u64 e) {
  if (e == 0 || (P.p - 1) % e != 0) throw invalid_input("e must divide p - 1");
}

// Parameter sets where the invariant formulas are proved exact rather than
// extrapolated: p = 3 (all m, n), p = 5 with m = 2 (all e), and the
// residue-screened primes {7, 11, 13, 17, 23, 29} with m = 2, e = 2.
inline bool proved_parameters(const GroupParams& P, u64 e) {
  if (P.p == 3) return true;
  if (P.p == 5 && P.m == 2) return true;
  constexpr std::array<u64, 6> screened{7, 11, 13, 17, 23, 29};
  if (P.m == 2 && e == 2)
    for (u64 q : screened)
      if (P.p == q) return true;
  return false;
}

// k0 = ((p^(m-1) - 1)/e + e) p^n. Exact: e | p - 1 | p^(m-1) - 1.
inline u128 k0_amc(const GroupParams& P, u64 e) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("k0 formula requires l = m-1");
  require_inertial_index(P, e);
  u128 q = exact_div(exact_sub(checked_pow(P.p, P.m - 1), 1), e);
  return checked_mul(checked_add(q, e), P.pn);
}

// The complete invariant set for l = m-1:
//   k  = ((p^m + p^(m-1) - p^(m-2) - p)/e + e p) p^(n-1)
//   k1 = (p^(n+m-2) - p^(n+m-3))/e
//   l(B) = e
// Every division is exact because p = 1 mod e. k = k0 + k1 is an identity
// and is re-checked on every call.
inline InvariantSet invariants_reduction(const GroupParams& P, u64 e) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("reduction formulas require l = m-1");
  require_inertial_index(P, e);
  InvariantSet inv;
  inv.e = e;
  inv.l = e;
  inv.k0 = k0_amc(P, e);
  inv.k1 = exact_div(
      exact_sub(checked_pow(P.p, P.n + P.m - 2), checked_pow(P.p, P.n + P.m - 3)), e);
  u128 num = exact_sub(checked_add(checked_pow(P.p, P.m), checked_pow(P.p, P.m - 1)),
                       checked_add(checked_pow(P.p, P.m - 2), P.p));
  inv.k = checked_mul(checked_add(exact_div(num, e), checked_mul(u128(e), P.p)),
                      checked_pow(P.p, P.n - 1));
  if (inv.k != checked_add(inv.k0, inv.k1))
    throw internal_error("invariants_reduction: k != k0 + k1");
  inv.source = "reduction";
  inv.proved = proved_parameters(P, e);
  return inv;
}

struct BoundsReport {
  bool k_lower = false;
  bool k_upper = false;
  bool k0_lower = false;
  bool k0_upper = false;
  bool weighted_sum = false;
  bool l_at_least_e = false;
  bool e_divides_p_minus_1 = false;
  bool pn_divides_k0 = false;
  bool ki_divisibility = false;
  bool heights_cutoff = false;
  // Informational, not part of all(): the cleared-denominator upper bound on
  // k happens to be divisible by e p^2, so the rational bound is an integer.
  bool k_upper_integral = false;

  bool all() const {
    return k_lower && k_upper && k0_lower && k0_upper && weighted_sum && l_at_least_e &&
           e_divides_p_minus_1 && pn_divides_k0 && ki_divisibility && heights_cutoff;
  }
  std::vector<std::pair<std::string, bool>> named() const {
    return {{"k_lower", k_lower},
            {"k_upper", k_upper},
            {"k0_lower", k0_lower},
            {"k0_upper", k0_upper},
            {"weighted_sum", weighted_sum},
            {"l_at_least_e", l_at_least_e},
            {"e_divides_p_minus_1", e_divides_p_minus_1},
            {"pn_divides_k0", pn_divides_k0},
            {"ki_divisibility", ki_divisibility},
            {"heights_cutoff", heights_cutoff}};
  }
};

// Evaluates the inequality battery for general 0 < l < m. heights[i] is the
// number of characters of height i; when absent the vector is (k0, k1) with
// every higher entry zero. Inequalities with denominator e (and the upper
// k bound with denominator e p^2) are cross-multiplied, never rounded:
//   k e     >= p^(n+l) + p^(n+l-1) - p^(n+2l-m-1) - p^n + e^2 p^n
//   k e p^2 <= (p^l - 1 + e^2)(p^(n+m-l) + p^(n+2) - p^n)
//   k0 e    <= p^(n+l) - p^n + e^2 p^n        (and 2 p^n <= k0)
//   e sum_i p^(2i) heights[i] <= p^(n+m) - p^(n+m-l) + e^2 p^(n+m-l)
// plus l >= e, e | p-1, p^n | k0, p^(n-m+l) | heights[i] for i >= 1, and
// heights[i] = 0 for i > 2(m-l). All exponents are nonnegative: n >= m-l
// gives n+2l-m-1 >= l-1 >= 0 and n-m+l >= 0.
inline BoundsReport bounds_check(const GroupParams& P, const InvariantSet& inv,
                                 std::optional<std::vector<u128>> heights = std::nullopt) {
  if (inv.e == 0) throw invalid_input("e must be positive");
  std::vector<u128> ki = heights.value_or(std::vector<u128>{inv.k0, inv.k1});
  const u64 e = inv.e;
  const u128 e2 = checked_mul(u128(e), e);
  const u128 e2pn = checked_mul(e2, P.pn);
  BoundsReport R;
  {
    u128 rhs = checked_add(checked_add(exact_sub(checked_pow(P.p, P.n + P.l),
                                                 checked_pow(P.p, P.n + 2 * P.l - P.m - 1)),
                                       exact_sub(checked_pow(P.p, P.n + P.l - 1), P.pn)),
                           e2pn);
    R.k_lower = checked_mul(inv.k, e) >= rhs;
  }
  {
    u128 f1 = checked_add(exact_sub(checked_pow(P.p, P.l), 1), e2);
    u128 f2 = checked_add(checked_pow(P.p, P.n + P.m - P.l),
                          exact_sub(checked_pow(P.p, P.n + 2), P.pn));
    u128 rhs = checked_mul(f1, f2);
    u128 ep2 = checked_mul(u128(e), checked_mul(u128(P.p), P.p));
    R.k_upper = checked_mul(inv.k, ep2) <= rhs;
    R.k_upper_integral = rhs % ep2 == 0;
  }
  R.k0_lower = inv.k0 >= checked_mul(u128(2), P.pn);
  R.k0_upper =
      checked_mul(inv.k0, e) <= checked_add(exact_sub(checked_pow(P.p, P.n + P.l), P.pn), e2pn);
  {
    u128 lhs = 0;
    for (std::size_t i = 0; i < ki.size(); ++i)
      lhs = checked_add(lhs, checked_mul(checked_pow(P.p, 2 * unsigned(i)), ki[i]));
    u128 pnml = checked_pow(P.p, P.n + P.m - P.l);
    u128 rhs = checked_add(exact_sub(checked_pow(P.p, P.n + P.m), pnml), checked_mul(e2, pnml));
    R.weighted_sum = checked_mul(lhs, e) <= rhs;
  }
  R.l_at_least_e = inv.l >= e;
  R.e_divides_p_minus_1 = (P.p - 1) % e == 0;
  R.pn_divides_k0 = inv.k0 % P.pn == 0;
  {
    u128 d = checked_pow(P.p, P.n + P.l - P.m);
    R.ki_divisibility = true;
    for (std::size_t i = 1; i < ki.size(); ++i)
      if (ki[i] % d != 0) R.ki_divisibility = false;
  }
  {
    R.heights_cutoff = true;
    for (std::size_t i = 2 * std::size_t(P.m - P.l) + 1; i < ki.size(); ++i)
      if (ki[i] != 0) R.heights_cutoff = false;
  }
  return R;
}

// k(B) - l(B) at n = 1: (p^m + p^(m-1) - p^(m-2) - p)/e + e(p - 1).
// Agrees with the subsection ledger total at n = 1 (tested).
inline u128 k_minus_l_n1(const GroupParams& P, u64 e) {
  if (!P.minimal_nonabelian()) throw unsupported_parameters("k - l formula requires l = m-1");
  if (P.n != 1) throw invalid_input("k_minus_l_n1 requires n = 1");
  require_inertial_index(P, e);
  u128 num = exact_sub(checked_add(checked_pow(P.p, P.m), checked_pow(P.p, P.m - 1)),
                       checked_add(checked_pow(P.p, P.m - 2), P.p));
  return checked_add(exact_div(num, e), checked_mul(u128(e), P.p - 1));
}

// Range for the Brauer character count at inertial index e: [e, 2e-1].
inline std::pair<u64, u64> l_bounds(u64 e) {
  if (e == 0) throw invalid_input("e must be positive");
  return {e, 2 * e - 1};
}

// Height-zero count in the p = 3, l = 1 regime, valid for 2 <= m <= n+1:
// always 3^(n+1), independent of m.
inline u128 k0_l1_p3(unsigned m, unsigned n) {
  if (m < 2 || m > n + 1) throw invalid_input("k0_l1_p3 requires 2 <= m <= n+1");
  return checked_pow(3, n + 1);
}

// Orbit structure of the p-power Galois action on the k characters when
// |D| = p^3 (m = 2, n = 1): rows of (orbit_length, orbit_count). The three
// rows always total k, so only e of the characters are p-rational.
inline std::vector<std::pair<u64, u128>> galois_orbit_structure(u64 p, u64 e) {
  if (p < 3 || !is_prime_u64(p)) throw invalid_input("p must be an odd prime");
  if (e == 0 || (p - 1) % e != 0) throw invalid_input("e must divide p - 1");
  u64 q = (p - 1) / e;
  return {{p - 1, u128(q) + e}, {q, 2}, {1, e}};
}

inline u128 galois_orbit_total(const std::vector<std::pair<u64, u128>>& rows) {
  u128 t = 0;
  for (const auto& [len, count] : rows) t = checked_add(t, checked_mul(u128(len), count));
  return t;
}

// Two coarse sanity inequalities on the reduction values:
// first = (k <= p k0), i.e. k/k0 <= p; second = (k <= k(D)).
inline std::pair<bool, bool> malle_navarro_check(const GroupParams& P, u64 e) {
  InvariantSet inv = invariants_reduction(P, e);
  return {inv.k <= checked_mul(inv.k0, P.p), inv.k <= k_of_D(P)};
}

}  // namespace metablock
