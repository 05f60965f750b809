#pragma once

// Brute-force route: materialize the group (under a configurable element cap)
// and compute structure by plain enumeration. Deliberately independent of the
// closed forms in structure.hpp; the two routes are confronted by the tests
// and the verify command.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "metablock/element.hpp"
#include "metablock/errors.hpp"
#include "metablock/subgroup.hpp"

namespace metablock::oracle {

// Default enumeration cap: 3^8 elements. Override per call, or via the
// METABLOCK_ORACLE_CAP environment variable in the CLI.
inline constexpr u64 kDefaultCap = 6561;

// Flat-indexed view of D with precomputed conjugation-unit powers, so the
// inner loops of the enumerations stay cheap.
struct DenseGroup {
  GroupParams P;
  u64 size;
  std::vector<u64> tw;      // tw[b] = (1+p^l)^b mod p^m
  std::vector<u64> tw_inv;  // tw_inv[b] = (1+p^l)^-b mod p^m

  DenseGroup(const GroupParams& params, u64 cap = kDefaultCap) : P(params), size(0) {
    if (P.order() > cap) throw oracle_cap_exceeded("group order exceeds the enumeration cap");
    if (P.order() >= (u128(1) << 32)) throw oracle_cap_exceeded("group order exceeds the absolute enumeration bound");
    size = P.pm * P.pn;
    tw.resize(P.pn);
    tw_inv.resize(P.pn);
    u64 s = P.conj_unit(), sinv = mod_inverse(s, P.pm);
    tw[0] = tw_inv[0] = 1;
    for (u64 b = 1; b < P.pn; ++b) {
      tw[b] = mul_mod(tw[b - 1], s, P.pm);
      tw_inv[b] = mul_mod(tw_inv[b - 1], sinv, P.pm);
    }
  }

  u64 index(Element g) const { return g.a * P.pn + g.b; }
  Element element(u64 i) const { return {i / P.pn, i % P.pn}; }

  Element mul(Element g, Element h) const {
    return {(g.a + h.a * tw[g.b] % P.pm) % P.pm, (g.b + h.b) % P.pn};
  }

  Element inv(Element g) const {
    u64 b = (P.pn - g.b) % P.pn;
    return {(P.pm - g.a * tw_inv[g.b] % P.pm) % P.pm, b};
  }

  // h g h^-1 = (g.a * s^h.b + h.a * (1 - s^g.b), g.b)
  Element conj(Element g, Element h) const {
    u64 a = (g.a * tw[h.b] % P.pm + h.a * (1 + P.pm - tw[g.b]) % P.pm) % P.pm;
    return {a, g.b};
  }

  // [h, g] = (h g h^-1) g^-1; always a power of x.
  Element commutator(Element h, Element g) const {
    u64 a = (conj(g, h).a + P.pm - g.a) % P.pm;
    return {a, 0};
  }
};

inline std::vector<Element> closure(const DenseGroup& G, std::vector<Element> gens) {
  std::vector<char> seen(G.size, 0);
  std::vector<Element> elems{identity()};
  seen[G.index(identity())] = 1;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const Element& g : gens) {
      Element next = G.mul(elems[head], g);
      if (!seen[G.index(next)]) {
        seen[G.index(next)] = 1;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

// Small generating set, largest element orders first.
inline std::vector<Element> pick_generators(const DenseGroup& G, const std::vector<Element>& elems) {
  if (elems.size() <= 1) return {};
  std::vector<std::pair<u64, Element>> by_order;
  by_order.reserve(elems.size());
  for (const Element& g : elems) by_order.push_back({element_order(g, G.P), g});
  std::sort(by_order.begin(), by_order.end(),
            [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
  std::vector<Element> gens;
  std::vector<Element> span{identity()};
  for (const auto& [ord, g] : by_order) {
    (void)ord;
    if (std::binary_search(span.begin(), span.end(), g)) continue;
    gens.push_back(g);
    span = closure(G, gens);
    if (span.size() == elems.size()) break;
  }
  return gens;
}

// Invariant-factor orders of an abelian subgroup of D (rank <= 2 here: every
// subgroup of a metacyclic group is metacyclic). Returns {} if non-abelian.
inline std::vector<u64> cyclic_decomposition(const DenseGroup& G, const std::vector<Element>& elems,
                                             const std::vector<Element>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return {};
  u64 max_order = 1;
  u64 killed_by_p = 0;  // |{g : g^p = 1}| = p^rank
  for (const Element& g : elems) {
    u64 ord = element_order(g, G.P);
    max_order = std::max(max_order, ord);
    if (ord <= G.P.p) ++killed_by_p;
  }
  u64 rest = elems.size() / max_order;
  if (elems.size() % max_order != 0) throw internal_error("cyclic_decomposition: order mismatch");
  u64 predicted = (max_order > 1 ? G.P.p : 1) * (rest > 1 ? G.P.p : 1);
  if (predicted != killed_by_p) throw internal_error("cyclic_decomposition: rank exceeds 2");
  if (rest > max_order) throw internal_error("cyclic_decomposition: not an invariant-factor chain");
  std::vector<u64> out{max_order};
  if (rest > 1) out.push_back(rest);
  return out;
}

inline Subgroup subgroup_from_elements(const DenseGroup& G, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  Subgroup H;
  H.order = elems.size();
  H.generators = pick_generators(G, elems);
  H.cyclic_decomposition = cyclic_decomposition(G, elems, H.generators);
  return H;
}

inline std::vector<Element> all_commutator_values(const DenseGroup& G) {
  // [h, g] = a(s^d - 1) + c(1 - s^b) over g = (a, b), h = (c, d); scan all of
  // D x D and collect the distinct values.
  std::vector<char> seen(G.P.pm, 0);
  for (u64 d = 0; d < G.P.pn; ++d) {
    for (u64 b = 0; b < G.P.pn; ++b) {
      u64 scale_g = (G.tw[d] + G.P.pm - 1) % G.P.pm;      // s^d - 1
      u64 scale_h = (1 + G.P.pm - G.tw[b]) % G.P.pm;      // 1 - s^b
      for (u64 a = 0; a < G.P.pm; ++a) {
        u64 base = a * scale_g % G.P.pm;
        for (u64 c = 0; c < G.P.pm; ++c) {
          seen[(base + c * scale_h) % G.P.pm] = 1;
        }
      }
    }
  }
  std::vector<Element> vals;
  for (u64 a = 0; a < G.P.pm; ++a)
    if (seen[a]) vals.push_back({a, 0});
  return vals;
}

inline Subgroup derived_subgroup(const DenseGroup& G) {
  return subgroup_from_elements(G, closure(G, all_commutator_values(G)));
}

inline Subgroup center(const DenseGroup& G) {
  Element x{1, 0}, y{0, 1};
  std::vector<Element> elems;
  for (u64 i = 0; i < G.size; ++i) {
    Element g = G.element(i);
    if (G.mul(g, x) == G.mul(x, g) && G.mul(g, y) == G.mul(y, g)) elems.push_back(g);
  }
  return subgroup_from_elements(G, elems);
}

inline Subgroup centralizer(const DenseGroup& G, Element u) {
  require_in_range(u, G.P);
  std::vector<Element> elems;
  for (u64 i = 0; i < G.size; ++i) {
    Element g = G.element(i);
    if (G.mul(g, u) == G.mul(u, g)) elems.push_back(g);
  }
  return subgroup_from_elements(G, elems);
}

// Orbit partition under conjugation; conjugation by the generators x and y
// already reaches the full inner action. Ascending index order makes every
// representative the lexicographic minimum of its class.
inline std::vector<ConjClass> conjugacy_classes(const DenseGroup& G) {
  Element x{1, 0}, y{0, 1};
  std::vector<char> visited(G.size, 0);
  std::vector<ConjClass> classes;
  for (u64 i = 0; i < G.size; ++i) {
    if (visited[i]) continue;
    ConjClass cl;
    cl.representative = G.element(i);
    std::vector<Element> orbit{cl.representative};
    visited[i] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Element t : {G.conj(orbit[head], x), G.conj(orbit[head], y)}) {
        if (!visited[G.index(t)]) {
          visited[G.index(t)] = 1;
          orbit.push_back(t);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cl.size = orbit.size();
    cl.members = std::move(orbit);
    classes.push_back(std::move(cl));
  }
  return classes;
}

}  // namespace metablock::oracle
