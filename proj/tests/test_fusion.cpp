#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "metablock/fusion.hpp"
#include "metablock/invariants.hpp"

using namespace metablock;

TEST_CASE("canonical automorphism exponent") {
  GroupParams P(3, 2, 1, 1);
  REQUIRE(make_fusion(P, 1).r == 1);
  REQUIRE(make_fusion(P, 2).r == 8);
  REQUIRE(make_fusion(GroupParams(5, 2, 1, 1), 4).r == 7);
  REQUIRE(order_mod_prime_power(make_fusion(GroupParams(7, 2, 1, 1), 3).r, 7, 2) == 3);
  REQUIRE_THROWS_AS(make_fusion(P, 4), invalid_input);
  REQUIRE_THROWS_AS(make_fusion(P, 0), invalid_input);
}

TEST_CASE("alpha is an automorphism fixing y") {
  GroupParams P(5, 2, 1, 1);
  FusionData F = make_fusion(P, 4);
  REQUIRE(apply_alpha({0, 1}, F, P) == Element{0, 1});
  REQUIRE(apply_alpha({1, 0}, F, P) == Element{F.r, 0});
  for (u64 i = 0; i < 200; ++i) {
    Element g{(i * 7) % P.pm, i % P.pn}, h{(i * 11 + 3) % P.pm, (i + 1) % P.pn};
    REQUIRE(apply_alpha(multiply(g, h, P), F, P) ==
            multiply(apply_alpha(g, F, P), apply_alpha(h, F, P), P));
  }
}

TEST_CASE("focal subgroup: derived subgroup at e=1, all of <x> otherwise") {
  GroupParams P(3, 2, 1, 1);
  REQUIRE(focal_subgroup(P, make_fusion(P, 1)).order == 3);
  REQUIRE(focal_subgroup(P, make_fusion(P, 2)).order == 9);
  REQUIRE(focal_subgroup(P, make_fusion(P, 2)).cyclic_decomposition == std::vector<u64>{9});

  GroupParams Q(3, 3, 2, 1);
  REQUIRE(focal_subgroup(Q, make_fusion(Q, 1)).order == 9);
  GroupParams R(5, 3, 1, 2);
  REQUIRE(focal_subgroup(R, make_fusion(R, 2)).order == 125);

  for (GroupParams S : {P, Q, R}) {
    oracle::DenseGroup G(S);
    for (u64 e = 1; e < S.p; ++e) {
      if ((S.p - 1) % e != 0) continue;
      FusionData F = make_fusion(S, e);
      Subgroup closed = focal_subgroup(S, F);
      Subgroup brute = oracle::focal_subgroup(G, F);
      REQUIRE(closed.order == brute.order);
      REQUIRE(normalized_decomposition(closed.cyclic_decomposition) ==
              normalized_decomposition(brute.cyclic_decomposition));
    }
  }
}

TEST_CASE("orbit split counts") {
  REQUIRE(orbit_split_count(GroupParams(3, 2, 1, 1), 2) == 4);
  REQUIRE(orbit_split_count(GroupParams(3, 3, 2, 2), 2) == 45);
  REQUIRE(orbit_split_count(GroupParams(5, 2, 1, 1), 1) == 24);
  REQUIRE_THROWS_AS(orbit_split_count(GroupParams(3, 2, 1, 1), 4), invalid_input);
}

TEST_CASE("alpha-orbit census on the class list") {
  GroupParams P(3, 2, 1, 1);
  FusionData F = make_fusion(P, 2);
  std::vector<FOrbit> orbits = f_classes(P, F, ClassMode::closed_form);
  REQUIRE(orbits.size() == 7);
  for (std::size_t i = 0; i < 3; ++i) {
    REQUIRE(orbits[i].representative == Element{0, i});
    REQUIRE(orbits[i].class_reps.size() == 1);
  }
  for (std::size_t i = 3; i < 7; ++i) REQUIRE(orbits[i].class_reps.size() == 2);
  REQUIRE(orbits[3].representative == Element{1, 0});
  REQUIRE(orbits[6].representative == Element{3, 0});

  // Same partition out of the brute-force class list.
  std::vector<FOrbit> brute = oracle::f_classes(oracle::DenseGroup(P), F);
  REQUIRE(brute.size() == orbits.size());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    REQUIRE(orbits[i].representative == brute[i].representative);
    REQUIRE(orbits[i].class_reps == brute[i].class_reps);
  }

  GroupParams Q(5, 2, 1, 1);
  std::vector<FOrbit> qorbits = f_classes(Q, make_fusion(Q, 4), ClassMode::closed_form);
  REQUIRE(qorbits.size() == 11);  // 5 fixed + 6 split
}

TEST_CASE("orbit data does not depend on the choice of generator exponent") {
  GroupParams P(5, 2, 1, 1);
  const u64 e = 4;
  FusionData canonical = make_fusion(P, e);
  u64 g2 = primitive_root_above(P.p, P.m, least_primitive_root(P.p, P.m));
  u64 phi = P.pm / P.p * (P.p - 1);
  FusionData other{e, pow_mod(g2, phi / e, P.pm)};
  REQUIRE(order_mod_prime_power(other.r, P.p, P.m) == e);
  REQUIRE(other.r != canonical.r);

  std::vector<FOrbit> a = f_classes(P, canonical, ClassMode::closed_form);
  std::vector<FOrbit> b = f_classes(P, other, ClassMode::closed_form);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].representative == b[i].representative);
    std::vector<Element> ra = a[i].class_reps, rb = b[i].class_reps;
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    REQUIRE(ra == rb);
  }
}

TEST_CASE("subsection ledger rows and totals") {
  GroupParams P(3, 2, 1, 1);
  SubsectionLedger led = subsection_ledger(P, 2);
  REQUIRE(led.rows.size() == 2);
  REQUIRE(led.rows[0].label == "y-power subsections");
  REQUIRE(led.rows[0].rep_count == 2);
  REQUIRE(led.rows[0].l_per_rep == 2);
  REQUIRE(led.rows[1].label == "orbit-fused subsections");
  REQUIRE(led.rows[1].rep_count == 4);
  REQUIRE(led.rows[1].l_per_rep == 1);
  REQUIRE(led.total == 8);
  REQUIRE(led.total == subsection_ledger_formula(P, 2));

  REQUIRE(subsection_ledger(GroupParams(5, 2, 1, 1), 4).total == 22);
  REQUIRE(subsection_ledger(GroupParams(3, 3, 2, 2), 2).total == 61);

  // total + l(B) = k at assorted points
  for (u64 e : {u64(1), u64(2)}) {
    for (GroupParams Q : {GroupParams(3, 2, 1, 1), GroupParams(3, 3, 2, 2), GroupParams(3, 4, 3, 3)}) {
      REQUIRE(checked_add(subsection_ledger(Q, e).total, u128(e)) ==
              invariants_reduction(Q, e).k);
    }
  }

  REQUIRE_THROWS_AS(subsection_ledger(GroupParams(3, 3, 2, 1), 2), unsupported_parameters);
  REQUIRE_THROWS_AS(subsection_ledger(P, 4), invalid_input);
  REQUIRE_THROWS_AS(subsection_ledger_formula(GroupParams(3, 3, 2, 1), 2), unsupported_parameters);
}
