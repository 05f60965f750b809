#pragma once

// Property sweep: every library-level invariant, evaluated over a parameter
// grid, with brute-force enumeration engaged below a size cap. Points are
// independent, so they can be dispatched to a worker pool; results are
// merged in grid order, which keeps summaries and the first reported
// failure deterministic regardless of --jobs.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "metablock/errors.hpp"
#include "metablock/fusion.hpp"
#include "metablock/invariants.hpp"
#include "metablock/oracle.hpp"
#include "metablock/proofs.hpp"
#include "metablock/report.hpp"
#include "metablock/structure.hpp"

namespace metablock {

// k1_off_by_one simulates a corrupted build: the reported k1 is perturbed
// before the consistency checks run, and the k = k0 + k1 identity must
// catch it at every grid point.
enum class FaultInjection { none, k1_off_by_one };

struct VerifyOptions {
  u64 pmax = 13;
  unsigned mmax = 6;
  unsigned nmax = 6;
  bool skip_oracle = false;
  unsigned jobs = 1;
  u64 oracle_cap = oracle::kDefaultCap;
  FaultInjection fault = FaultInjection::none;
};

struct VerifySummary {
  struct Counter {
    std::string name;
    u64 pass = 0;
    u64 fail = 0;
  };
  std::vector<Counter> counters;  // stable order of first appearance
  u64 total_pass = 0;
  u64 total_fail = 0;
  std::string first_failure;  // "<check> at <context>[: detail]", empty if ok
  bool ok() const { return total_fail == 0; }
};

namespace verify_detail {

struct Entry {
  const char* name;
  bool pass;
  std::string context;
  std::string detail;
};

struct Recorder {
  std::string context;
  std::vector<Entry> entries;

  template <class F>
  void run(const char* name, F&& body) {
    try {
      entries.push_back({name, bool(body()), context, ""});
    } catch (const std::exception& ex) {
      entries.push_back({name, false, context, ex.what()});
    }
  }
};

inline Element random_element(std::mt19937_64& rng, const GroupParams& P) {
  return {rng() % P.pm, rng() % P.pn};
}

inline std::string point_context(const GroupParams& P) {
  return "(p=" + dec_string(u128(P.p)) + ",m=" + std::to_string(P.m) +
         ",n=" + std::to_string(P.n) + ",l=" + std::to_string(P.l) + ")";
}

// Exhaustive associativity over an index-multiplication table; only called
// for |D| <= 729, where the table is ~2 MB and the triple loop is cheap.
inline bool associativity_exhaustive(const oracle::DenseGroup& G) {
  u64 N = G.size;
  std::vector<std::uint32_t> T(N * N);
  for (u64 i = 0; i < N; ++i) {
    Element gi = G.element(i);
    for (u64 j = 0; j < N; ++j)
      T[i * N + j] = std::uint32_t(G.index(G.mul(gi, G.element(j))));
  }
  for (u64 i = 0; i < N; ++i)
    for (u64 j = 0; j < N; ++j) {
      u64 ij = T[i * N + j];
      for (u64 k = 0; k < N; ++k)
        if (T[ij * N + k] != T[i * N + T[j * N + k]]) return false;
    }
  return true;
}

inline void point_checks(const GroupParams& P, const VerifyOptions& opt, Recorder& rec) {
  const u128 order = P.order();
  const bool oracle_on =
      !opt.skip_oracle && order <= opt.oracle_cap && order < (u128(1) << 32);
  std::mt19937_64 rng(0x6d657461ULL ^ (P.p << 24) ^ (u64(P.m) << 16) ^ (u64(P.n) << 8) ^ P.l);
  rec.context = point_context(P);

  rec.run("core.associativity", [&] {
    if (oracle_on && order <= 729) return associativity_exhaustive(oracle::DenseGroup(P, opt.oracle_cap));
    for (int t = 0; t < 100000; ++t) {
      Element g = random_element(rng, P), h = random_element(rng, P), f = random_element(rng, P);
      if (multiply(multiply(g, h, P), f, P) != multiply(g, multiply(h, f, P), P)) return false;
    }
    return true;
  });

  rec.run("core.inverse_identity", [&] {
    if (order <= 10000) {
      for (u64 a = 0; a < P.pm; ++a)
        for (u64 b = 0; b < P.pn; ++b) {
          Element g{a, b};
          if (multiply(g, inverse(g, P), P) != identity()) return false;
          if (multiply(inverse(g, P), g, P) != identity()) return false;
        }
      return true;
    }
    for (int t = 0; t < 10000; ++t) {
      Element g = random_element(rng, P);
      if (multiply(g, inverse(g, P), P) != identity()) return false;
      if (multiply(inverse(g, P), g, P) != identity()) return false;
    }
    return true;
  });

  rec.run("core.conjugation_unit_order", [&] {
    u64 expected = P.pm / P.pl;  // p^(m-l)
    if (pow_mod(P.conj_unit(), expected, P.pm) != 1) return false;
    if (pow_mod(P.conj_unit(), expected / P.p, P.pm) == 1) return false;
    return order_mod_prime_power(P.conj_unit(), P.p, P.m) == expected;
  });

  rec.run("core.generator_orders", [&] {
    return element_order({1, 0}, P) == P.pm && element_order({0, 1}, P) == P.pn;
  });

  Subgroup derived_c = derived_subgroup(P);
  Subgroup center_c = center(P);

  rec.run("structure.landmark_orders", [&] {
    if (derived_c.order != P.pm / P.pl) return false;
    if (center_c.order != checked_pow(P.p, P.n + 2 * P.l - P.m)) return false;
    // D' is generated by the single commutator [y, x] = x^(p^l).
    Element yxy = conjugate({1, 0}, {0, 1}, P);
    if (multiply(yxy, inverse({1, 0}, P), P) != Element{P.pl, 0}) return false;
    for (const Element& z : center_c.generators)
      for (Element g : {Element{1, 0}, Element{0, 1}})
        if (multiply(z, g, P) != multiply(g, z, P)) return false;
    return true;
  });

  if (oracle_on) {
    oracle::DenseGroup G(P, opt.oracle_cap);

    rec.run("core.dense_matches_closed", [&] {
      for (int t = 0; t < 10000; ++t) {
        Element g = random_element(rng, P), h = random_element(rng, P);
        if (G.mul(g, h) != multiply(g, h, P)) return false;
        if (G.inv(g) != inverse(g, P)) return false;
        if (G.conj(g, h) != conjugate(g, h, P)) return false;
      }
      return true;
    });

    rec.run("structure.derived_match", [&] {
      Subgroup o = oracle::derived_subgroup(G);
      if (o.order != derived_c.order) return false;
      if (normalized_decomposition(o.cyclic_decomposition) !=
          normalized_decomposition(derived_c.cyclic_decomposition))
        return false;
      for (const Element& g : o.generators)
        if (g.b != 0 || g.a % P.pl != 0) return false;
      return true;
    });

    rec.run("structure.center_match", [&] {
      Subgroup o = oracle::center(G);
      if (o.order != center_c.order) return false;
      if (normalized_decomposition(o.cyclic_decomposition) !=
          normalized_decomposition(center_c.cyclic_decomposition))
        return false;
      for (const Element& g : o.generators)
        if (!is_central(g, P)) return false;
      return true;
    });

    rec.run("structure.centralizer_xy_match", [&] {
      for (Element u : {Element{1, 0}, Element{0, 1}}) {
        Subgroup c = centralizer(u, P);
        Subgroup o = oracle::centralizer(G, u);
        if (c.order != o.order) return false;
        if (c.order != checked_pow(P.p, P.n + P.l)) return false;
        if (normalized_decomposition(c.cyclic_decomposition) !=
            normalized_decomposition(o.cyclic_decomposition))
          return false;
      }
      return true;
    });

    if (order <= 729) {
      rec.run("structure.centralizer_each_element", [&] {
        for (u64 i = 0; i < G.size; ++i) {
          Element u = G.element(i);
          if (centralizer(u, P).order != oracle::centralizer(G, u).order) return false;
        }
        return true;
      });
    }

    std::vector<ConjClass> ocl = oracle::conjugacy_classes(G);

    rec.run("structure.class_equation", [&] {
      u128 total = 0;
      u128 singletons = 0;
      for (const ConjClass& c : ocl) {
        total = checked_add(total, c.size);
        if (c.size == 1) singletons += 1;
        if (c.size != class_size(c.representative, P)) return false;
      }
      return total == order && singletons == center_c.order;
    });

    if (P.minimal_nonabelian()) {
      rec.run("structure.class_partition_match", [&] {
        std::vector<ConjClass> ccl = conjugacy_classes(P, ClassMode::closed_form, opt.oracle_cap);
        if (ccl.size() != ocl.size()) return false;
        for (std::size_t i = 0; i < ccl.size(); ++i) {
          if (ccl[i].representative != ocl[i].representative) return false;
          if (ccl[i].size != ocl[i].size) return false;
          if (ccl[i].members != ocl[i].members) return false;
        }
        return true;
      });
    }
  }

  if (P.minimal_nonabelian()) {
    rec.run("structure.class_count_formula", [&] {
      if (class_count(P) != k_of_D(P)) return false;
      if (class_count(P) <= opt.oracle_cap &&
          conjugacy_classes(P, ClassMode::closed_form, opt.oracle_cap).size() != class_count(P))
        return false;
      return true;
    });
    rec.run("structure.irr_degrees", [&] {
      u128 count = 0, squares = 0;
      for (const auto& [deg, mult] : irr_degree_multiset(P)) {
        count = checked_add(count, mult);
        squares = checked_add(squares, checked_mul(checked_mul(u128(deg), deg), mult));
      }
      return count == k_of_D(P) && squares == order;
    });
  }

  for (u64 e = 1; e < P.p; ++e) {
    if ((P.p - 1) % e != 0) continue;
    rec.context = point_context(P) + "+e=" + dec_string(u128(e));
    FusionData F = make_fusion(P, e);

    rec.run("fusion.alpha_exponent_order", [&] {
      return order_mod_prime_power(F.r, P.p, P.m) == e;
    });

    if (oracle_on) {
      oracle::DenseGroup G(P, opt.oracle_cap);

      rec.run("fusion.alpha_homomorphism", [&] {
        for (u64 i = 0; i < G.size; ++i) {
          Element g = G.element(i);
          Element ag = apply_alpha(g, F, P);
          for (u64 j = 0; j < G.size; ++j) {
            Element h = G.element(j);
            if (apply_alpha(G.mul(g, h), F, P) != G.mul(ag, apply_alpha(h, F, P))) return false;
          }
        }
        return true;
      });

      rec.run("fusion.alpha_outer_order", [&] {
        // alpha^j is inner iff some h conjugates both generators the same
        // way alpha^j moves them; checked against every conjugation map.
        for (u64 j = 1; j <= e; ++j) {
          Element ax{pow_mod(F.r, j, P.pm), 0};
          bool inner = false;
          for (u64 i = 0; i < G.size && !inner; ++i) {
            Element h = G.element(i);
            inner = G.conj({1, 0}, h) == ax && G.conj({0, 1}, h) == Element{0, 1};
          }
          if (inner != (j == e)) return false;
        }
        return true;
      });

      rec.run("fusion.focal_match", [&] {
        Subgroup closed = focal_subgroup(P, F);
        Subgroup o = oracle::focal_subgroup(G, F);
        if (o.order != closed.order) return false;
        if (normalized_decomposition(o.cyclic_decomposition) !=
            normalized_decomposition(closed.cyclic_decomposition))
          return false;
        for (const Element& g : o.generators) {
          if (g.b != 0) return false;
          if (F.e == 1 && g.a % P.pl != 0) return false;
        }
        return true;
      });
    }

    bool census_possible = P.minimal_nonabelian() || oracle_on;
    if (census_possible) {
      rec.run("fusion.fixed_class_census", [&] {
        ClassMode mode = P.minimal_nonabelian() ? ClassMode::closed_form : ClassMode::oracle;
        if (mode == ClassMode::closed_form && class_count(P) > opt.oracle_cap) {
          if (!oracle_on) return true;  // neither route fits the cap
          mode = ClassMode::oracle;
        }
        std::vector<FOrbit> orbits = f_classes(P, F, mode, opt.oracle_cap);
        u128 fixed = 0;
        u128 classes_seen = 0;
        for (const FOrbit& orb : orbits) {
          classes_seen = checked_add(classes_seen, orb.class_reps.size());
          bool is_fixed = orb.class_reps.size() == 1;
          if (e == 1) {
            // the identity fixes every class
            if (!is_fixed) return false;
          } else {
            if (is_fixed != (orb.representative.a == 0)) return false;
            if (!is_fixed && orb.class_reps.size() != e) return false;
          }
          fixed += is_fixed;
        }
        if (e > 1 && fixed != P.pn) return false;
        if (P.minimal_nonabelian() && classes_seen != class_count(P)) return false;
        if (P.minimal_nonabelian() &&
            u128(orbits.size()) != checked_add(orbit_split_count(P, e), P.pn))
          return false;
        return true;
      });
    }

    if (P.minimal_nonabelian()) {
      InvariantSet inv = invariants_reduction(P, e);
      if (opt.fault == FaultInjection::k1_off_by_one) inv.k1 = checked_add(inv.k1, 1);

      rec.run("invariants.k_identity", [&] { return inv.k == checked_add(inv.k0, inv.k1); });

      rec.run("invariants.bounds_all_true", [&] { return bounds_check(P, inv).all(); });

      rec.run("invariants.divisibility", [&] {
        return inv.k0 % P.pn == 0 && inv.k1 % checked_pow(P.p, P.n - 1) == 0;
      });

      rec.run("invariants.l_range", [&] {
        auto [lo, hi] = l_bounds(e);
        return lo <= inv.l && inv.l <= hi;
      });

      rec.run("invariants.malle_navarro", [&] {
        auto [ratio_ok, against_group_ok] = malle_navarro_check(P, e);
        return ratio_ok && against_group_ok;
      });

      if (P.m == 2 && P.n == 1) {
        rec.run("invariants.galois_total", [&] {
          return galois_orbit_total(galois_orbit_structure(P.p, e)) == inv.k;
        });
      }

      rec.run("fusion.subsection_ledger", [&] {
        SubsectionLedger led = subsection_ledger(P, e);
        u128 recomputed = 0;
        for (const auto& row : led.rows)
          recomputed = checked_add(recomputed, checked_mul(row.rep_count, row.l_per_rep));
        if (recomputed != led.total) return false;
        if (led.total != subsection_ledger_formula(P, e)) return false;
        if (checked_add(led.total, u128(e)) != invariants_reduction(P, e).k) return false;
        if (P.n == 1 && k_minus_l_n1(P, e) != led.total) return false;
        return true;
      });

      rec.run("proofs.replay_amc", [&] {
        return replay_amc(P, e).kind == Certificate::Kind::contradiction;
      });
      rec.run("proofs.replay_k2", [&] {
        return replay_k2(P, e).kind == Certificate::Kind::contradiction;
      });

      if (P.n == 1) {
        rec.run("proofs.budget_anchor", [&] {
          return orthogonality_budget(P, CentralTarget::x) == checked_pow(P.p, P.m) &&
                 orthogonality_budget(P, CentralTarget::x_power_p) == checked_pow(P.p, P.m + 1);
        });
      }

      rec.run("report.round_trip", [&] {
        ReportRecord r = make_report(P, e);
        if (report_from_json(report_to_json(r)) != r) return false;
        std::string header = csv_header(r), row = csv_row(r);
        return std::count(header.begin(), header.end(), ',') ==
               std::count(row.begin(), row.end(), ',');
      });
    }
  }
  rec.context = point_context(P);
}

inline void global_checks(Recorder& rec) {
  rec.context = "(global)";

  rec.run("proofs.dynkin_positive_definite", [&] {
    std::mt19937_64 rng(20260823);
    for (int t = 0; t < 10000; ++t) {
      std::size_t len = 1 + rng() % 30;
      std::vector<i64> v(len);
      bool nonzero = false;
      for (auto& c : v) {
        c = i64(rng() % 101) - 50;
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) v[0] = 1;
      if (dynkin_a_form(v) <= 0) return false;
    }
    for (std::size_t k = 1; k <= 20; ++k) {
      std::vector<i64> unit(k, 0), ones(k, 1), tripled(k, 0);
      unit[k / 2] = 1;
      tripled[k / 2] = 3;
      if (dynkin_a_form(unit) != 1) return false;
      if (dynkin_a_form(ones) != 1) return false;
      if (dynkin_a_form(tripled) != 9) return false;
    }
    return true;
  });

  rec.run("proofs.p5_screen", [&] {
    std::vector<Certificate> certs = p5_height_screen();
    if (certs.size() != 3) return false;
    if (certs[0].kind != Certificate::Kind::feasible_witness) return false;
    if (certs[0].witness != std::vector<i64>{0, 5, 0}) return false;
    if (certs[1].kind != Certificate::Kind::infeasible) return false;
    if (certs[2].kind != Certificate::Kind::infeasible) return false;
    // Re-evaluate the witness against both constraints.
    auto [alpha, beta, gamma] = std::tuple{certs[0].witness[0], certs[0].witness[1], certs[0].witness[2]};
    return alpha + 4 * beta + 9 * gamma + 5 * 1 == 25 && alpha + beta + gamma == 5;
  });

  rec.run("proofs.prime_screen_window", [&] {
    std::vector<u64> infeasible;
    for (u64 p = 5; p <= 31; p += 2) {
      if (!is_prime_u64(p)) continue;
      Certificate c = prime_screen(p);
      if (c.applicable && c.kind == Certificate::Kind::infeasible) infeasible.push_back(p);
      if (c.kind == Certificate::Kind::feasible_witness) {
        u64 total = 0;
        for (std::size_t j = 0; j < c.witness.size(); ++j)
          total += u64(c.witness[j]) * ((j + 2) * (j + 2) - 1);
        if (total != (p - 3) / 2) return false;
      }
    }
    return infeasible == std::vector<u64>{7, 11, 13, 17, 23, 29};
  });

  rec.run("proofs.two_squares_window", [&] {
    for (u64 p = 3; p <= 500; p += 2) {
      if (!is_prime_u64(p)) continue;
      Certificate c = two_squares_screen(p);
      if (certificate_feasible(c) != (p % 4 == 1)) return false;
      if (certificate_feasible(c)) {
        u64 a = u64(c.witness[0]), b = u64(c.witness[1]);
        if (a == 0 || b == 0 || (a * a + b * b) % p != 0) return false;
      }
    }
    return true;
  });
}

}  // namespace verify_detail

inline std::vector<GroupParams> sweep_grid(const VerifyOptions& opt) {
  std::vector<GroupParams> points;
  for (u64 p = 3; p <= opt.pmax; p += 2) {
    if (!is_prime_u64(p)) continue;
    for (unsigned m = 2; m <= opt.mmax; ++m)
      for (unsigned n = 1; n <= opt.nmax; ++n)
        for (unsigned l = 1; l < m; ++l) {
          if (m - l > n) continue;
          try {
            points.push_back(GroupParams(p, m, n, l));
          } catch (const invalid_input&) {
            // width bounds exceeded at extreme sweep settings: skip the point
          }
        }
  }
  return points;
}

inline VerifySummary run_verify(const VerifyOptions& opt) {
  std::vector<GroupParams> grid = sweep_grid(opt);
  std::vector<verify_detail::Recorder> results(grid.size());

  unsigned jobs = opt.jobs == 0 ? 1 : opt.jobs;
  if (jobs == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i)
      verify_detail::point_checks(grid[i], opt, results[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += jobs)
          verify_detail::point_checks(grid[i], opt, results[i]);
      });
    for (std::thread& t : pool) t.join();
  }

  verify_detail::Recorder global;
  verify_detail::global_checks(global);
  results.push_back(std::move(global));

  VerifySummary summary;
  for (const verify_detail::Recorder& rec : results)
    for (const verify_detail::Entry& en : rec.entries) {
      std::size_t slot = 0;
      while (slot < summary.counters.size() && summary.counters[slot].name != en.name) ++slot;
      if (slot == summary.counters.size()) summary.counters.push_back({en.name, 0, 0});
      if (en.pass) {
        ++summary.counters[slot].pass;
        ++summary.total_pass;
      } else {
        ++summary.counters[slot].fail;
        ++summary.total_fail;
        if (summary.first_failure.empty()) {
          summary.first_failure = std::string(en.name) + " at " + en.context;
          if (!en.detail.empty()) summary.first_failure += ": " + en.detail;
        }
      }
    }
  return summary;
}

inline std::string format_summary(const VerifySummary& s) {
  std::string out;
  for (const auto& c : s.counters) {
    out += (c.fail == 0 ? "PASS " : "FAIL ");
    out += c.name;
    out += "  " + dec_string(u128(c.pass)) + "/" + dec_string(u128(c.pass + c.fail)) + "\n";
  }
  out += "checks passed: " + dec_string(u128(s.total_pass)) + ", failed: " +
         dec_string(u128(s.total_fail)) + "\n";
  if (!s.ok()) out += "first failure: " + s.first_failure + "\n";
  return out;
}

}  // namespace metablock
