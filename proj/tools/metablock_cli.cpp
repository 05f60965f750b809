// Command-line front end. Report data goes to stdout, diagnostics to stderr.
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
// validation error. Identical inputs produce byte-identical stdout.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "metablock/metablock.hpp"

namespace mb = metablock;
using mb::u128;
using mb::u64;

namespace {

u64 default_cap() {
  const char* v = std::getenv("METABLOCK_ORACLE_CAP");
  if (v == nullptr || *v == '\0') return mb::oracle::kDefaultCap;
  u128 cap = mb::parse_u128(v);
  if (cap == 0 || cap > u128(UINT64_MAX)) throw mb::invalid_input("METABLOCK_ORACLE_CAP out of range");
  return u64(cap);
}

std::string element_str(const mb::Element& g) {
  return "x^" + mb::dec_string(u128(g.a)) + " y^" + mb::dec_string(u128(g.b));
}

std::string decomp_str(const std::vector<u64>& decomposition) {
  std::vector<u64> d = mb::normalized_decomposition(decomposition);
  if (d.empty()) return "C1";
  std::string s;
  for (u64 v : d) {
    if (!s.empty()) s += " x ";
    s += "C" + mb::dec_string(u128(v));
  }
  return s;
}

std::string subgroup_str(const mb::Subgroup& H) {
  std::string s = "order " + mb::dec_string(H.order);
  if (!H.cyclic_decomposition.empty()) s += ", type " + decomp_str(H.cyclic_decomposition);
  s += ", generators [";
  for (std::size_t i = 0; i < H.generators.size(); ++i)
    s += (i ? ", " : "") + element_str(H.generators[i]);
  return s + "]";
}

std::string params_str(const mb::GroupParams& P) {
  return "p=" + mb::dec_string(u128(P.p)) + " m=" + std::to_string(P.m) +
         " n=" + std::to_string(P.n) + " l=" + std::to_string(P.l);
}

mb::ordered_json params_json(const mb::GroupParams& P) {
  return {{"p", P.p}, {"m", P.m}, {"n", P.n}, {"l", P.l}};
}

// Closed forms against brute force, used by `structure --oracle`.
bool structure_oracle_agrees(const mb::GroupParams& P, u64 cap, std::string& why) {
  mb::oracle::DenseGroup G(P, cap);
  auto match = [&](const char* what, const mb::Subgroup& closed, const mb::Subgroup& oracle_side) {
    if (closed.order != oracle_side.order ||
        mb::normalized_decomposition(closed.cyclic_decomposition) !=
            mb::normalized_decomposition(oracle_side.cyclic_decomposition)) {
      why = std::string(what) + " mismatch";
      return false;
    }
    return true;
  };
  if (!match("derived subgroup", mb::derived_subgroup(P), mb::oracle::derived_subgroup(G))) return false;
  if (!match("center", mb::center(P), mb::oracle::center(G))) return false;
  for (mb::Element u : {mb::Element{1, 0}, mb::Element{0, 1}})
    if (!match("centralizer", mb::centralizer(u, P), mb::oracle::centralizer(G, u))) return false;
  std::vector<mb::ConjClass> ocl = mb::oracle::conjugacy_classes(G);
  u128 sizes = 0;
  for (const mb::ConjClass& c : ocl) sizes = mb::checked_add(sizes, c.size);
  if (sizes != P.order()) {
    why = "class equation mismatch";
    return false;
  }
  if (P.minimal_nonabelian()) {
    std::vector<mb::ConjClass> ccl = mb::conjugacy_classes(P, mb::ClassMode::closed_form, cap);
    if (ccl.size() != ocl.size()) {
      why = "class count mismatch";
      return false;
    }
    for (std::size_t i = 0; i < ccl.size(); ++i)
      if (ccl[i].representative != ocl[i].representative || ccl[i].size != ocl[i].size ||
          ccl[i].members != ocl[i].members) {
        why = "class partition mismatch at index " + std::to_string(i);
        return false;
      }
  }
  return true;
}

struct StructureArgs {
  u64 p = 0;
  unsigned m = 0, n = 0, l = 0;
  bool oracle = false;
  std::string format = "text";
  std::optional<u64> cap;
};

int cmd_structure(const StructureArgs& a) {
  mb::GroupParams P(a.p, a.m, a.n, a.l);
  u64 cap = a.cap ? *a.cap : default_cap();
  mb::Subgroup derived = mb::derived_subgroup(P);
  mb::Subgroup zcenter = mb::center(P);
  mb::Subgroup cx = mb::centralizer({1, 0}, P);
  mb::Subgroup cy = mb::centralizer({0, 1}, P);

  std::optional<u128> classes;
  std::string classes_source;
  if (P.minimal_nonabelian()) {
    classes = mb::class_count(P);
    classes_source = "closed form";
  } else if (P.order() <= cap) {
    classes = u128(mb::conjugacy_classes(P, mb::ClassMode::oracle, cap).size());
    classes_source = "oracle";
  }

  bool oracle_ok = true;
  std::string why;
  if (a.oracle) oracle_ok = structure_oracle_agrees(P, cap, why);

  if (a.format == "json") {
    mb::ordered_json j;
    j["params"] = params_json(P);
    j["order"] = mb::dec_string(P.order());
    j["derived"] = mb::subgroup_to_json(derived);
    j["center"] = mb::subgroup_to_json(zcenter);
    j["centralizer_x"] = mb::subgroup_to_json(cx);
    j["centralizer_y"] = mb::subgroup_to_json(cy);
    if (classes) {
      j["class_count"] = mb::dec_string(*classes);
      j["class_count_source"] = classes_source;
    }
    if (P.minimal_nonabelian()) {
      j["k_of_d"] = mb::dec_string(mb::k_of_D(P));
      mb::ordered_json degrees = mb::ordered_json::array();
      for (const auto& [deg, mult] : mb::irr_degree_multiset(P))
        degrees.push_back({{"degree", mb::dec_string(u128(deg))}, {"count", mb::dec_string(mult)}});
      j["irr_degrees"] = std::move(degrees);
    }
    if (a.oracle) j["oracle_agrees"] = oracle_ok;
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "p,m,n,l,order,derived_order,center_order,centralizer_x_order,"
                 "centralizer_y_order,class_count,k_of_d\n";
    std::cout << mb::dec_string(u128(P.p)) << "," << P.m << "," << P.n << "," << P.l << ","
              << mb::dec_string(P.order()) << "," << mb::dec_string(derived.order) << ","
              << mb::dec_string(zcenter.order) << "," << mb::dec_string(cx.order) << ","
              << mb::dec_string(cy.order) << "," << (classes ? mb::dec_string(*classes) : "")
              << "," << (P.minimal_nonabelian() ? mb::dec_string(mb::k_of_D(P)) : "") << "\n";
  } else {
    std::cout << "group: " << params_str(P) << ", |D| = " << mb::dec_string(P.order()) << "\n";
    std::cout << "derived subgroup: " << subgroup_str(derived) << "\n";
    std::cout << "center: " << subgroup_str(zcenter) << "\n";
    std::cout << "centralizer of x: " << subgroup_str(cx) << "\n";
    std::cout << "centralizer of y: " << subgroup_str(cy) << "\n";
    if (classes)
      std::cout << "class count: " << mb::dec_string(*classes) << " (" << classes_source << ")\n";
    else
      std::cout << "class count: unavailable (needs l = m-1 or |D| <= cap)\n";
    if (P.minimal_nonabelian()) {
      std::cout << "k(D): " << mb::dec_string(mb::k_of_D(P)) << "\n";
      std::cout << "irreducible degrees:";
      for (const auto& [deg, mult] : mb::irr_degree_multiset(P))
        std::cout << " " << mb::dec_string(mult) << " x degree " << mb::dec_string(u128(deg));
      std::cout << "\n";
    }
    if (a.oracle) std::cout << "closed-form = oracle: " << (oracle_ok ? "OK" : "MISMATCH (" + why + ")") << "\n";
  }
  if (!oracle_ok) {
    std::cerr << "oracle disagreement: " << why << "\n";
    return 1;
  }
  return 0;
}

struct InvariantsArgs {
  u64 p = 0;
  unsigned m = 0, n = 0;
  std::optional<unsigned> l;
  u64 e = 1;
  std::string format = "text";
};

int cmd_invariants(const InvariantsArgs& a) {
  unsigned l = a.l ? *a.l : a.m - 1;
  mb::GroupParams P(a.p, a.m, a.n, l);
  mb::ReportRecord r = mb::make_report(P, a.e);
  bool all_pass = true;
  for (const mb::CheckResult& c : r.checks) all_pass = all_pass && c.pass;

  if (a.format == "json") {
    std::cout << mb::report_to_json(r).dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << mb::csv_header(r) << "\n" << mb::csv_row(r) << "\n";
  } else {
    std::cout << "block invariants: " << params_str(P) << " e=" << mb::dec_string(u128(a.e)) << "\n";
    std::cout << "k  = " << mb::dec_string(r.k) << "\n";
    std::cout << "k0 = " << mb::dec_string(r.k0) << "\n";
    std::cout << "k1 = " << mb::dec_string(r.k1) << "\n";
    std::cout << "l(B) = " << mb::dec_string(u128(r.block_l)) << "\n";
    std::cout << "provenance: " << (r.proved ? "proved" : "extrapolated") << "\n";
    u64 passed = 0;
    for (const mb::CheckResult& c : r.checks) passed += c.pass;
    std::cout << "checks: " << passed << "/" << r.checks.size() << " passed\n";
    for (const mb::CheckResult& c : r.checks)
      if (!c.pass) std::cout << "failed: " << c.name << "\n";
  }
  return all_pass ? 0 : 1;
}

struct FusionArgs {
  u64 p = 0;
  unsigned m = 0, n = 0;
  std::optional<unsigned> l;
  u64 e = 1;
  bool oracle = false;
  std::string format = "text";
  std::optional<u64> cap;
};

int cmd_fusion(const FusionArgs& a) {
  unsigned l = a.l ? *a.l : a.m - 1;
  mb::GroupParams P(a.p, a.m, a.n, l);
  u64 cap = a.cap ? *a.cap : default_cap();
  mb::FusionData F = mb::make_fusion(P, a.e);
  mb::Subgroup focal = mb::focal_subgroup(P, F);

  std::optional<std::vector<mb::FOrbit>> orbits;
  if (P.minimal_nonabelian() && mb::class_count(P) <= cap)
    orbits = mb::f_classes(P, F, mb::ClassMode::closed_form, cap);
  else if (P.order() <= cap)
    orbits = mb::f_classes(P, F, mb::ClassMode::oracle, cap);

  u128 fixed = 0;
  if (orbits)
    for (const mb::FOrbit& orb : *orbits) fixed += orb.class_reps.size() == 1;

  bool oracle_ok = true;
  std::string why;
  if (a.oracle) {
    mb::oracle::DenseGroup G(P, cap);
    mb::Subgroup ofocal = mb::oracle::focal_subgroup(G, F);
    if (ofocal.order != focal.order) {
      oracle_ok = false;
      why = "focal subgroup order mismatch";
    } else if (P.minimal_nonabelian()) {
      std::vector<mb::FOrbit> closed = mb::f_classes(P, F, mb::ClassMode::closed_form, cap);
      std::vector<mb::FOrbit> brute = mb::oracle::f_classes(G, F);
      if (closed.size() != brute.size()) {
        oracle_ok = false;
        why = "orbit count mismatch";
      } else {
        for (std::size_t i = 0; i < closed.size() && oracle_ok; ++i)
          if (closed[i].representative != brute[i].representative ||
              closed[i].class_reps != brute[i].class_reps) {
            oracle_ok = false;
            why = "orbit mismatch at index " + std::to_string(i);
          }
      }
    }
  }

  if (a.format == "json") {
    mb::ordered_json j;
    j["params"] = params_json(P);
    j["e"] = a.e;
    j["r"] = mb::dec_string(u128(F.r));
    j["focal"] = mb::subgroup_to_json(focal);
    if (orbits) {
      mb::ordered_json census;
      census["fixed_classes"] = mb::dec_string(fixed);
      census["total_orbits"] = mb::dec_string(u128(orbits->size()));
      if (P.minimal_nonabelian())
        census["orbit_split_count"] = mb::dec_string(mb::orbit_split_count(P, a.e));
      j["census"] = std::move(census);
    }
    if (P.minimal_nonabelian()) {
      mb::SubsectionLedger led = mb::subsection_ledger(P, a.e);
      mb::ordered_json rows = mb::ordered_json::array();
      for (const auto& row : led.rows)
        rows.push_back({{"label", row.label},
                        {"count", mb::dec_string(row.rep_count)},
                        {"l_per_rep", row.l_per_rep}});
      j["ledger"] = {{"rows", std::move(rows)}, {"total", mb::dec_string(led.total)}};
      j["k_cross_check"] =
          mb::dec_string(mb::checked_add(led.total, u128(mb::invariants_reduction(P, a.e).l)));
    }
    if (a.oracle) j["oracle_agrees"] = oracle_ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fusion system: " << params_str(P) << ", e = " << mb::dec_string(u128(a.e))
              << ", alpha: x -> x^" << mb::dec_string(u128(F.r)) << "\n";
    std::cout << "focal subgroup: " << subgroup_str(focal) << "\n";
    if (orbits) {
      std::cout << "alpha-fixed classes: " << mb::dec_string(fixed) << "\n";
      std::cout << "class orbits: " << orbits->size() << "\n";
    }
    if (P.minimal_nonabelian()) {
      std::cout << "orbit_split_count: " << mb::dec_string(mb::orbit_split_count(P, a.e)) << "\n";
      mb::SubsectionLedger led = mb::subsection_ledger(P, a.e);
      for (const auto& row : led.rows)
        std::cout << "ledger: " << row.label << ": " << mb::dec_string(row.rep_count)
                  << " x l=" << row.l_per_rep << "\n";
      std::cout << "ledger total (k - l): " << mb::dec_string(led.total) << "\n";
      std::cout << "k cross-check: total + l(B) = "
                << mb::dec_string(mb::checked_add(led.total, u128(mb::invariants_reduction(P, a.e).l)))
                << "\n";
    }
    if (a.oracle)
      std::cout << "closed-form = oracle: " << (oracle_ok ? "OK" : "MISMATCH (" + why + ")") << "\n";
  }
  if (!oracle_ok) {
    std::cerr << "oracle disagreement: " << why << "\n";
    return 1;
  }
  return 0;
}

struct VerifyArgs {
  std::vector<u64> sweep;  // pmax mmax nmax
  unsigned jobs = 1;
  bool skip_oracle = false;
  std::optional<u64> cap;
  std::string inject;
};

int cmd_verify(const VerifyArgs& a) {
  mb::VerifyOptions opt;
  if (!a.sweep.empty()) {
    opt.pmax = a.sweep[0];
    opt.mmax = unsigned(a.sweep[1]);
    opt.nmax = unsigned(a.sweep[2]);
  }
  opt.jobs = a.jobs;
  opt.skip_oracle = a.skip_oracle;
  opt.oracle_cap = a.cap ? *a.cap : default_cap();
  if (a.inject == "k1") opt.fault = mb::FaultInjection::k1_off_by_one;
  mb::VerifySummary summary = mb::run_verify(opt);
  std::cout << mb::format_summary(summary);
  return summary.ok() ? 0 : 1;
}

void print_certificate_text(const mb::Certificate& c) {
  std::cout << "certificate " << c.name << ": " << mb::to_string(c.kind)
            << (c.applicable ? "" : " [not applicable]") << "\n";
  std::cout << "  inputs:";
  for (const auto& [k, v] : c.inputs) std::cout << " " << k << "=" << v;
  std::cout << "\n";
  for (const auto& [k, v] : c.values) std::cout << "  " << k << " = " << v << "\n";
  if (!c.witness.empty()) {
    std::cout << "  witness: (";
    for (std::size_t i = 0; i < c.witness.size(); ++i)
      std::cout << (i ? ", " : "") << c.witness[i];
    std::cout << ")\n";
  }
  if (!c.search_box.empty()) std::cout << "  search box: " << c.search_box << "\n";
}

struct ReplayArgs {
  std::string which;
  u64 p = 3;
  unsigned m = 2, n = 1;
  std::optional<unsigned> l;
  u64 e = 1;
  std::vector<u64> range;
  std::string format = "text";
};

int cmd_replay(const ReplayArgs& a) {
  std::vector<mb::Certificate> certs;
  if (a.which == "amc" || a.which == "k2") {
    unsigned l = a.l ? *a.l : a.m - 1;
    mb::GroupParams P(a.p, a.m, a.n, l);
    certs.push_back(a.which == "amc" ? mb::replay_amc(P, a.e) : mb::replay_k2(P, a.e));
  } else if (a.which == "p5") {
    certs = mb::p5_height_screen();
  } else if (a.which == "primes") {
    u64 lo = 5, hi = 31;
    if (!a.range.empty()) {
      lo = a.range[0];
      hi = a.range[1];
    }
    for (u64 p = lo | 1; p <= hi; p += 2)
      if (mb::is_prime_u64(p) && p >= 5) certs.push_back(mb::prime_screen(p));
  } else if (a.which == "two-squares") {
    certs.push_back(mb::two_squares_screen(a.p));
  } else {
    throw mb::invalid_input("unknown replay selector: " + a.which);
  }

  if (a.format == "json") {
    mb::ordered_json j;
    mb::ordered_json arr = mb::ordered_json::array();
    for (const mb::Certificate& c : certs) arr.push_back(mb::certificate_to_json(c));
    j["certificates"] = std::move(arr);
    if (a.which == "primes") {
      mb::ordered_json set = mb::ordered_json::array();
      for (const mb::Certificate& c : certs)
        if (c.applicable && c.kind == mb::Certificate::Kind::infeasible)
          set.push_back(c.inputs.front().second);
      j["infeasible_set"] = std::move(set);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const mb::Certificate& c : certs) print_certificate_text(c);
    if (a.which == "primes") {
      std::cout << "infeasible set: {";
      bool first = true;
      for (const mb::Certificate& c : certs)
        if (c.applicable && c.kind == mb::Certificate::Kind::infeasible) {
          std::cout << (first ? "" : ", ") << c.inputs.front().second;
          first = false;
        }
      std::cout << "}\n";
    }
  }
  return 0;
}

struct OracleArgs {
  u64 p = 0;
  unsigned m = 0, n = 0, l = 0;
  std::optional<u64> cap;
  bool list_classes = false;
  std::string format = "text";
};

int cmd_oracle(const OracleArgs& a) {
  mb::GroupParams P(a.p, a.m, a.n, a.l);
  u64 cap = a.cap ? *a.cap : default_cap();
  mb::oracle::DenseGroup G(P, cap);
  mb::Subgroup derived = mb::oracle::derived_subgroup(G);
  mb::Subgroup zcenter = mb::oracle::center(G);
  mb::Subgroup cx = mb::oracle::centralizer(G, {1, 0});
  mb::Subgroup cy = mb::oracle::centralizer(G, {0, 1});
  std::vector<mb::ConjClass> classes = mb::oracle::conjugacy_classes(G);

  if (a.format == "json") {
    mb::ordered_json j;
    j["params"] = params_json(P);
    j["order"] = mb::dec_string(P.order());
    j["derived"] = mb::subgroup_to_json(derived);
    j["center"] = mb::subgroup_to_json(zcenter);
    j["centralizer_x"] = mb::subgroup_to_json(cx);
    j["centralizer_y"] = mb::subgroup_to_json(cy);
    j["class_count"] = mb::dec_string(u128(classes.size()));
    if (a.list_classes) {
      mb::ordered_json arr = mb::ordered_json::array();
      for (const mb::ConjClass& c : classes)
        arr.push_back({{"representative", element_str(c.representative)},
                       {"size", mb::dec_string(u128(c.size))}});
      j["classes"] = std::move(arr);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "oracle enumeration: " << params_str(P) << ", |D| = " << mb::dec_string(P.order())
              << "\n";
    std::cout << "derived subgroup: " << subgroup_str(derived) << "\n";
    std::cout << "center: " << subgroup_str(zcenter) << "\n";
    std::cout << "centralizer of x: " << subgroup_str(cx) << "\n";
    std::cout << "centralizer of y: " << subgroup_str(cy) << "\n";
    std::cout << "class count: " << classes.size() << "\n";
    if (a.list_classes)
      for (const mb::ConjClass& c : classes)
        std::cout << "class " << element_str(c.representative) << ": size "
                  << mb::dec_string(u128(c.size)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"exact invariants of split metacyclic p-groups and their fusion systems"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "print elapsed milliseconds to stderr");

  int rc = 0;

  StructureArgs sa;
  auto* sc = app.add_subcommand("structure", "subgroup landmarks and class data");
  sc->add_option("--p", sa.p, "odd prime p")->required();
  sc->add_option("--m", sa.m, "exponent m (order of x is p^m)")->required();
  sc->add_option("--n", sa.n, "exponent n (order of y is p^n)")->required();
  sc->add_option("--l", sa.l, "twist exponent l")->required();
  sc->add_flag("--oracle", sa.oracle, "cross-check closed forms against brute force");
  sc->add_option("--format", sa.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  sc->add_option("--cap", sa.cap, "brute-force element cap");
  sc->callback([&] { rc = cmd_structure(sa); });

  InvariantsArgs ia;
  auto* ic = app.add_subcommand("invariants", "block invariant formulas and bound checks");
  ic->add_option("--p", ia.p, "odd prime p")->required();
  ic->add_option("--m", ia.m, "exponent m")->required();
  ic->add_option("--n", ia.n, "exponent n")->required();
  ic->add_option("--l", ia.l, "twist exponent l (default m-1)");
  ic->add_option("--e", ia.e, "inertial index e | p-1")->required();
  ic->add_option("--format", ia.format, "text|json|csv")->check(CLI::IsMember({"text", "json", "csv"}));
  ic->callback([&] { rc = cmd_invariants(ia); });

  FusionArgs fa;
  auto* fc = app.add_subcommand("fusion", "controlled fusion data and subsection ledger");
  fc->add_option("--p", fa.p, "odd prime p")->required();
  fc->add_option("--m", fa.m, "exponent m")->required();
  fc->add_option("--n", fa.n, "exponent n")->required();
  fc->add_option("--l", fa.l, "twist exponent l (default m-1)");
  fc->add_option("--e", fa.e, "inertial index e | p-1")->required();
  fc->add_flag("--oracle", fa.oracle, "cross-check against brute force");
  fc->add_option("--format", fa.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  fc->add_option("--cap", fa.cap, "brute-force element cap");
  fc->callback([&] { rc = cmd_fusion(fa); });

  VerifyArgs va;
  auto* vc = app.add_subcommand("verify", "run the property sweep");
  vc->add_option("--sweep", va.sweep, "pmax mmax nmax")->expected(3);
  vc->add_option("--jobs", va.jobs, "worker threads");
  vc->add_flag("--skip-oracle", va.skip_oracle, "formula-only checks (no enumeration)");
  vc->add_option("--cap", va.cap, "brute-force element cap");
  vc->add_option("--inject-fault", va.inject, "perturb a formula to prove the harness catches it")
      ->check(CLI::IsMember({"k1"}));
  vc->callback([&] { rc = cmd_verify(va); });

  ReplayArgs ra;
  auto* rcmd = app.add_subcommand("replay", "machine-checked proof-step certificates");
  rcmd->add_option("--which", ra.which, "amc|k2|p5|primes|two-squares")->required();
  rcmd->add_option("--p", ra.p, "odd prime p");
  rcmd->add_option("--m", ra.m, "exponent m");
  rcmd->add_option("--n", ra.n, "exponent n");
  rcmd->add_option("--l", ra.l, "twist exponent l (default m-1)");
  rcmd->add_option("--e", ra.e, "inertial index");
  rcmd->add_option("--range", ra.range, "prime range lo hi")->expected(2);
  rcmd->add_option("--format", ra.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  rcmd->callback([&] { rc = cmd_replay(ra); });

  OracleArgs oa;
  auto* oc = app.add_subcommand("oracle", "brute-force enumeration report");
  oc->add_option("--p", oa.p, "odd prime p")->required();
  oc->add_option("--m", oa.m, "exponent m")->required();
  oc->add_option("--n", oa.n, "exponent n")->required();
  oc->add_option("--l", oa.l, "twist exponent l")->required();
  oc->add_option("--cap", oa.cap, "element cap");
  oc->add_flag("--list-classes", oa.list_classes, "list class representatives and sizes");
  oc->add_option("--format", oa.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  oc->callback([&] { rc = cmd_oracle(oa); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const mb::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mb::unsupported_parameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mb::oracle_cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mb::internal_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed_ms=" << ms << "\n";
  }
  return rc;
}
