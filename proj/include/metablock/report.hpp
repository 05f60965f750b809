#pragma once

// Machine-readable reports. JSON objects are ordered and every big integer
// is a decimal string, so identical inputs serialize to identical bytes and
// downstream consumers keep full precision. Schema:
//   {"params":{"p","m","n","l","e"},
//    "invariants":{"k","k0","k1","l","e"},
//    "checks":[{"name","pass","detail"}],
//    "provenance":"proved"|"extrapolated"}
// CSV rows carry the same fields in the same order, with the block's l and e
// renamed block_l / block_e to keep column names unique.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "metablock/invariants.hpp"
#include "metablock/params.hpp"
#include "metablock/proofs.hpp"
#include "metablock/subgroup.hpp"
#include "metablock/wide.hpp"

namespace metablock {

using ordered_json = nlohmann::ordered_json;

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportRecord {
  GroupParams params;
  u64 e = 1;
  u128 k = 0, k0 = 0, k1 = 0;
  u64 block_l = 0;
  bool proved = false;
  std::vector<CheckResult> checks;

  ReportRecord(const GroupParams& P, u64 e_) : params(P), e(e_) {}
  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

// Invariants plus every bound verdict for one grid point.
inline ReportRecord make_report(const GroupParams& P, u64 e) {
  InvariantSet inv = invariants_reduction(P, e);
  ReportRecord r(P, e);
  r.k = inv.k;
  r.k0 = inv.k0;
  r.k1 = inv.k1;
  r.block_l = inv.l;
  r.proved = inv.proved;
  for (const auto& [name, pass] : bounds_check(P, inv).named())
    r.checks.push_back({name, pass, ""});
  auto [k_ratio_ok, k_vs_group_ok] = malle_navarro_check(P, e);
  r.checks.push_back({"k_over_k0_le_p", k_ratio_ok, ""});
  r.checks.push_back({"k_le_k_of_d", k_vs_group_ok, ""});
  return r;
}

inline ordered_json report_to_json(const ReportRecord& r) {
  ordered_json j;
  j["params"] = {{"p", r.params.p},
                 {"m", r.params.m},
                 {"n", r.params.n},
                 {"l", r.params.l},
                 {"e", r.e}};
  j["invariants"] = {{"k", dec_string(r.k)},
                     {"k0", dec_string(r.k0)},
                     {"k1", dec_string(r.k1)},
                     {"l", r.block_l},
                     {"e", r.e}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["provenance"] = r.proved ? "proved" : "extrapolated";
  return j;
}

inline ReportRecord report_from_json(const ordered_json& j) {
  const auto& pj = j.at("params");
  GroupParams P(pj.at("p").get<u64>(), pj.at("m").get<unsigned>(), pj.at("n").get<unsigned>(),
                pj.at("l").get<unsigned>());
  ReportRecord r(P, pj.at("e").get<u64>());
  const auto& ij = j.at("invariants");
  r.k = parse_u128(ij.at("k").get<std::string>());
  r.k0 = parse_u128(ij.at("k0").get<std::string>());
  r.k1 = parse_u128(ij.at("k1").get<std::string>());
  r.block_l = ij.at("l").get<u64>();
  if (ij.at("e").get<u64>() != r.e) throw invalid_input("report: params.e and invariants.e differ");
  for (const auto& cj : j.at("checks"))
    r.checks.push_back(
        {cj.at("name").get<std::string>(), cj.at("pass").get<bool>(), cj.at("detail").get<std::string>()});
  std::string prov = j.at("provenance").get<std::string>();
  if (prov != "proved" && prov != "extrapolated") throw invalid_input("report: bad provenance tag");
  r.proved = prov == "proved";
  return r;
}

inline std::string csv_header(const ReportRecord& r) {
  std::string h = "p,m,n,l,e,k,k0,k1,block_l,block_e";
  for (const auto& c : r.checks) h += "," + c.name;
  return h + ",provenance";
}

inline std::string csv_row(const ReportRecord& r) {
  std::string row = dec_string(u128(r.params.p)) + "," + std::to_string(r.params.m) + "," +
                    std::to_string(r.params.n) + "," + std::to_string(r.params.l) + "," +
                    dec_string(u128(r.e)) + "," + dec_string(r.k) + "," + dec_string(r.k0) + "," +
                    dec_string(r.k1) + "," + dec_string(u128(r.block_l)) + "," +
                    dec_string(u128(r.e));
  for (const auto& c : r.checks) row += c.pass ? ",true" : ",false";
  return row + "," + (r.proved ? "proved" : "extrapolated");
}

inline ordered_json subgroup_to_json(const Subgroup& H) {
  ordered_json j;
  ordered_json gens = ordered_json::array();
  for (const Element& g : H.generators) gens.push_back({{"a", g.a}, {"b", g.b}});
  j["generators"] = std::move(gens);
  j["order"] = dec_string(H.order);
  ordered_json decomp = ordered_json::array();
  for (u64 d : H.cyclic_decomposition) decomp.push_back(dec_string(u128(d)));
  j["cyclic_decomposition"] = std::move(decomp);
  return j;
}

inline ordered_json certificate_to_json(const Certificate& c) {
  ordered_json j;
  j["name"] = c.name;
  j["kind"] = to_string(c.kind);
  j["applicable"] = c.applicable;
  ordered_json in = ordered_json::object();
  for (const auto& [key, val] : c.inputs) in[key] = val;
  j["inputs"] = std::move(in);
  ordered_json vals = ordered_json::object();
  for (const auto& [key, val] : c.values) vals[key] = val;
  j["values"] = std::move(vals);
  ordered_json w = ordered_json::array();
  for (i64 v : c.witness) w.push_back(v);
  j["witness"] = std::move(w);
  j["search_box"] = c.search_box;
  return j;
}

}  // namespace metablock
