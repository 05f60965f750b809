#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "metablock/proofs.hpp"

using namespace metablock;

namespace {
std::string value_of(const Certificate& c, const std::string& key) {
  for (const auto& [k, v] : c.values)
    if (k == key) return v;
  FAIL("certificate value missing: " + key);
  return {};
}
}  // namespace

TEST_CASE("inflated height-zero count is refuted by the inequality chain") {
  Certificate c = replay_amc(GroupParams(3, 2, 1, 1), 2);
  REQUIRE(c.kind == Certificate::Kind::contradiction);
  REQUIRE(c.name == "replay_amc");
  REQUIRE(value_of(c, "L") == "42");
  REQUIRE(value_of(c, "U") == "27");
  REQUIRE(value_of(c, "U_prime") == "39");
  REQUIRE(value_of(c, "U_lt_L") == "true");

  Certificate c1 = replay_amc(GroupParams(3, 2, 1, 1), 1);
  REQUIRE(value_of(c1, "L") == "51");
  REQUIRE(value_of(c1, "U") == "27");
  REQUIRE(value_of(c1, "U_prime") == "51");

  Certificate c5 = replay_amc(GroupParams(5, 2, 1, 1), 4);
  REQUIRE(value_of(c5, "L") == "170");
  REQUIRE(value_of(c5, "U") == "125");
  REQUIRE(value_of(c5, "U_prime") == "155");

  REQUIRE_THROWS_AS(replay_amc(GroupParams(3, 3, 2, 1), 2), unsupported_parameters);
  REQUIRE_THROWS_AS(replay_amc(GroupParams(3, 2, 1, 1), 4), invalid_input);
}

TEST_CASE("height-two characters are refuted by the squeeze") {
  Certificate c = replay_k2(GroupParams(3, 2, 1, 1), 2);
  REQUIRE(c.kind == Certificate::Kind::contradiction);
  REQUIRE(value_of(c, "M") == "9");
  REQUIRE(value_of(c, "upper") == "27");
  REQUIRE(value_of(c, "assumed_lower") == "72");

  REQUIRE(value_of(replay_k2(GroupParams(5, 2, 1, 1), 4), "M") == "75");
  REQUIRE(value_of(replay_k2(GroupParams(7, 2, 1, 1), 6), "M") == "245");
}

TEST_CASE("type-A quadratic form") {
  REQUIRE(dynkin_a_form(std::vector<i64>{1}) == 1);
  REQUIRE(dynkin_a_form(std::vector<i64>{1, 2}) == 3);
  REQUIRE(dynkin_a_form(std::vector<i64>{1, 1, 1, 1}) == 1);
  REQUIRE(dynkin_a_form(std::vector<i64>{0, 3, 0}) == 9);
  REQUIRE(dynkin_a_form(std::vector<i64>{-2, 1}) == 7);
  REQUIRE_THROWS_AS(dynkin_a_form(std::vector<i64>{}), invalid_input);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 5000; ++t) {
    std::vector<i64> v(1 + rng() % 30);
    bool nonzero = false;
    for (i64& c : v) {
      c = i64(rng() % 21) - 10;
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) v[0] = 1;
    REQUIRE(dynkin_a_form(v) > 0);
  }
}

TEST_CASE("column-norm budgets at central targets") {
  REQUIRE(orthogonality_budget(GroupParams(3, 2, 1, 1), CentralTarget::x) == 9);
  REQUIRE(orthogonality_budget(GroupParams(3, 2, 1, 1), CentralTarget::x_power_p) == 27);
  REQUIRE(orthogonality_budget(GroupParams(5, 2, 1, 1), CentralTarget::x) == 25);
  REQUIRE(orthogonality_budget(GroupParams(5, 2, 1, 1), CentralTarget::x_power_p) == 125);
  REQUIRE_THROWS_AS(orthogonality_budget(GroupParams(3, 2, 2, 1), CentralTarget::x),
                    unsupported_parameters);
  REQUIRE_THROWS_AS(orthogonality_budget(GroupParams(3, 3, 2, 1), CentralTarget::x),
                    unsupported_parameters);
}

TEST_CASE("height screen at p = 5") {
  std::vector<Certificate> certs = p5_height_screen();
  REQUIRE(certs.size() == 3);

  REQUIRE(certs[0].kind == Certificate::Kind::feasible_witness);
  REQUIRE(certs[0].witness == std::vector<i64>{0, 5, 0});
  REQUIRE(value_of(certs[0], "budget") == "25");
  REQUIRE(value_of(certs[0], "orbit_count") == "5");
  REQUIRE(value_of(certs[0], "target_alpha_4beta_9gamma") == "20");
  REQUIRE(value_of(certs[0], "solution_count") == "1");

  REQUIRE(certs[1].kind == Certificate::Kind::infeasible);
  REQUIRE(value_of(certs[1], "solution_count") == "0");
  REQUIRE(certs[2].kind == Certificate::Kind::infeasible);
  for (const Certificate& c : certs) REQUIRE_FALSE(c.search_box.empty());
}

TEST_CASE("square-weight screen across the prime window") {
  Certificate c5 = prime_screen(5);
  REQUIRE_FALSE(c5.applicable);

  std::vector<u64> infeasible;
  for (u64 p = 5; p <= 31; p += 2) {
    if (!is_prime_u64(p)) continue;
    Certificate c = prime_screen(p);
    if (c.applicable && c.kind == Certificate::Kind::infeasible) infeasible.push_back(p);
  }
  REQUIRE(infeasible == std::vector<u64>{7, 11, 13, 17, 23, 29});

  Certificate c19 = prime_screen(19);
  REQUIRE(c19.kind == Certificate::Kind::feasible_witness);
  REQUIRE(c19.witness == std::vector<i64>{0, 1});  // 8 = 1 * (3^2 - 1)
  Certificate c31 = prime_screen(31);
  REQUIRE(c31.kind == Certificate::Kind::feasible_witness);
  REQUIRE(c31.witness == std::vector<i64>{2, 1});  // 14 = 2*3 + 8
  REQUIRE(value_of(c31, "r_2") == "2");

  REQUIRE_THROWS_AS(prime_screen(3), invalid_input);
  REQUIRE_THROWS_AS(prime_screen(9), invalid_input);
}

TEST_CASE("two-squares residue screen") {
  Certificate c5 = two_squares_screen(5);
  REQUIRE(c5.kind == Certificate::Kind::residue_screen);
  REQUIRE(certificate_feasible(c5));
  REQUIRE(c5.witness == std::vector<i64>{1, 2});

  Certificate c13 = two_squares_screen(13);
  REQUIRE(certificate_feasible(c13));
  REQUIRE(c13.witness == std::vector<i64>{2, 3});

  REQUIRE_FALSE(certificate_feasible(two_squares_screen(3)));
  REQUIRE_FALSE(certificate_feasible(two_squares_screen(7)));
  REQUIRE(two_squares_screen(7).witness.empty());

  for (u64 p = 3; p <= 500; p += 2) {
    if (!is_prime_u64(p)) continue;
    REQUIRE(certificate_feasible(two_squares_screen(p)) == (p % 4 == 1));
  }
  REQUIRE_THROWS_AS(two_squares_screen(2), invalid_input);
  REQUIRE_THROWS_AS(two_squares_screen(15), invalid_input);
}
