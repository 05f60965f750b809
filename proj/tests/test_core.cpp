#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "metablock/element.hpp"
#include "metablock/modarith.hpp"
#include "metablock/params.hpp"
#include "metablock/wide.hpp"

using namespace metablock;

TEST_CASE("checked 128-bit arithmetic is exact or throws") {
  REQUIRE(dec_string(checked_pow(3, 40)) == "12157665459056928801");
  REQUIRE(checked_add(u128(1) << 100, 1) == (u128(1) << 100) + 1);
  REQUIRE_THROWS_AS(checked_mul(u128(1) << 100, u128(1) << 100), internal_error);
  REQUIRE_THROWS_AS(checked_pow(10, 50), internal_error);
  REQUIRE(exact_sub(100, 42) == 58);
  REQUIRE_THROWS_AS(exact_sub(41, 42), internal_error);
  REQUIRE(exact_div(99, 11) == 9);
  REQUIRE_THROWS_AS(exact_div(100, 11), internal_error);
  REQUIRE_THROWS_AS(exact_div(5, 0), internal_error);
  REQUIRE(checked_mul_i(-7, 6) == -42);
  REQUIRE(checked_add_i(i128(1) << 100, -(i128(1) << 100)) == 0);
}

TEST_CASE("decimal strings round-trip through parse_u128") {
  for (u128 v : {u128(0), u128(1), u128(12157665459056928801ull), (u128(1) << 96) + 7}) {
    REQUIRE(parse_u128(dec_string(v)) == v);
  }
  REQUIRE(dec_string(i128(-42)) == "-42");
  REQUIRE(dec_string(i128(0)) == "0");
  REQUIRE_THROWS_AS(parse_u128(""), invalid_input);
  REQUIRE_THROWS_AS(parse_u128("12x3"), invalid_input);
}

TEST_CASE("modular arithmetic basics") {
  REQUIRE(pow_mod(2, 10, 1000) == 24);
  REQUIRE(pow_mod(7, 0, 13) == 1);
  REQUIRE(mul_mod(u64(1) << 40, u64(1) << 40, (u64(1) << 61) + 1) != 0);
  REQUIRE(mod_inverse(4, 9) == 7);
  REQUIRE_THROWS_AS(mod_inverse(3, 9), invalid_input);
  REQUIRE(isqrt_u64(0) == 0);
  REQUIRE(isqrt_u64(15) == 3);
  REQUIRE(isqrt_u64(16) == 4);
  REQUIRE(p_valuation(54, 3, 10) == 3);
  REQUIRE(p_valuation(0, 3, 4) == 4);
}

TEST_CASE("primality and primitive roots") {
  REQUIRE(is_prime_u64(3));
  REQUIRE(is_prime_u64(9973));
  REQUIRE_FALSE(is_prime_u64(1));
  REQUIRE_FALSE(is_prime_u64(9971));
  REQUIRE(prime_factors(360) == std::vector<u64>{2, 3, 5});

  REQUIRE(least_primitive_root(3, 2) == 2);
  REQUIRE(least_primitive_root(5, 2) == 2);
  REQUIRE(least_primitive_root(7, 1) == 3);
  // 2^5 = 5 mod 9 is again primitive; 3 and 4 are not.
  REQUIRE(primitive_root_above(3, 2, 2) == 5);
  REQUIRE(order_mod_prime_power(2, 3, 2) == 6);
  REQUIRE(order_mod_prime_power(4, 3, 2) == 3);
  REQUIRE(order_mod_prime_power(8, 3, 2) == 2);
  REQUIRE_THROWS_AS(multiplicative_order(3, 9, 6, {2, 3}), invalid_input);
}

TEST_CASE("parameter validation") {
  GroupParams P(3, 2, 1, 1);
  REQUIRE(P.pm == 9);
  REQUIRE(P.pn == 3);
  REQUIRE(P.pl == 3);
  REQUIRE(P.conj_unit() == 4);
  REQUIRE(P.minimal_nonabelian());
  REQUIRE(P.order() == 27);

  REQUIRE_FALSE(GroupParams(3, 3, 2, 1).minimal_nonabelian());

  REQUIRE_THROWS_AS(GroupParams(4, 2, 1, 1), invalid_input);
  REQUIRE_THROWS_AS(GroupParams(2, 2, 1, 1), invalid_input);
  REQUIRE_THROWS_WITH(GroupParams(4, 2, 1, 1), "p must be an odd prime");
  REQUIRE_THROWS_AS(GroupParams(3, 1, 1, 0), invalid_input);
  REQUIRE_THROWS_AS(GroupParams(3, 2, 0, 1), invalid_input);
  REQUIRE_THROWS_AS(GroupParams(3, 2, 1, 0), invalid_input);
  REQUIRE_THROWS_AS(GroupParams(3, 2, 1, 2), invalid_input);
  // m - l > n
  REQUIRE_THROWS_AS(GroupParams(3, 3, 1, 1), invalid_input);
  // p^m over the residue width
  REQUIRE_THROWS_AS(GroupParams(3, 40, 1, 39), invalid_input);
  // the widest grid point the wide sweeps touch stays valid
  REQUIRE(GroupParams(31, 8, 8, 7).order() == checked_pow(31, 16));
}

TEST_CASE("group law in normal form") {
  GroupParams P(3, 2, 1, 1);  // s = 4 mod 9
  Element x{1, 0}, y{0, 1};

  REQUIRE(multiply({1, 1}, {1, 1}, P) == Element{5, 2});
  REQUIRE(power({1, 1}, 3, P) == Element{3, 0});
  REQUIRE(element_order({1, 1}, P) == 9);
  REQUIRE(element_order(x, P) == 9);
  REQUIRE(element_order(y, P) == 3);
  REQUIRE(element_order(identity(), P) == 1);

  // y x y^-1 x^-1 = x^(p^l)
  Element comm = multiply(conjugate(x, y, P), inverse(x, P), P);
  REQUIRE(comm == Element{3, 0});
  REQUIRE(conjugate(y, x, P) == Element{6, 1});

  for (u64 a = 0; a < P.pm; ++a)
    for (u64 b = 0; b < P.pn; ++b) {
      Element g{a, b};
      REQUIRE(multiply(g, inverse(g, P), P) == identity());
      REQUIRE(multiply(inverse(g, P), g, P) == identity());
      REQUIRE(power(g, -1, P) == inverse(g, P));
    }

  REQUIRE(conj_unit_pow(P, -1) == 7);  // 4 * 7 = 28 = 1 mod 9
  REQUIRE(conj_unit_pow(P, 3) == 1);   // order p^(m-l) = 3
  REQUIRE_THROWS_AS(multiply({9, 0}, {0, 0}, P), invalid_input);
  REQUIRE_THROWS_AS(require_in_range({0, 3}, P), invalid_input);
}

TEST_CASE("associativity on random triples across parameter shapes") {
  std::mt19937_64 rng(7);
  for (GroupParams P : {GroupParams(3, 2, 1, 1), GroupParams(3, 4, 2, 2), GroupParams(5, 3, 2, 1),
                        GroupParams(7, 2, 3, 1)}) {
    for (int t = 0; t < 2000; ++t) {
      Element g{rng() % P.pm, rng() % P.pn};
      Element h{rng() % P.pm, rng() % P.pn};
      Element f{rng() % P.pm, rng() % P.pn};
      REQUIRE(multiply(multiply(g, h, P), f, P) == multiply(g, multiply(h, f, P), P));
    }
  }
}
