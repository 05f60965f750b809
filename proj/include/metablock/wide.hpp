#pragma once

// 128-bit exact integer helpers. Everything downstream (group orders, class
// counts, block invariants) is computed in u128/i128 with overflow checks, so
// results are exact integers or an exception, never a silent wrap.

#include <cstdint>
#include <string>
#include <string_view>

#include "metablock/errors.hpp"

namespace metablock {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline u128 checked_add(u128 a, u128 b) {
  u128 r;
  if (__builtin_add_overflow(a, b, &r)) throw internal_error("u128 overflow in add");
  return r;
}

inline u128 checked_mul(u128 a, u128 b) {
  u128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw internal_error("u128 overflow in mul");
  return r;
}

inline u128 checked_pow(u128 base, unsigned exp) {
  u128 r = 1;
  while (exp--) r = checked_mul(r, base);
  return r;
}

// a - b with the guarantee a >= b; a violation means a formula was evaluated
// outside its domain.
inline u128 exact_sub(u128 a, u128 b) {
  if (b > a) throw internal_error("exact_sub: negative intermediate");
  return a - b;
}

// a / b asserting b | a. Every closed form divides an integer numerator by e
// or a prime power only after this check.
inline u128 exact_div(u128 a, u128 b) {
  if (b == 0 || a % b != 0) throw internal_error("exact_div: not divisible");
  return a / b;
}

inline i128 checked_mul_i(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw internal_error("i128 overflow in mul");
  return r;
}

inline i128 checked_add_i(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw internal_error("i128 overflow in add");
  return r;
}

inline std::string dec_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

inline std::string dec_string(i128 v) {
  if (v < 0) return "-" + dec_string(u128(0) - u128(v));
  return dec_string(u128(v));
}

inline u128 parse_u128(std::string_view s) {
  if (s.empty()) throw invalid_input("parse_u128: empty string");
  u128 v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw invalid_input("parse_u128: not a decimal digit");
    v = checked_add(checked_mul(v, 10), u128(c - '0'));
  }
  return v;
}

}  // namespace metablock
