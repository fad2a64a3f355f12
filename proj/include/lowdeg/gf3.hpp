#pragma once

#include <cstdint>

namespace lowdeg {

// Arithmetic in F_3 on values 0, 1, 2.
using trit = std::uint8_t;

inline constexpr trit gf3_add(trit a, trit b) { return static_cast<trit>((a + b) % 3); }
inline constexpr trit gf3_sub(trit a, trit b) { return static_cast<trit>((a + 3 - b) % 3); }
inline constexpr trit gf3_neg(trit a) { return static_cast<trit>((3 - a) % 3); }
inline constexpr trit gf3_mul(trit a, trit b) { return static_cast<trit>((a * b) % 3); }

// Multiplicative inverse of a nonzero element; 1 and 2 are self-inverse.
inline constexpr trit gf3_inv(trit a) { return a; }

inline constexpr trit gf3_pow(trit a, unsigned e) {
  if (e == 0) return 1;
  trit out = a;
  for (unsigned i = 1; i < e; ++i) out = gf3_mul(out, a);
  return out;
}

}  // namespace lowdeg
