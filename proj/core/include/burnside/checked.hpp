#pragma once

#include <cstdint>

#include "burnside/errors.hpp"

namespace burnside {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in add");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in sub");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in mul");
  return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

// base^exp for exp >= 0.
inline int64_t checked_pow(int64_t base, int64_t exp) {
  if (exp < 0) throw OverflowError("negative exponent");
  int64_t r = 1;
  for (int64_t k = 0; k < exp; ++k) r = checked_mul(r, base);
  return r;
}

}  // namespace burnside
