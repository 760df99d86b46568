#pragma once

#include <cstdint>
#include <stdexcept>

namespace mahonia {

/// Exact integer type for coefficients. Every arithmetic path goes through
/// the checked helpers below, so overflow raises instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b)
{
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b)
{
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b)
{
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int binomial(int n, int k);

} // namespace mahonia
