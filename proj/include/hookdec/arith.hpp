#pragma once

#include <cstdint>

#include "hookdec/errors.hpp"

namespace hookdec {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(errc::overflow, "integer addition overflow");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(errc::overflow, "integer subtraction overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(errc::overflow, "integer multiplication overflow");
    return r;
}

/// n! with overflow detection (fits in 64 bits through n = 20).
Int factorial(int n);

/// Binomial coefficient; 0 whenever k < 0 or k > n.  Exact at every step.
Int binomial(int n, int k);

/// Product of the odd numbers 1*3*...*(2n-1); the number of perfect
/// matchings of 2n points.
Int double_factorial_odd(int n);

} // namespace hookdec
