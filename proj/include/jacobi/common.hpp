#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacobi {

using i64 = std::int64_t;

/// Overflow-checked arithmetic. All enumeration-scale quantities fit
/// comfortably in 64 bits; a failed check indicates misuse, not data.
inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace jacobi
