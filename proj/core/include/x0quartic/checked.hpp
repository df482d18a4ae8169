#pragma once

#include <cstdint>
#include <string>

#include "x0quartic/error.hpp"

namespace x0quartic::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
    return r;
}

inline std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in int64");
    return static_cast<std::int64_t>(v);
}

}  // namespace x0quartic::checked
