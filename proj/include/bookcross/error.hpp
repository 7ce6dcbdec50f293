#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bookcross {

/// Raised for malformed arguments or documents: bad indices, unsatisfied
/// preconditions, rejected JSON.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact integer result does not fit its type.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// C(a, 2), zero for a < 2.
inline std::int64_t choose2(std::int64_t a) {
    if (a < 2) return 0;
    // one of a, a-1 is even
    return (a % 2 == 0) ? mul(a / 2, a - 1) : mul(a, (a - 1) / 2);
}

}  // namespace checked

}  // namespace bookcross
