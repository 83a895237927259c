#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cores {

/// Raised when an input violates a documented precondition (non-coprime
/// moduli, a partition that is not an s-core, malformed text, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a value would leave 63-bit signed range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when a construction that the theory guarantees fails anyway.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
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

}  // namespace checked

/// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

inline void require_coprime(std::int64_t s, std::int64_t t) {
    if (std::gcd(s, t) != 1)
        throw DomainError("s=" + std::to_string(s) + " and t=" + std::to_string(t) +
                          " are not coprime");
}

}  // namespace cores
