#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace torus {

// Coefficient rings. Elements over different rings are distinct types.
struct F2 {
    using coeff = std::uint8_t;
    static constexpr const char* name = "f2";
    static constexpr bool signed_ring = false;
    static coeff zero() { return 0; }
    static coeff one() { return 1; }
    static coeff from_int(std::int64_t v) { return static_cast<coeff>(v & 1); }
    static std::int64_t to_int(coeff c) { return c; }
    static coeff add(coeff a, coeff b) { return a ^ b; }
    static coeff mul(coeff a, coeff b) { return a & b; }
    static coeff neg(coeff a) { return a; }
    static bool is_zero(coeff a) { return a == 0; }
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Integers with checked 64-bit arithmetic.
struct Z {
    using coeff = std::int64_t;
    static constexpr const char* name = "z";
    static constexpr bool signed_ring = true;
    static coeff zero() { return 0; }
    static coeff one() { return 1; }
    static coeff from_int(std::int64_t v) { return v; }
    static std::int64_t to_int(coeff c) { return c; }
    static coeff add(coeff a, coeff b) {
        coeff r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
        return r;
    }
    static coeff mul(coeff a, coeff b) {
        coeff r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer coefficient overflow");
        return r;
    }
    static coeff neg(coeff a) { return mul(a, -1); }
    static bool is_zero(coeff a) { return a == 0; }
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) { return Z::add(a, b); }
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) { return Z::mul(a, b); }

// (-1)^k
inline int sign_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace torus
