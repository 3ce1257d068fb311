#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace hsym {

// Exact arbitrary-precision integer. Everything in the lattice layer is
// integral; there is no floating point anywhere below the CLI.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline std::int64_t to_i64(const Int& a)
{
    if (a > std::numeric_limits<std::int64_t>::max() ||
        a < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<std::int64_t>(a);
}

// Checked 64-bit helpers for the hot lattice paths. Values there stay tiny
// (difference vectors of exponent tuples); a throw means a logic error.
inline std::int64_t mul64(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("mul64 overflow");
    return r;
}

inline std::int64_t add64(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("add64 overflow");
    return r;
}

inline std::int64_t sub64(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("sub64 overflow");
    return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) return 0;
    return mul64(a / gcd64(a, b), b);
}

// g = x*a + y*b with g = gcd(a,b) >= 0.
inline std::int64_t xgcd64(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y)
{
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, xx = 0;
    std::int64_t old_y = 0, yy = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Positive remainder: a mod m in [0, m), m > 0.
inline std::int64_t posmod64(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace hsym
