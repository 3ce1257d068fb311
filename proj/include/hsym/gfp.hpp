#pragma once

#include <cstdint>
#include <stdexcept>

namespace hsym {

// Arithmetic mod a prime p (p small; products fit in 64 bits).
struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t prime) : p(prime)
    {
        if (prime < 2) throw std::invalid_argument("prime must be >= 2");
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        std::uint64_t r = 1, base = a % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }

    std::uint32_t inv(std::uint32_t a) const
    {
        if (a % p == 0) throw std::domain_error("inverse of zero");
        return pow(a, p - 2);
    }

    std::uint32_t from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
    }
};

inline bool is_prime_u32(std::uint32_t n)
{
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace hsym
