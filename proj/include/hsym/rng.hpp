#pragma once

#include <cstdint>

namespace hsym {

// splitmix64: tiny, portable, and identical on every platform, which the
// reproducibility contract needs (std::mt19937 + distributions are not
// implementation-stable).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi]; the tiny modulo bias is irrelevant here and
    // determinism matters more.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi)
    {
        return lo + next() % (hi - lo + 1);
    }
};

inline std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL)
{
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace hsym
