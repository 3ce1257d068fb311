#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsym/groebner.hpp"
#include "hsym/monomial.hpp"
#include "hsym/rng.hpp"

namespace hsym {

// Homogeneous polynomial with exact integer coefficients, degree d in n
// variables. No zero coefficients are stored.
struct SparsePoly {
    int d = 0;
    int n = 0;
    std::vector<std::pair<Monomial, std::int64_t>> terms; // sorted graded-lex

    static SparsePoly of(int d, int n, std::vector<std::pair<Monomial, std::int64_t>> ts)
    {
        SparsePoly p;
        p.d = d;
        p.n = n;
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return lex_after(a.first, b.first); });
        for (const auto& [m, c] : ts) {
            if (m.deg(n) != d) throw std::invalid_argument("term has wrong degree");
            if (c == 0) continue;
            if (!p.terms.empty() && p.terms.back().first == m) throw std::invalid_argument("duplicate monomial");
            p.terms.emplace_back(m, c);
        }
        return p;
    }

    static SparsePoly from_support(const Support& s, const std::vector<std::int64_t>& coeffs)
    {
        if (static_cast<int>(coeffs.size()) != s.size()) throw std::invalid_argument("coefficient count mismatch");
        std::vector<std::pair<Monomial, std::int64_t>> ts;
        for (int i = 0; i < s.size(); ++i) ts.emplace_back(s.mons[static_cast<std::size_t>(i)], coeffs[static_cast<std::size_t>(i)]);
        return of(s.d, s.n, std::move(ts));
    }

    Support support() const
    {
        std::vector<Monomial> ms;
        for (const auto& [m, c] : terms) ms.push_back(m);
        return Support::of(d, n, std::move(ms));
    }
};

// K-type: x1^{d-1}x2 + x2^{d-1}x3 + ... + xk^{d-1}x1  (k = 1 degenerates to x1^d).
// T-type: x1^{d-1}x2 + ... + x_{k-1}^{d-1}xk + xk^d.
// Y-type (d = 3 only): the chain pair x1..xa, y1..yb glued through z and w.
enum class KtyKind { K, T, Y };

inline SparsePoly make_kty(KtyKind kind, int d, int k_or_a, int b = 0)
{
    std::vector<std::pair<Monomial, std::int64_t>> ts;
    auto pw = [&](int i, int e, int j) { // x_i^e * x_j (j < 0: none)
        Monomial m;
        m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
        if (j >= 0) m.e[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(j)] + 1);
        return m;
    };
    if (kind == KtyKind::K) {
        int k = k_or_a;
        if (k < 1) throw std::invalid_argument("K-type needs k >= 1");
        for (int i = 0; i < k; ++i) ts.emplace_back(pw(i, d - 1, (i + 1) % k), 1);
        return SparsePoly::of(d, k, std::move(ts));
    }
    if (kind == KtyKind::T) {
        int k = k_or_a;
        if (k < 1) throw std::invalid_argument("T-type needs k >= 1");
        for (int i = 0; i + 1 < k; ++i) ts.emplace_back(pw(i, d - 1, i + 1), 1);
        ts.emplace_back(pw(k - 1, d - 1, k - 1), 1);
        return SparsePoly::of(d, k, std::move(ts));
    }
    if (d != 3) throw std::invalid_argument("Y-type requires degree 3");
    int a = k_or_a;
    if (a < 1 || b < 1) throw std::invalid_argument("Y-type needs a, b >= 1");
    int n = a + b + 2;
    int z = a + b, w = a + b + 1;
    for (int i = 0; i + 1 < a; ++i) ts.emplace_back(pw(i, 2, i + 1), 1);
    for (int i = 0; i + 1 < b; ++i) ts.emplace_back(pw(a + i, 2, a + i + 1), 1);
    ts.emplace_back(pw(a - 1, 2, z), 1);     // x_a^2 z
    ts.emplace_back(pw(a + b - 1, 2, z), 1); // y_b^2 z
    ts.emplace_back(pw(z, 2, w), 1);         // z^2 w
    ts.emplace_back(pw(w, 3, -1), 1);        // w^3
    Monomial xyw;                            // x_a y_b w
    xyw.e[static_cast<std::size_t>(a - 1)] = 1;
    xyw.e[static_cast<std::size_t>(a + b - 1)] = 1;
    xyw.e[static_cast<std::size_t>(w)] = 1;
    ts.emplace_back(xyw, 1);
    return SparsePoly::of(3, n, std::move(ts));
}

// Result of the Jacobian zero-locus test mod p: smooth iff the reduced
// Groebner basis of the partials exposes a pure power of every variable.
struct SmoothnessReport {
    bool smooth = false;
    std::vector<std::optional<int>> pure_powers; // per variable
};

inline SmoothnessReport is_smooth_modp(const SparsePoly& fpoly, std::uint32_t p)
{
    if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
    if (fpoly.terms.empty()) throw std::invalid_argument("zero polynomial");
    if (fpoly.d % static_cast<int>(p) == 0)
        throw std::domain_error("Euler obstruction: p divides the degree");
    PrimeField f(p);
    const int n = fpoly.n;

    std::vector<gb::Poly> partials;
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<gb::Mono, std::uint32_t>> ts;
        for (const auto& [m, c] : fpoly.terms) {
            std::uint32_t cr = f.from_int(c);
            if (cr == 0) throw std::invalid_argument("coefficient vanishes mod p");
            int e = m.e[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            Monomial dm = m;
            dm.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e - 1);
            ts.emplace_back(gb::Mono::of(dm, n), f.mul(cr, f.from_int(e)));
        }
        gb::Poly pd = gb::poly_normalize(std::move(ts), f, n);
        if (!pd.zero()) partials.push_back(std::move(pd));
    }

    std::vector<gb::Poly> basis = gb::buchberger(std::move(partials), f, n);
    SmoothnessReport rep;
    rep.pure_powers = gb::pure_power_summary(basis, n);
    rep.smooth = true;
    for (int v = 0; v < n; ++v)
        if (!rep.pure_powers[static_cast<std::size_t>(v)]) {
            rep.smooth = false;
            break;
        }
    return rep;
}

// A prime and a coefficient vector exhibiting a smooth member of the span of
// S over F_p; smoothness there certifies a smooth characteristic-0 member,
// hence largeness of S.
struct SmoothnessCertificate {
    std::uint32_t prime = 0;
    std::vector<std::int64_t> coefficients;      // aligned with S.mons
    std::vector<std::optional<int>> pure_powers; // Groebner leading-term summary
};

inline bool verify_certificate(const Support& s, const SmoothnessCertificate& cert)
{
    SparsePoly f = SparsePoly::from_support(s, cert.coefficients);
    SmoothnessReport rep = is_smooth_modp(f, cert.prime);
    return rep.smooth && rep.pure_powers == cert.pure_powers;
}

struct LargenessVerdict {
    enum class Kind { Large, SmallWitness, Inconclusive } kind = Kind::Inconclusive;
    std::optional<SmoothnessCertificate> certificate;
    std::vector<int> witness_a, witness_b; // 0-based small witness
    int trials_used = 0;

    bool large() const { return kind == Kind::Large; }
    bool small() const { return kind == Kind::SmallWitness; }
};

// true iff M(A;B) over S is empty with |B| < |A|: a sound proof of smallness.
inline bool verify_small_witness(const Support& s, const std::vector<int>& a, const std::vector<int>& b)
{
    if (b.size() >= a.size()) throw std::invalid_argument("small witness needs |B| < |A|");
    return m_set(s, a, b).empty();
}

inline constexpr std::uint32_t kDefaultSmoothPrimes[] = {101, 211, 307};
inline constexpr int kDefaultTrials = 32;

// First scan all M(A;B) patterns with |A| <= 3 > |B| for emptiness (sound
// smallness); then sample random coefficient vectors over each prime, any
// smooth sample proving largeness. Exhausted trials leave Inconclusive.
inline LargenessVerdict certify_large(const Support& s,
                                      int trials = kDefaultTrials,
                                      std::vector<std::uint32_t> primes = {},
                                      std::uint64_t seed = 0)
{
    if (s.empty()) throw std::invalid_argument("certify_large: empty support");
    if (primes.empty()) primes.assign(std::begin(kDefaultSmoothPrimes), std::end(kDefaultSmoothPrimes));

    LargenessVerdict v;

    // Smallness scan, |A| ascending then lexicographic, |B| likewise.
    std::vector<int> idx(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int na = 1; na <= std::min(3, s.n); ++na) {
        std::vector<int> a(static_cast<std::size_t>(na));
        auto rec_a = [&](auto&& self, int pos, int next) -> bool {
            if (pos == na) {
                std::vector<int> rest;
                for (int i = 0; i < s.n; ++i)
                    if (std::find(a.begin(), a.end(), i) == a.end()) rest.push_back(i);
                for (int nb = 0; nb < na; ++nb) {
                    std::vector<int> b(static_cast<std::size_t>(nb));
                    auto rec_b = [&](auto&& selfb, int bpos, int bnext) -> bool {
                        if (bpos == nb) {
                            if (m_set(s, a, b).empty()) {
                                v.kind = LargenessVerdict::Kind::SmallWitness;
                                v.witness_a = a;
                                v.witness_b = b;
                                return true;
                            }
                            return false;
                        }
                        for (std::size_t t = static_cast<std::size_t>(bnext); t < rest.size(); ++t) {
                            b[static_cast<std::size_t>(bpos)] = rest[t];
                            if (selfb(selfb, bpos + 1, static_cast<int>(t) + 1)) return true;
                        }
                        return false;
                    };
                    if (rec_b(rec_b, 0, 0)) return true;
                }
                return false;
            }
            for (int t = next; t < s.n; ++t) {
                a[static_cast<std::size_t>(pos)] = t;
                if (self(self, pos + 1, t + 1)) return true;
            }
            return false;
        };
        if (rec_a(rec_a, 0, 0)) return v;
    }

    // Sampling phase.
    SplitMix64 rng(seed ^ hash_bytes(s.key().data(), s.key().size()));
    for (std::uint32_t p : primes) {
        for (int t = 0; t < trials; ++t) {
            ++v.trials_used;
            std::vector<std::int64_t> coeffs(static_cast<std::size_t>(s.size()));
            for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.range(1, p - 1));
            SmoothnessReport rep = is_smooth_modp(SparsePoly::from_support(s, coeffs), p);
            if (rep.smooth) {
                v.kind = LargenessVerdict::Kind::Large;
                v.certificate = SmoothnessCertificate{p, coeffs, rep.pure_powers};
                return v;
            }
        }
    }
    v.kind = LargenessVerdict::Kind::Inconclusive;
    return v;
}

} // namespace hsym
