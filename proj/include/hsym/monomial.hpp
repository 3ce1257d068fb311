#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsym {

inline constexpr int kMaxVars = 12;

// Exponent vector of a monomial in n variables (n from context, trailing
// entries zero). Degree-d supports keep these in graded-lex order with
// x1 > x2 > ..., i.e. lexicographically descending exponent tuples.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int deg(int n) const
    {
        int s = 0;
        for (int i = 0; i < n; ++i) s += e[static_cast<std::size_t>(i)];
        return s;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

// Enumeration order: graded-lex, largest first (x1^d, x1^{d-1}x2, ...).
inline bool lex_after(const Monomial& a, const Monomial& b)
{
    return a.e > b.e;
}

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_after(a, b); }
};

// All C(d+n-1, n-1) degree-d exponent vectors in n variables, graded-lex.
inline std::vector<Monomial> enumerate_monomials(int d, int n)
{
    if (d < 1 || n < 1 || n > kMaxVars) throw std::invalid_argument("enumerate_monomials: bad (d, n)");
    std::vector<Monomial> out;
    Monomial m;
    // Walk compositions of d into n parts, most-significant first.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            m.e[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(rem);
            out.push_back(m);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            m.e[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(k);
            self(self, pos + 1, rem - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

// A set of degree-d monomials in n variables, kept sorted and duplicate-free.
struct Support {
    int d = 0;
    int n = 0;
    std::vector<Monomial> mons;

    static Support of(int d, int n, std::vector<Monomial> ms)
    {
        Support s;
        s.d = d;
        s.n = n;
        for (const auto& m : ms)
            if (m.deg(n) != d) throw std::invalid_argument("support monomial has wrong degree");
        std::sort(ms.begin(), ms.end(), MonomialOrder{});
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        s.mons = std::move(ms);
        return s;
    }

    int size() const { return static_cast<int>(mons.size()); }
    bool empty() const { return mons.empty(); }

    bool contains(const Monomial& m) const
    {
        return std::binary_search(mons.begin(), mons.end(), m, MonomialOrder{});
    }

    bool operator==(const Support& o) const { return d == o.d && n == o.n && mons == o.mons; }

    std::string key() const
    {
        std::string k;
        k.reserve(static_cast<std::size_t>(size() * n + 8));
        k += std::to_string(d) + ":" + std::to_string(n) + ":";
        for (const auto& m : mons)
            for (int i = 0; i < n; ++i) k += static_cast<char>('0' + m.e[static_cast<std::size_t>(i)]);
        return k;
    }
};

// M(a1,...;b1,...): monomials of S with sum of degrees over A at least d-1
// and degree zero at every index of B. Indices are 0-based here; the CLI
// layer speaks 1-based.
inline Support m_set(const Support& s, const std::vector<int>& a, const std::vector<int>& b)
{
    for (int x : a)
        for (int y : b)
            if (x == y) throw std::invalid_argument("m_set: A and B overlap");
    auto in_range = [&](int i) { return i >= 0 && i < s.n; };
    for (int x : a)
        if (!in_range(x)) throw std::invalid_argument("m_set: index out of range");
    for (int y : b)
        if (!in_range(y)) throw std::invalid_argument("m_set: index out of range");

    std::vector<Monomial> hits;
    for (const auto& m : s.mons) {
        int suma = 0;
        for (int x : a) suma += m.e[static_cast<std::size_t>(x)];
        if (suma < s.d - 1) continue;
        bool zero_b = true;
        for (int y : b)
            if (m.e[static_cast<std::size_t>(y)] != 0) {
                zero_b = false;
                break;
            }
        if (zero_b) hits.push_back(m);
    }
    return Support::of(s.d, s.n, std::move(hits));
}

inline std::string monomial_to_string(const Monomial& m, int n)
{
    std::string s;
    for (int i = 0; i < n; ++i) {
        int k = m.e[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

// Accepts "x1^2*x2", "x4^3", "x1*x5*x6"; whitespace-free factors joined by '*'.
inline Monomial parse_monomial(const std::string& text, int n)
{
    Monomial m;
    std::size_t i = 0;
    auto fail = [&]() { throw std::invalid_argument("bad monomial string: " + text); };
    if (text == "1") return m;
    while (i < text.size()) {
        if (text[i] != 'x') fail();
        ++i;
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail();
        int var = std::stoi(text.substr(i, j - i));
        if (var < 1 || var > n) fail();
        i = j;
        int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) fail();
            exp = std::stoi(text.substr(i, j - i));
            if (exp > 200) fail(); // exponents are tiny degrees, not payloads
            i = j;
        }
        m.e[static_cast<std::size_t>(var - 1)] = static_cast<std::uint8_t>(m.e[static_cast<std::size_t>(var - 1)] + exp);
        if (i < text.size()) {
            if (text[i] != '*') fail();
            ++i;
            if (i == text.size()) fail();
        }
    }
    return m;
}

inline Support parse_support(int d, int n, const std::vector<std::string>& strs)
{
    std::vector<Monomial> ms;
    ms.reserve(strs.size());
    for (const auto& s : strs) ms.push_back(parse_monomial(s, n));
    return Support::of(d, n, std::move(ms));
}

// Difference vector alpha - beta as int rows (for lattice work).
inline std::vector<std::int64_t> diff_vector(const Monomial& a, const Monomial& b, int n)
{
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] =
            static_cast<std::int64_t>(a.e[static_cast<std::size_t>(i)]) - b.e[static_cast<std::size_t>(i)];
    return v;
}

} // namespace hsym
